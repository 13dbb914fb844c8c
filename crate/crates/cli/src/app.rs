use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use convex_tri::configurations::classify;
use convex_tri::harness::{verify_potential, verify_theorem, TheoremId, VerifyOptions};
use convex_tri::packing::{pack_cycle, pack_petersen, pack_two_regular, Placement};
use convex_tri::skewness::skewness;
use convex_tri::triangulator::{count, decide, extract, verify_chords};
use convex_tri::{Chord, ConvexInstance, Error};
use serde_json::{json, Map, Value};

use crate::io::{parse_instance, CliError};
use crate::svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "convtri",
    version,
    about = "Triangulations of convex complete graphs with forbidden chords"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Instance file, JSON or line form; standard input when absent.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Print the JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write an SVG drawing to this file.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Does K_n - F have a triangulation?
    Decide,
    /// Print one triangulation.
    Triangulate,
    /// Number of triangulations avoiding F.
    Count,
    /// Run the forbidden-configuration classifier.
    Classify,
    /// Largest non-crossing subgraph and convex skewness.
    Skewness,
    /// Place a graph so that its complement triangulates.
    Pack {
        #[command(subcommand)]
        target: PackTarget,
    },
    /// Check a characterization against the dynamic program or the search.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Draw the instance, with a triangulation when one exists.
    Render {
        /// Leave out the triangulation.
        #[arg(long)]
        bare: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum PackTarget {
    /// The cycle C_N.
    Cycle { n: usize },
    /// Disjoint cycles, lengths comma separated.
    TwoRegular {
        #[arg(value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
    /// The generalized Petersen graph P(N, K).
    Petersen { n: usize, k: usize },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY,
            message: message.into(),
        }
    }
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotPackable(_) => EXIT_NEGATIVE,
            Error::ConstructionFault(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text or JSON for stdout, an optional drawing,
/// and the exit code.
struct Report {
    text: String,
    doc: Value,
    drawing: Option<(ConvexInstance, Option<Vec<Chord>>)>,
    code: i32,
}

/// Runs `convtri` on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli).and_then(|r| emit(&cli, r, out)) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "convtri: {}", f.message);
            f.code
        }
    }
}

fn emit(cli: &Cli, report: Report, out: &mut dyn Write) -> Result<i32, Failure> {
    let written = if cli.json {
        let s = serde_json::to_string_pretty(&report.doc).expect("reports serialize");
        writeln!(out, "{s}")
    } else if report.text.is_empty() {
        Ok(())
    } else {
        write!(out, "{}", report.text)
    };
    written.map_err(|e| Failure::input(format!("stdout: {e}")))?;
    if let (Some(path), Some((inst, diagonals))) = (&cli.svg, &report.drawing) {
        std::fs::write(path, render_svg(inst, diagonals.as_deref()))
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    Ok(report.code)
}

fn read_input(cli: &Cli) -> Result<ConvexInstance, Failure> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            s
        }
    };
    Ok(parse_instance(&text)?)
}

fn base(inst: &ConvexInstance) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(inst.n()));
    m.insert("forbidden".into(), json!(inst.forbidden()));
    m.insert("canonical_key".into(), json!(inst.canonical_key()));
    m
}

fn chord_list(chords: &[Chord]) -> String {
    chords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Decide => {
            let inst = read_input(cli)?;
            let ok = decide(&inst);
            let mut doc = base(&inst);
            doc.insert("triangulable".into(), json!(ok));
            let diagonals = extract(&inst).map(|t| t.into_diagonals());
            Ok(Report {
                text: format!("triangulable: {ok}\n"),
                doc: doc.into(),
                drawing: Some((inst, diagonals)),
                code: verdict(ok),
            })
        }
        Command::Triangulate => {
            let inst = read_input(cli)?;
            let t = extract(&inst).map(|t| t.into_diagonals());
            if let Some(d) = &t {
                if !verify_chords(&inst, d) {
                    return Err(Failure::verification(
                        "extracted triangulation failed verification",
                    ));
                }
            }
            let mut doc = base(&inst);
            doc.insert("triangulable".into(), json!(t.is_some()));
            doc.insert("diagonals".into(), json!(t));
            let text = match &t {
                Some(d) => format!("triangulable: true\ndiagonals: {}\n", chord_list(d)),
                None => "triangulable: false\n".into(),
            };
            let code = verdict(t.is_some());
            Ok(Report {
                text,
                doc: doc.into(),
                drawing: Some((inst, t)),
                code,
            })
        }
        Command::Count => {
            let inst = read_input(cli)?;
            let c = count(&inst);
            let ok = c > 0u32.into();
            let mut doc = base(&inst);
            doc.insert("triangulable".into(), json!(ok));
            doc.insert("count".into(), json!(c.to_string()));
            Ok(Report {
                text: format!("triangulations: {c}\n"),
                doc: doc.into(),
                drawing: Some((inst, None)),
                code: verdict(ok),
            })
        }
        Command::Classify => {
            let inst = read_input(cli)?;
            let class = classify(&inst);
            let dp = decide(&inst);
            let predicted = class.predicts_triangulable();
            let tagged = serde_json::to_value(&class).expect("classes serialize");
            let witness = tagged.get("witness").cloned().unwrap_or(Value::Null);
            let mut doc = base(&inst);
            doc.insert("classification".into(), tagged["class"].clone());
            doc.insert("witness".into(), witness.clone());
            doc.insert("triangulable".into(), json!(predicted));
            doc.insert("dp_triangulable".into(), json!(dp));
            let mut text = format!("classification: {}\n", class.label());
            if !witness.is_null() {
                text.push_str(&format!("witness: {witness}\n"));
            }
            text.push_str(&format!("triangulable: {predicted}\n"));
            let code = if predicted != dp {
                text.push_str(&format!(
                    "warning: the dynamic program says triangulable: {dp}\n"
                ));
                EXIT_VERIFY
            } else {
                verdict(predicted)
            };
            Ok(Report {
                text,
                doc: doc.into(),
                drawing: Some((inst, None)),
                code,
            })
        }
        Command::Skewness => {
            let inst = read_input(cli)?;
            let r = skewness(&inst);
            let ok = decide(&inst);
            let mut doc = base(&inst);
            doc.insert("triangulable".into(), json!(ok));
            doc.insert("edges_total".into(), json!(r.edges_total));
            doc.insert("max_plane".into(), json!(r.max_plane));
            doc.insert("sk_c".into(), json!(r.sk_c));
            doc.insert("formula_value".into(), json!(r.formula_value));
            let formula = r
                .formula_value
                .map_or("not applicable".to_string(), |v| v.to_string());
            Ok(Report {
                text: format!(
                    "edges: {}\nmax non-crossing: {}\nsk_c: {}\nformula: {formula}\n",
                    r.edges_total, r.max_plane, r.sk_c
                ),
                doc: doc.into(),
                drawing: Some((inst, None)),
                code: EXIT_OK,
            })
        }
        Command::Pack { target } => pack(target),
        Command::Verify {
            theorem,
            n,
            samples,
            seed,
            jobs,
        } => {
            if cli.svg.is_some() {
                return Err(Failure::input("--svg does not apply to verify"));
            }
            let report = match theorem {
                TheoremId::T4 | TheoremId::T5 => verify_potential(*theorem, *n, *jobs)?,
                _ => {
                    let opts = VerifyOptions {
                        samples: *samples,
                        seed: *seed,
                        jobs: *jobs,
                        ..VerifyOptions::default()
                    };
                    verify_theorem(*theorem, *n, &opts)?
                }
            };
            let mut text = format!(
                "{:?} n={} {}: {} instances, {} classes, {} mismatches ({:.2?})\n",
                report.theorem,
                report.n,
                report.mode,
                report.instances_checked,
                report.canonical_classes_checked,
                report.mismatches.len(),
                report.wall_time
            );
            for m in &report.mismatches {
                text.push_str(&format!(
                    "mismatch {}: truth {} predicted {} ({})\n",
                    m.subject, m.dp_verdict, m.predicted, m.label
                ));
            }
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            };
            Ok(Report {
                text,
                doc: serde_json::to_value(&report).expect("reports serialize"),
                drawing: None,
                code,
            })
        }
        Command::Render { bare } => {
            let inst = read_input(cli)?;
            let diagonals = if *bare {
                None
            } else {
                extract(&inst).map(|t| t.into_diagonals())
            };
            let svg = render_svg(&inst, diagonals.as_deref());
            let mut doc = base(&inst);
            doc.insert("diagonals".into(), json!(diagonals));
            doc.insert("svg".into(), json!(svg));
            let text = if cli.svg.is_some() {
                String::new()
            } else {
                svg
            };
            Ok(Report {
                text,
                doc: doc.into(),
                drawing: Some((inst, diagonals)),
                code: EXIT_OK,
            })
        }
    }
}

fn pack(target: &PackTarget) -> Result<Report, Failure> {
    let (name, built) = match target {
        PackTarget::Cycle { n } => (format!("C{n}"), pack_cycle(*n)),
        PackTarget::TwoRegular { lengths } => {
            let name = lengths
                .iter()
                .map(|l| format!("C{l}"))
                .collect::<Vec<_>>()
                .join(" + ");
            (name, pack_two_regular(lengths))
        }
        PackTarget::Petersen { n, k } => (format!("P({n},{k})"), pack_petersen(*n, *k)),
    };
    let placement: Placement = match built {
        Ok(p) => p,
        Err(Error::NotPackable(why)) => {
            return Ok(Report {
                text: format!("packable: false\nreason: {why}\n"),
                doc: json!({ "graph": name, "packable": false, "reason": why }),
                drawing: None,
                code: EXIT_NEGATIVE,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let diagonals = placement.triangulation();
    if !verify_chords(placement.induced(), &diagonals) {
        return Err(Failure::verification(
            "placement certificate failed verification",
        ));
    }
    let inst = placement.induced().clone();
    let mut doc = serde_json::to_value(&placement).expect("placements serialize");
    let obj = doc
        .as_object_mut()
        .expect("placement documents are objects");
    obj.insert("graph".into(), json!(name));
    obj.insert("packable".into(), json!(true));
    obj.insert("triangulable".into(), json!(true));
    obj.insert("canonical_key".into(), json!(inst.canonical_key()));
    let positions = placement
        .positions()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let text = format!(
        "packable: true\ngraph: {name} on K{}\npositions: {positions}\nforbidden: {}\ndiagonals: {}\nfallback: {}\n",
        inst.n(),
        chord_list(inst.forbidden()),
        chord_list(&diagonals),
        placement.is_fallback()
    );
    Ok(Report {
        text,
        doc,
        drawing: Some((inst, Some(diagonals))),
        code: EXIT_OK,
    })
}
