use convex_tri::{Chord, ConvexInstance};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors met while reading an instance or running a command.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid chord ({a}, {b}) at {location}: {reason}")]
    InvalidChord {
        location: String,
        a: usize,
        b: usize,
        reason: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// On-disk JSON form of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub n: usize,
    pub forbidden: Vec<[usize; 2]>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Reads either `{"n": .., "forbidden": [[i, j], ..]}` or the line form
/// (`n 7`, then `e i j` per chord, `#` starts a comment).
pub fn parse_instance(text: &str) -> Result<ConvexInstance, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

fn parse_json(text: &str) -> Result<ConvexInstance, CliError> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| {
        parse_err(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let located = doc
        .forbidden
        .iter()
        .enumerate()
        .map(|(i, &[a, b])| (format!("forbidden[{i}]"), a, b));
    build(doc.n, "field n", located)
}

fn parse_lines(text: &str) -> Result<ConvexInstance, CliError> {
    let mut n: Option<(usize, String)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let loc = format!("line {}", idx + 1);
        let number = |t: &str| {
            t.parse::<usize>().map_err(|_| {
                parse_err(
                    loc.clone(),
                    format!("expected a vertex count or index, found {t:?}"),
                )
            })
        };
        match tokens.as_slice() {
            ["n", v] => {
                if n.is_some() {
                    return Err(parse_err(loc, "vertex count given twice"));
                }
                n = Some((number(v)?, loc));
            }
            ["e", a, b] => {
                if n.is_none() {
                    return Err(parse_err(loc, "edge before the `n` line"));
                }
                pairs.push((loc.clone(), number(a)?, number(b)?));
            }
            _ => {
                return Err(parse_err(
                    loc,
                    format!("expected `n N` or `e I J`, found {:?}", line.trim()),
                ))
            }
        }
    }
    let (n, loc) = n.ok_or_else(|| parse_err("end of input", "missing `n` line"))?;
    build(n, &loc, pairs)
}

fn build(
    n: usize,
    n_location: &str,
    pairs: impl IntoIterator<Item = (String, usize, usize)>,
) -> Result<ConvexInstance, CliError> {
    if n < 3 {
        return Err(parse_err(
            n_location,
            format!("a polygon needs at least 3 vertices, got {n}"),
        ));
    }
    let mut seen = std::collections::HashMap::new();
    let mut chords = Vec::new();
    for (location, a, b) in pairs {
        let bad = |reason: String| CliError::InvalidChord {
            location: location.clone(),
            a,
            b,
            reason,
        };
        let c = Chord::try_new(n, a, b).map_err(|e| bad(e.to_string()))?;
        if let Some(first) = seen.insert(c, location.clone()) {
            return Err(bad(format!("repeats the chord at {first}")));
        }
        chords.push(c);
    }
    ConvexInstance::from_chords(n, chords).map_err(|e| parse_err(n_location, e.to_string()))
}

/// Canonical JSON form; [`parse_instance`] reads it back unchanged.
pub fn serialize_instance(inst: &ConvexInstance) -> String {
    let doc = InstanceDocument {
        n: inst.n(),
        forbidden: inst.forbidden().iter().map(|c| [c.a(), c.b()]).collect(),
    };
    serde_json::to_string(&doc).expect("instance documents always serialize")
}

pub fn serialize_lines(inst: &ConvexInstance) -> String {
    let mut out = format!("n {}\n", inst.n());
    for c in inst.forbidden() {
        out.push_str(&format!("e {} {}\n", c.a(), c.b()));
    }
    out
}
