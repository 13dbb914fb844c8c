use std::f64::consts::PI;
use std::fmt::Write;

use convex_tri::{Chord, ConvexInstance};

/// Vertex `i` of a regular `n`-gon in mathematical orientation: `v0` at the
/// top, indices running clockwise.
pub fn vertex_position(n: usize, i: usize) -> (f64, f64) {
    let theta = PI / 2.0 - 2.0 * PI * i as f64 / n as f64;
    (theta.cos(), theta.sin())
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// SVG point for vertex `i`, at radius `r`. The y axis of SVG points down.
fn point(n: usize, i: usize, r: f64) -> (String, String) {
    let (x, y) = vertex_position(n, i);
    (num(r * x), num(-r * y))
}

fn line(out: &mut String, n: usize, c: Chord, style: &str) {
    let (x1, y1) = point(n, c.a(), 1.0);
    let (x2, y2) = point(n, c.b(), 1.0);
    writeln!(
        out,
        r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#
    )
    .unwrap();
}

/// Draws the polygon with its forbidden chords dashed red and, when given,
/// the triangulation diagonals solid blue. Output depends only on the input.
pub fn render_svg(inst: &ConvexInstance, diagonals: Option<&[Chord]>) -> String {
    let n = inst.n();
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"480\" height=\"480\">\n",
    );
    let hull: Vec<String> = (0..n)
        .map(|i| {
            let (x, y) = point(n, i, 1.0);
            format!("{x},{y}")
        })
        .collect();
    writeln!(
        out,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="0.012"/>"#,
        hull.join(" ")
    )
    .unwrap();
    for &c in inst.forbidden() {
        line(
            &mut out,
            n,
            c,
            r#"stroke="red" stroke-width="0.01" stroke-dasharray="0.04 0.03""#,
        );
    }
    for &c in diagonals.unwrap_or(&[]) {
        line(&mut out, n, c, r#"stroke="blue" stroke-width="0.01""#);
    }
    for i in 0..n {
        let (x, y) = point(n, i, 1.0);
        writeln!(
            out,
            r#"  <circle cx="{x}" cy="{y}" r="0.025" fill="black"/>"#
        )
        .unwrap();
        let (lx, ly) = point(n, i, 1.11);
        writeln!(
            out,
            r#"  <text x="{lx}" y="{ly}" font-size="0.08" font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">v{i}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
