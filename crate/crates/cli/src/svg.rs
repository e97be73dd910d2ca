//! Rendering dissections as standalone SVG documents.

use std::fmt::Write as _;

use polycat_core::Dissection;

const SIZE: f64 = 420.0;
const RADIUS: f64 = 180.0;
const LABEL_RADIUS: f64 = 198.0;

/// Position of vertex `i` of an `m`-gon: on a circle, vertex 0 at the top,
/// vertices numbered counterclockwise. SVG's y axis points down, so the
/// y offset is subtracted.
fn vertex(m: usize, i: usize, radius: f64) -> (f64, f64) {
    let theta = std::f64::consts::FRAC_PI_2
        + (i as f64) * std::f64::consts::TAU / (m as f64);
    (SIZE / 2.0 + radius * theta.cos(), SIZE / 2.0 - radius * theta.sin())
}

/// Renders `d` as a complete SVG 1.1 document.
///
/// The polygon sits on a circle with the root edge (m-1, 0) highlighted in
/// red and every vertex labelled with its index. Coordinates are formatted
/// with two decimals, so the output is byte-identical across runs.
pub fn dissection_svg(d: &Dissection) -> String {
    let m = d.m();
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(w, r#"  <title>{}</title>"#, d.canonical_string()).unwrap();

    // Boundary. A digon has no area, so it degenerates to its root edge.
    if m > 2 {
        let mut points = String::new();
        for i in 0..m {
            let (x, y) = vertex(m, i, RADIUS);
            if i > 0 {
                points.push(' ');
            }
            write!(points, "{x:.2},{y:.2}").unwrap();
        }
        writeln!(
            w,
            r##"  <polygon points="{points}" fill="none" stroke="#333333" stroke-width="2"/>"##
        )
        .unwrap();
    }

    // Root edge from vertex m-1 to vertex 0, drawn over the boundary.
    let (rx0, ry0) = vertex(m, m - 1, RADIUS);
    let (rx1, ry1) = vertex(m, 0, RADIUS);
    writeln!(
        w,
        r##"  <line x1="{rx0:.2}" y1="{ry0:.2}" x2="{rx1:.2}" y2="{ry1:.2}" stroke="#cc2222" stroke-width="3"/>"##
    )
    .unwrap();

    for diag in d.diagonals() {
        let (a, b) = diag.endpoints();
        let (x0, y0) = vertex(m, a, RADIUS);
        let (x1, y1) = vertex(m, b, RADIUS);
        writeln!(
            w,
            r##"  <line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="#1f6fb2" stroke-width="1.5"/>"##
        )
        .unwrap();
    }

    for i in 0..m {
        let (x, y) = vertex(m, i, RADIUS);
        writeln!(w, r##"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="#333333"/>"##).unwrap();
        let (lx, ly) = vertex(m, i, LABEL_RADIUS);
        writeln!(
            w,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{i}</text>"#
        )
        .unwrap();
    }

    writeln!(w, "</svg>").unwrap();
    s
}
