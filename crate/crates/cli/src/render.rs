//! Deterministic SVG drawings of a graph with optional overlays.

use std::collections::BTreeSet;
use std::fmt::Write;

use proxi_core::{Edge, PlaneGraph};

/// Canvas size along the longer side.
const SIZE: f64 = 800.0;
const MARGIN: f64 = 0.05;

/// What to draw on top of the input graph.
#[derive(Clone, Debug, Default)]
pub struct Overlays<'a> {
    /// Edges of a computed proximity graph, drawn dashed.
    pub graph: Option<&'a BTreeSet<Edge>>,
    /// Constraint edges, drawn bold.
    pub constraints: Option<&'a BTreeSet<Edge>>,
    pub labels: bool,
}

/// Maps data coordinates onto the canvas, y pointing up.
struct Viewport {
    x0: f64,
    y1: f64,
    scale: f64,
    width: f64,
    height: f64,
    bounds: [f64; 4],
}

impl Viewport {
    fn new(pts: &[(f64, f64)]) -> Self {
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (0.0, 0.0, 1.0, 1.0);
        if let Some(&(x, y)) = pts.first() {
            (lo_x, lo_y, hi_x, hi_y) = (x, y, x, y);
            for &(x, y) in pts {
                lo_x = f64::min(lo_x, x);
                lo_y = f64::min(lo_y, y);
                hi_x = f64::max(hi_x, x);
                hi_y = f64::max(hi_y, y);
            }
        }
        let mut extent = f64::max(hi_x - lo_x, hi_y - lo_y);
        if extent == 0.0 {
            extent = 1.0;
        }
        let m = MARGIN * extent;
        let x0 = lo_x - m;
        let y1 = hi_y + m;
        let scale = SIZE / (extent + 2.0 * m);
        let width = (hi_x - lo_x + 2.0 * m) * scale;
        let height = (hi_y - lo_y + 2.0 * m) * scale;
        Viewport { x0, y1, scale, width, height, bounds: [lo_x, lo_y, hi_x, hi_y] }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)
    }
}

fn line(out: &mut String, vp: &Viewport, a: (f64, f64), b: (f64, f64)) {
    let (a, b) = (vp.map(a), vp.map(b));
    writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1).unwrap();
}

fn edge_group<'a>(
    out: &mut String,
    vp: &Viewport,
    pts: &[(f64, f64)],
    class: &str,
    style: &str,
    edges: impl Iterator<Item = &'a Edge>,
) {
    writeln!(out, r#"<g class="{class}" {style}>"#).unwrap();
    for e in edges {
        line(out, vp, pts[e.u], pts[e.v]);
    }
    out.push_str("</g>\n");
}

pub fn render_svg(g: &PlaneGraph, overlays: &Overlays) -> String {
    let s = g.scale() as f64;
    let pts: Vec<(f64, f64)> = g.points().iter().map(|p| (p.x as f64 / s, p.y as f64 / s)).collect();
    let vp = Viewport::new(&pts);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = vp.width,
        h = vp.height
    )
    .unwrap();
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let [lo_x, lo_y, hi_x, hi_y] = vp.bounds;
    out.push_str("<g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n");
    line(&mut out, &vp, (lo_x, lo_y), (hi_x, lo_y));
    line(&mut out, &vp, (lo_x, lo_y), (lo_x, hi_y));
    out.push_str("</g>\n");

    if let Some(graph) = overlays.graph {
        // Input edges are drawn on top anyway.
        let extra = graph.iter().filter(|e| !g.contains_edge(**e));
        let style = r##"stroke="#1f77b4" stroke-width="1" stroke-dasharray="6 4""##;
        edge_group(&mut out, &vp, &pts, "graph", style, extra);
    }
    edge_group(&mut out, &vp, &pts, "input", r#"stroke="black" stroke-width="1.5""#, g.edges().iter());
    if let Some(s) = overlays.constraints {
        edge_group(&mut out, &vp, &pts, "constraints", r##"stroke="#d62728" stroke-width="4""##, s.iter());
    }

    out.push_str("<g class=\"vertices\" fill=\"black\">\n");
    for &p in &pts {
        let (x, y) = vp.map(p);
        writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#).unwrap();
    }
    out.push_str("</g>\n");
    if overlays.labels {
        out.push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n");
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = vp.map(p);
            writeln!(out, r#"<text x="{:.2}" y="{:.2}">{i}</text>"#, x + 5.0, y - 5.0).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
