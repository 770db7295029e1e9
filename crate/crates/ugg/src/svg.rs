//! SVG drawings of hosts and embeddings.
//!
//! Universal hosts use either a schematic layout (x = vertex index,
//! y = height rank, binary-tree edges straight and all other edges as arcs) or
//! the exact coordinates for small `n`, with y log-compressed for display.
//! Convex hosts are drawn on a circle with straight chords.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::ToPrimitive;
use ugg_core::{CoordinateRealization, Embedding, UniversalGraph};

use crate::error::{Result, WorkbenchError};
use crate::format::{Host, EXPLICIT_CAP};

/// Largest universal host drawn with exact coordinates.
pub const EXACT_CAP: usize = 31;

const MARGIN: f64 = 30.0;
const STEP_X: f64 = 28.0;
const STEP_Y: f64 = 18.0;
const RADIUS: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Schematic,
    Exact,
}

/// An embedding to highlight on top of the host.
#[derive(Debug, Clone, Copy)]
pub struct Overlay<'a> {
    pub phi: &'a Embedding,
    /// Input edges; when absent only image vertices are highlighted.
    pub edges: Option<&'a [(usize, usize)]>,
}

struct Canvas {
    pos: Vec<(f64, f64)>,
    /// Host edges that are drawn curved.
    curved: Box<dyn Fn(usize, usize) -> bool>,
}

pub fn render_svg(host: &Host, layout: Layout, overlay: Option<Overlay<'_>>) -> Result<String> {
    let n = host.n();
    if n > EXPLICIT_CAP {
        return Err(WorkbenchError::SizeCap { n, cap: EXPLICIT_CAP });
    }
    let canvas = match host {
        Host::Universal(g) => match layout {
            Layout::Schematic => schematic(g),
            Layout::Exact => exact(g)?,
        },
        Host::Convex(_) => circle(n),
    };
    if let Some(o) = overlay {
        if let Some(&bad) = o.phi.map.iter().find(|&&h| h >= n) {
            return Err(WorkbenchError::Input(ugg_core::Error::IndexOutOfRange { index: bad, bound: n }));
        }
    }

    let width = canvas.pos.iter().map(|p| p.0).fold(0.0, f64::max) + MARGIN;
    let height = canvas.pos.iter().map(|p| p.1).fold(0.0, f64::max) + MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    out.push_str(
        "<style>.edge{fill:none;stroke:#888;stroke-width:1}.image-edge{fill:none;stroke:#c22;stroke-width:2.5}\
         .vertex{fill:#fff;stroke:#222}.image-vertex{fill:#c22}text{font:9px sans-serif;text-anchor:middle}</style>\n",
    );

    let path = |out: &mut String, class: &str, u: usize, w: usize| {
        let (a, b) = (canvas.pos[u], canvas.pos[w]);
        if (canvas.curved)(u, w) {
            // bend upwards, proportional to the span
            let (mx, my) = ((a.0 + b.0) / 2.0, a.1.min(b.1) - 0.25 * (b.0 - a.0).abs());
            let _ = writeln!(
                out,
                r#"<path class="{class}" d="M{:.1},{:.1} Q{mx:.1},{my:.1} {:.1},{:.1}"/>"#,
                a.0, a.1, b.0, b.1
            );
        } else {
            let _ = writeln!(out, r#"<path class="{class}" d="M{:.1},{:.1} L{:.1},{:.1}"/>"#, a.0, a.1, b.0, b.1);
        }
    };

    for (u, w) in host.edges() {
        path(&mut out, "edge", u, w);
    }
    if let Some(Overlay { phi, edges: Some(edges) }) = overlay {
        for &(u, w) in edges {
            path(&mut out, "image-edge", phi.map[u], phi.map[w]);
        }
    }
    for (i, &(x, y)) in canvas.pos.iter().enumerate() {
        let _ = writeln!(out, r#"<circle class="vertex" cx="{x:.1}" cy="{y:.1}" r="{RADIUS}"/>"#);
        let _ = writeln!(out, r#"<text x="{x:.1}" y="{:.1}">{i}</text>"#, y - RADIUS - 2.0);
    }
    if let Some(o) = overlay {
        for &h in &o.phi.map {
            let (x, y) = canvas.pos[h];
            let _ = writeln!(out, r#"<circle class="image-vertex" cx="{x:.1}" cy="{y:.1}" r="{:.1}"/>"#, RADIUS / 2.0);
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn is_tree_edge(g: &UniversalGraph, u: usize, w: usize) -> bool {
    let shape = g.shape();
    let parent = |v: usize| shape.nav(v).ok().and_then(|i| i.parent);
    parent(u) == Some(w) || parent(w) == Some(u)
}

fn schematic(g: &UniversalGraph) -> Canvas {
    let pos = (0..g.n())
        .map(|i| (MARGIN + STEP_X * i as f64, 2.0 * MARGIN + STEP_Y * g.rank(i) as f64))
        .collect();
    let g = g.clone();
    Canvas {
        pos,
        curved: Box::new(move |u, w| !is_tree_edge(&g, u, w)),
    }
}

fn exact(g: &UniversalGraph) -> Result<Canvas> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(WorkbenchError::SizeCap { n, cap: EXACT_CAP });
    }
    let coords = CoordinateRealization::realize(g.shape(), n)?;
    let lifted: Vec<f64> = coords
        .points()
        .iter()
        .map(|p| (1.0 + p.y.to_f64().unwrap_or(f64::MAX)).log2())
        .collect();
    let top = lifted.iter().copied().fold(0.0, f64::max);
    let scale = if top > 0.0 { 40.0 * STEP_Y / top } else { 1.0 };
    let pos = coords
        .points()
        .iter()
        .zip(&lifted)
        .map(|(p, &y)| (MARGIN + STEP_X * p.x as f64, 2.0 * MARGIN + (top - y) * scale))
        .collect();
    Ok(Canvas {
        pos,
        curved: Box::new(|_, _| false),
    })
}

fn circle(n: usize) -> Canvas {
    let r = (n as f64 * STEP_X / (2.0 * PI)).max(80.0);
    let c = MARGIN + r;
    let pos = (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
            (c + r * t.cos(), c + r * t.sin())
        })
        .collect();
    Canvas {
        pos,
        curved: Box::new(|_, _| false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::HostKind;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn seven_vertex_host() {
        let host = Host::build(HostKind::Universal, 7).unwrap();
        let svg = render_svg(&host, Layout::Schematic, None).unwrap();
        assert_eq!(count(&svg, "vertex"), 7);
        assert_eq!(count(&svg, "edge"), 21);
        // six binary-tree edges are straight, the rest are arcs
        assert_eq!(svg.matches(" Q").count(), 15);
    }

    #[test]
    fn single_vertex() {
        let host = Host::build(HostKind::Universal, 1).unwrap();
        let svg = render_svg(&host, Layout::Exact, None).unwrap();
        assert_eq!((count(&svg, "vertex"), count(&svg, "edge")), (1, 0));
    }

    #[test]
    fn caterpillar_host_on_a_circle() {
        let host = Host::build(HostKind::Caterpillar, 10).unwrap();
        let svg = render_svg(&host, Layout::Schematic, None).unwrap();
        assert_eq!(count(&svg, "vertex"), 10);
        assert_eq!(count(&svg, "edge"), host.edges().len());
        assert_eq!(svg.matches(" Q").count(), 0);
    }

    #[test]
    fn exact_layout_is_capped() {
        let host = Host::build(HostKind::Universal, 32).unwrap();
        assert_eq!(render_svg(&host, Layout::Exact, None).unwrap_err().exit_code(), 3);
    }
}
