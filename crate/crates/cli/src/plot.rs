//! Deterministic SVG 1.1 drawings of instances and their colorings.

use std::fmt::Write;

use anyhow::{bail, Result};
use umlist_core::{Color, Coloring};

use crate::instance::Instance;

pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#e7ba52",
];
const UNCOLORED: &str = "#cccccc";
const CANVAS: f64 = 640.0;
const MARGIN: f64 = 40.0;
const LEGEND_WIDTH: f64 = 160.0;

/// Palette entry of a color; colors cycle through the palette by id.
pub fn palette_color(c: Color) -> &'static str {
    PALETTE[((c - 1) % PALETTE.len() as Color) as usize]
}

/// Maps a bounding box onto the square drawing area, y pointing up.
struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(xs: impl Iterator<Item = (f64, f64)> + Clone) -> Frame {
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for (x, y) in xs {
            lo_x = lo_x.min(x);
            lo_y = lo_y.min(y);
            hi_x = hi_x.max(x);
            hi_y = hi_y.max(y);
        }
        if lo_x > hi_x {
            (lo_x, lo_y, hi_x, hi_y) = (0.0, 0.0, 1.0, 1.0);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
        Frame { min_x: lo_x, min_y: lo_y, scale: (CANVAS - 2.0 * MARGIN) / span }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (MARGIN + (x - self.min_x) * self.scale, CANVAS - MARGIN - (y - self.min_y) * self.scale)
    }
}

fn fill(coloring: Option<&Coloring>, v: usize) -> &'static str {
    coloring.map_or(UNCOLORED, |c| palette_color(c.get(v)))
}

fn vertex(svg: &mut String, (x, y): (f64, f64), v: usize, color: &str) {
    let _ = writeln!(svg, r##"<circle cx="{x:.2}" cy="{y:.2}" r="7" fill="{color}" stroke="#000000"/>"##);
    let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="11">{v}</text>"#, x + 8.0, y - 8.0);
}

/// Positions for graph instances: grids by row and column, stars as a
/// wheel around the center, other graphs row by row on a near-square grid
/// (the layout the random generator builds on).
fn graph_layout(inst: &Instance) -> Vec<(f64, f64)> {
    let n = inst.n_vertices();
    match inst {
        Instance::Grid { cols, .. } => (0..n).map(|v| ((v % cols) as f64, -((v / cols) as f64))).collect(),
        Instance::Star { .. } => (0..n)
            .map(|v| {
                if v == 0 {
                    return (0.0, 0.0);
                }
                let a = std::f64::consts::TAU * (v - 1) as f64 / (n - 1) as f64;
                (a.cos(), a.sin())
            })
            .collect(),
        _ => {
            let cols = ((n as f64).sqrt().ceil() as usize).max(1);
            (0..n).map(|v| ((v % cols) as f64, -((v / cols) as f64))).collect()
        }
    }
}

pub fn render(inst: &Instance, coloring: Option<&Coloring>) -> Result<String> {
    let n = inst.n_vertices();
    if let Some(c) = coloring {
        if c.len() != n {
            bail!("coloring has {} colors for {n} vertices", c.len());
        }
    }
    let mut body = String::new();
    match inst {
        Instance::Intervals { .. } => {
            let step = (CANVAS - 2.0 * MARGIN) / (n.max(2) - 1) as f64;
            let y = CANVAS / 2.0;
            let _ = writeln!(
                body,
                r##"<line x1="{MARGIN:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#999999"/>"##,
                CANVAS - MARGIN
            );
            for v in 0..n {
                vertex(&mut body, (MARGIN + v as f64 * step, y), v, fill(coloring, v));
            }
        }
        Instance::PointsDiscs { points } | Instance::PointsHalfplanes { points } => {
            let pts: Vec<(f64, f64)> = points.points().iter().map(|&(x, y)| (x as f64, y as f64)).collect();
            let frame = Frame::fit(pts.iter().copied());
            for (v, &(x, y)) in pts.iter().enumerate() {
                vertex(&mut body, frame.map(x, y), v, fill(coloring, v));
            }
        }
        Instance::Discs { discs } => {
            let shapes: Vec<(f64, f64, f64)> =
                discs.discs().iter().map(|d| (d.cx as f64, d.cy as f64, (d.r2 as f64).sqrt())).collect();
            let corners = shapes.iter().flat_map(|&(x, y, r)| [(x - r, y - r), (x + r, y + r)]);
            let frame = Frame::fit(corners);
            for (v, &(x, y, r)) in shapes.iter().enumerate() {
                let (px, py) = frame.map(x, y);
                let color = fill(coloring, v);
                let _ = writeln!(
                    body,
                    r#"<circle cx="{px:.2}" cy="{py:.2}" r="{:.2}" fill="{color}" fill-opacity="0.35" stroke="{color}"/>"#,
                    r * frame.scale
                );
                let _ = writeln!(body, r#"<text x="{px:.2}" y="{py:.2}" font-size="11">{v}</text>"#);
            }
        }
        Instance::Grid { graph, .. } | Instance::Star { graph } | Instance::Planar { graph } => {
            let pos = graph_layout(inst);
            let frame = Frame::fit(pos.iter().copied());
            let mapped: Vec<(f64, f64)> = pos.iter().map(|&(x, y)| frame.map(x, y)).collect();
            for (u, v) in graph.edges() {
                let ((x1, y1), (x2, y2)) = (mapped[u], mapped[v]);
                let _ = writeln!(
                    body,
                    r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#555555"/>"##
                );
            }
            for (v, &p) in mapped.iter().enumerate() {
                vertex(&mut body, p, v, fill(coloring, v));
            }
        }
        Instance::Hypergraph { .. } => bail!("plain hypergraph instances have no drawing"),
    }

    let mut svg = String::new();
    let width = CANVAS + LEGEND_WIDTH;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{CANVAS}" viewBox="0 0 {width} {CANVAS}">"#
    );
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{width}" height="{CANVAS}" fill="#ffffff"/>"##);
    let _ = writeln!(svg, r#"<title>{} instance, {n} vertices</title>"#, inst.kind());
    svg.push_str(&body);
    svg.push_str(&legend(coloring));
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn legend(coloring: Option<&Coloring>) -> String {
    let mut out = String::from("<g id=\"legend\">\n");
    let x = CANVAS + 10.0;
    let _ = writeln!(out, r#"<text x="{x}" y="30" font-size="13">colors</text>"#);
    let mut used: Vec<Color> = coloring.map(|c| c.colors().to_vec()).unwrap_or_default();
    used.sort_unstable();
    used.dedup();
    for (i, &c) in used.iter().enumerate() {
        let y = 45.0 + 20.0 * i as f64;
        let _ = writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="14" height="14" fill="{}" stroke="#000000"/>"##,
            palette_color(c)
        );
        let _ = writeln!(out, r#"<text x="{}" y="{}" font-size="12">{c}</text>"#, x + 22.0, y + 12.0);
    }
    out.push_str("</g>\n");
    out
}
