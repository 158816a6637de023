//! SVG drawing of a realization: 100 px per unit, 5% margin, edges as
//! segments, the unit sphere of the norm around vertex 0 and a one-unit
//! scale bar.

use std::f64::consts::TAU;
use std::fmt::Write;

use planewidth::realization::io::format_f64;
use planewidth::{Graph, Point, Realization};

const PX: f64 = 100.0;

fn px(v: f64) -> String {
    format_f64((v * PX * 100.0).round() / 100.0)
}

/// Unit sphere of the realization's norm around `c`, as a closed polyline.
fn unit_sphere(r: &Realization, c: Point) -> Vec<Point> {
    if r.norm.dim == 1 {
        return vec![Point::new(c.x - 1.0, c.y), Point::new(c.x + 1.0, c.y)];
    }
    (0..=96)
        .map(|i| {
            let dir = Point::polar(1.0, i as f64 * TAU / 96.0);
            c + dir * (1.0 / r.norm.length(dir))
        })
        .collect()
}

pub fn render(r: &Realization, g: Option<&Graph>) -> String {
    let sphere = r.points.first().map(|&c| unit_sphere(r, c)).unwrap_or_default();
    let all: Vec<Point> = r.points.iter().chain(&sphere).copied().collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 0.0f64);
    if let Some(p) = all.first() {
        (x0, x1, y0, y1) = (p.x, p.x, p.y, p.y);
    }
    for p in &all {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let margin = 0.05 * (x1 - x0).max(y1 - y0).max(1.0);
    // room below the drawing for the scale bar
    let bar_band = 0.3;
    let (left, top) = (x0 - margin, -y1 - margin);
    let width = (x1 - x0) + 2.0 * margin;
    let height = (y1 - y0) + 2.0 * margin + bar_band;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        px(width),
        px(height),
        px(left),
        px(top),
        px(width),
        px(height)
    );
    let _ = writeln!(s, r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, px(left), px(top), px(width), px(height));

    if !sphere.is_empty() {
        let pts: Vec<String> = sphere.iter().map(|p| format!("{},{}", px(p.x), px(-p.y))).collect();
        let _ = writeln!(
            s,
            r#"  <polyline points="{}" fill="none" stroke="steelblue" stroke-dasharray="4 3"><title>distance 1 from vertex 0</title></polyline>"#,
            pts.join(" ")
        );
    }
    if let Some(g) = g {
        let _ = writeln!(s, r#"  <g stroke="gray" stroke-width="1">"#);
        for &(u, v) in g.edges() {
            let (a, b) = (r.points[u], r.points[v]);
            let _ = writeln!(s, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(a.x), px(-a.y), px(b.x), px(-b.y));
        }
        let _ = writeln!(s, "  </g>");
    }
    let _ = writeln!(s, r#"  <g fill="black">"#);
    for (v, p) in r.points.iter().enumerate() {
        let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="3"><title>{v}</title></circle>"#, px(p.x), px(-p.y));
    }
    let _ = writeln!(s, "  </g>");

    let bar_y = -y0 + margin + bar_band / 2.0;
    let _ = writeln!(
        s,
        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
        px(x0),
        px(bar_y),
        px(x0 + 1.0),
        px(bar_y)
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12">1 unit</text>"#,
        px(x0 + 1.05),
        px(bar_y + 0.04)
    );
    s.push_str("</svg>\n");
    s
}
