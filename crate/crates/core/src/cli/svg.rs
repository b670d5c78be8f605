//! SVG rendering of embedding artifacts.

use std::fmt::Write as _;

use crate::embed::EmbeddingArtifact;
use crate::geometry::{to_f64, Point};
use crate::pair::Side;

/// Scalars controlling [`render_svg`]. Regions are always filled at 40% opacity.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Width of the longer side of the drawing area, in SVG user units.
    pub canvas: f64,
    pub padding: f64,
    pub region_stroke: f64,
    pub point_radius: f64,
    pub font_size: f64,
    /// Fill colors of partition 0 blocks, by block index modulo 8.
    pub warm: [&'static str; 8],
    /// Fill colors of partition 1 blocks, by block index modulo 8.
    pub cool: [&'static str; 8],
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            canvas: 800.0,
            padding: 40.0,
            region_stroke: 1.5,
            point_radius: 4.0,
            font_size: 12.0,
            warm: [
                "#d62728", "#ff7f0e", "#e6ab02", "#8c564b", "#e377c2", "#bcbd22", "#b2182b", "#f4a582",
            ],
            cool: [
                "#1f77b4", "#2ca02c", "#17becf", "#9467bd", "#4393c3", "#1b9e77", "#2166ac", "#66c2a5",
            ],
        }
    }
}

impl RenderStyle {
    /// The two partitions must never share a fill color.
    pub fn families_disjoint(&self) -> bool {
        self.warm.iter().all(|w| !self.cool.contains(w))
    }

    pub fn color(&self, side: Side, index: usize) -> &'static str {
        match side {
            Side::P0 => self.warm[index % 8],
            Side::P1 => self.cool[index % 8],
        }
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl Frame {
    fn fit(artifact: &EmbeddingArtifact, style: &RenderStyle) -> (Frame, f64, f64) {
        let all = artifact
            .points
            .iter()
            .map(|(_, p)| p)
            .chain(artifact.regions.iter().flat_map(|(_, r)| r.vertices.iter()))
            .map(Point::to_f64);
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in all {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
        }
        let extent = (x1 - x0).max(y1 - y0);
        let scale = if extent > 0.0 { style.canvas / extent } else { 1.0 };
        let frame = Frame {
            min_x: x0,
            max_y: y1,
            scale,
            pad: style.padding,
        };
        let w = (x1 - x0) * scale + 2.0 * style.padding;
        let h = (y1 - y0) * scale + 2.0 * style.padding;
        (frame, w, h)
    }

    /// SVG coordinates with y pointing down.
    fn map(&self, p: &Point) -> (f64, f64) {
        let (x, y) = (to_f64(&p.x), to_f64(&p.y));
        ((x - self.min_x) * self.scale + self.pad, (self.max_y - y) * self.scale + self.pad)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// One closed path per region, one circle per element, and one label per
/// element and block. Output depends only on the inputs.
pub fn render_svg(artifact: &EmbeddingArtifact, style: &RenderStyle) -> String {
    let (frame, w, h) = Frame::fit(artifact, style);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(out, "<title>{} embedding</title>", artifact.level);
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, num(w), num(h));

    let mut index = [0usize; 2];
    let mut labels = Vec::new();
    let _ = writeln!(out, r#"<g id="regions" fill-opacity="0.4" stroke-width="{}">"#, num(style.region_stroke));
    for (id, poly) in &artifact.regions {
        let i = index[id.side.index()];
        index[id.side.index()] += 1;
        let color = style.color(id.side, i);
        let mut d = String::new();
        for (k, v) in poly.vertices.iter().enumerate() {
            let (x, y) = frame.map(v);
            let _ = write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, num(x), num(y));
        }
        d.push('Z');
        let _ = writeln!(
            out,
            r#"<path d="{d}" fill="{color}" stroke="{color}" data-block="{}"/>"#,
            escape(&id.to_string())
        );
        // Label above the topmost vertex; ties go to the leftmost.
        if let Some(top) = poly
            .vertices
            .iter()
            .map(|v| frame.map(v))
            .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0)))
        {
            labels.push((top.0, top.1 - style.font_size * 0.4, color, id.name.clone()));
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g id="elements" fill="black">"#);
    for (_, p) in &artifact.points {
        let (x, y) = frame.map(p);
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(x), num(y), num(style.point_radius));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="labels" font-family="sans-serif" font-size="{}">"#,
        num(style.font_size)
    );
    for (id, p) in &artifact.points {
        let (x, y) = frame.map(p);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text>"#,
            num(x + style.point_radius * 1.5),
            num(y - style.point_radius * 1.5),
            escape(id.as_str())
        );
    }
    for (x, y, color, name) in labels {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" fill="{color}" font-weight="bold">{}</text>"#,
            num(x),
            num(y),
            escape(&name)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
