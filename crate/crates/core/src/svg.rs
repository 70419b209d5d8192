//! Standalone SVG plots of bound disks and computed zeros in the complex
//! plane. Output is deterministic for identical input; all coordinates are
//! written with 4 decimal places.

use crate::disk::Disk;
use num_complex::Complex64;
use std::fmt::Write;

const SIZE: f64 = 720.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf",
];

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn x(&self, wx: f64) -> f64 {
        MARGIN + (wx - self.min_x) * self.scale
    }

    fn y(&self, wy: f64) -> f64 {
        MARGIN + (self.max_y - wy) * self.scale
    }
}

/// Renders labeled bound disks and root markers. The viewport covers the
/// unit circle, every disk, and every root, padded by 10% of the largest
/// disk diameter.
pub fn render_plot(entries: &[(String, Disk)], roots: &[Complex64]) -> String {
    let mut min_x: f64 = -1.0;
    let mut max_x: f64 = 1.0;
    let mut min_y: f64 = -1.0;
    let mut max_y: f64 = 1.0;
    let mut largest = 1.0f64;
    for (_, d) in entries {
        min_x = min_x.min(d.center.re - d.radius);
        max_x = max_x.max(d.center.re + d.radius);
        min_y = min_y.min(d.center.im - d.radius);
        max_y = max_y.max(d.center.im + d.radius);
        largest = largest.max(d.radius);
    }
    for r in roots {
        min_x = min_x.min(r.re);
        max_x = max_x.max(r.re);
        min_y = min_y.min(r.im);
        max_y = max_y.max(r.im);
    }
    let pad = 0.1 * 2.0 * largest;
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;

    // uniform scale, extents centered inside a square canvas
    let span = (max_x - min_x).max(max_y - min_y);
    let cx = 0.5 * (min_x + max_x);
    let cy = 0.5 * (min_y + max_y);
    let frame = Frame {
        min_x: cx - span / 2.0,
        max_y: cy + span / 2.0,
        scale: (SIZE - 2.0 * MARGIN) / span,
    };

    let total = SIZE;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total:.4}" height="{total:.4}" viewBox="0 0 {total:.4} {total:.4}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{total:.4}" height="{total:.4}" fill="white"/>"#
    );

    // axes through the origin, clipped to the canvas
    let x0 = frame.x(0.0);
    let y0 = frame.y(0.0);
    if (MARGIN..=total - MARGIN).contains(&y0) {
        let _ = writeln!(
            out,
            r##"<line class="axis" x1="{:.4}" y1="{y0:.4}" x2="{:.4}" y2="{y0:.4}" stroke="#999" stroke-width="1"/>"##,
            MARGIN,
            total - MARGIN
        );
    }
    if (MARGIN..=total - MARGIN).contains(&x0) {
        let _ = writeln!(
            out,
            r##"<line class="axis" x1="{x0:.4}" y1="{:.4}" x2="{x0:.4}" y2="{:.4}" stroke="#999" stroke-width="1"/>"##,
            MARGIN,
            total - MARGIN
        );
    }

    // dashed unit circle for reference
    let _ = writeln!(
        out,
        r##"<circle class="unit" cx="{x0:.4}" cy="{y0:.4}" r="{:.4}" fill="none" stroke="#bbb" stroke-width="1" stroke-dasharray="6 4"/>"##,
        frame.scale
    );

    for (i, (label, d)) in entries.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let cx = frame.x(d.center.re);
        let cy = frame.y(d.center.im);
        let r = d.radius * frame.scale;
        let _ = writeln!(
            out,
            r#"<circle class="bound" cx="{cx:.4}" cy="{cy:.4}" r="{r:.4}" fill="none" stroke="{color}" stroke-width="2"/>"#
        );
        let label_y = frame.y(d.center.im + d.radius) - 6.0;
        let _ = writeln!(
            out,
            r#"<text class="label" x="{cx:.4}" y="{label_y:.4}" fill="{color}" font-family="sans-serif" font-size="14" text-anchor="middle">{label}</text>"#
        );
    }

    for r in roots {
        let _ = writeln!(
            out,
            r##"<circle class="root" cx="{:.4}" cy="{:.4}" r="3.5" fill="#d62728"/>"##,
            frame.x(r.re),
            frame.y(r.im)
        );
    }

    out.push_str("</svg>\n");
    out
}
