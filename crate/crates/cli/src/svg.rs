//! Minimal self-contained SVG scatter plots.

use std::path::Path;

use crate::CliError;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Writes a square scatter plot of `(x, y)` points with equal axes.
/// `diagonal` additionally draws the y = x line (persistence diagrams).
pub fn scatter(
    path: &Path,
    points: &[(f64, f64)],
    title: &str,
    diagonal: bool,
) -> Result<(), CliError> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        lo = lo.min(x).min(y);
        hi = hi.max(x).max(y);
    }
    if points.is_empty() || !lo.is_finite() || !hi.is_finite() {
        lo = 0.0;
        hi = 1.0;
    }
    if hi - lo < 1e-12 {
        hi = lo + 1.0;
    }
    let pad = 0.05 * (hi - lo);
    let (lo, hi) = (lo - pad, hi + pad);
    let scale = (SIZE - 2.0 * MARGIN) / (hi - lo);
    let px = |x: f64| MARGIN + (x - lo) * scale;
    let py = |y: f64| SIZE - MARGIN - (y - lo) * scale;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"14\">{title}</text>\n",
        SIZE / 2.0
    ));
    svg.push_str(&format!(
        "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"black\"/>\n",
        SIZE - 2.0 * MARGIN,
        SIZE - 2.0 * MARGIN
    ));
    if diagonal {
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" \
             stroke-dasharray=\"4\"/>\n",
            px(lo),
            py(lo),
            px(hi),
            py(hi)
        ));
    }
    for &(x, y) in points {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"steelblue\" \
             fill-opacity=\"0.6\"/>\n",
            px(x),
            py(y)
        ));
    }
    svg.push_str("</svg>\n");
    std::fs::write(path, svg)?;
    Ok(())
}
