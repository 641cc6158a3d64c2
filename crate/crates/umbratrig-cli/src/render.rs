//! Deterministic text output: fixed-format numbers, CSV and SVG assembly.

use std::fs;
use std::io::Write;
use std::path::Path;

/// 17 significant digits, enough to round-trip an f64 bit-exactly.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV with a header row, `.` decimals and `\n` line endings throughout.
pub fn csv(header: &str, rows: &[Vec<f64>]) -> String {
    let mut out = String::with_capacity(rows.len() * 64 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| fmt_num(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Single-polyline SVG of a planar curve, with the viewBox computed from
/// the data extents. The y axis is flipped so the curve displays with the
/// mathematical orientation.
pub fn svg_polyline(points: &[(f64, f64)]) -> String {
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(-y);
        y1 = y1.max(-y);
    }
    let pad_x = 0.05 * (x1 - x0).max(1e-9);
    let pad_y = 0.05 * (y1 - y0).max(1e-9);
    let (vx, vy) = (x0 - pad_x, y0 - pad_y);
    let (vw, vh) = (x1 - x0 + 2.0 * pad_x, y1 - y0 + 2.0 * pad_y);
    let stroke = 0.004 * vw.max(vh);
    let pts: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{x:.6},{:.6}", -y))
        .collect();
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx:.6} {vy:.6} {vw:.6} {vh:.6}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{stroke:.6}\" points=\"{}\"/>\n\
         </svg>\n",
        pts.join(" ")
    )
}

/// Write to the path when given, otherwise to stdout.
pub fn emit(output: Option<&Path>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, content.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}
