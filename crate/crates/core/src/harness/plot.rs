use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::csv::{read_csv, TableRow};
use crate::error::{Error, Result};

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 220.0;
const TOP: f64 = 56.0;
const BOTTOM: f64 = 64.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A named polyline of `(x, y)` points, both positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

struct LogAxis {
    lo: f64,
    hi: f64,
}

impl LogAxis {
    fn new(values: impl Iterator<Item = f64>) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            lo = lo.min(v.log10());
            hi = hi.max(v.log10());
        }
        let (mut lo, mut hi) = (lo.floor(), hi.ceil());
        if hi <= lo {
            lo -= 1.0;
            hi += 1.0;
        }
        LogAxis { lo, hi }
    }

    fn frac(&self, v: f64) -> f64 {
        (v.log10() - self.lo) / (self.hi - self.lo)
    }

    fn decades(&self) -> Vec<i32> {
        let step = ((self.hi - self.lo) / 8.0).ceil().max(1.0) as i32;
        (self.lo as i32..=self.hi as i32).step_by(step as usize).collect()
    }
}

fn header(svg: &mut String, title: &str) {
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="28" text-anchor="middle" font-size="15">{}</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        escape(title)
    );
}

fn axis_labels(svg: &mut String, xlabel: &str, ylabel: &str) {
    let cx = (LEFT + WIDTH - RIGHT) / 2.0;
    let cy = (TOP + HEIGHT - BOTTOM) / 2.0;
    let _ = writeln!(
        svg,
        r#"<text x="{cx}" y="{}" text-anchor="middle" font-size="13">{}</text>"#,
        HEIGHT - 18.0,
        escape(xlabel)
    );
    let _ = writeln!(
        svg,
        r#"<text x="22" y="{cy}" text-anchor="middle" font-size="13" transform="rotate(-90 22 {cy})">{}</text>"#,
        escape(ylabel)
    );
}

/// Log-log line plot of the series.
pub fn loglog_svg(title: &str, xlabel: &str, ylabel: &str, series: &[Series]) -> Result<String> {
    let pts = || series.iter().flat_map(|s| s.points.iter());
    if pts().next().is_none() {
        return Err(Error::Config("nothing to plot".into()));
    }
    if pts().any(|&(x, y)| !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite())) {
        return Err(Error::Config("log-log plots need positive finite values".into()));
    }
    let xa = LogAxis::new(pts().map(|p| p.0));
    let ya = LogAxis::new(pts().map(|p| p.1));
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let px = |x: f64| LEFT + xa.frac(x) * pw;
    let py = |y: f64| TOP + (1.0 - ya.frac(y)) * ph;

    let mut svg = String::new();
    header(&mut svg, title);
    let _ = writeln!(svg, r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#);
    for d in xa.decades() {
        let x = px(10f64.powi(d));
        let _ = writeln!(svg, r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{}" stroke="#ddd"/>"##, TOP + ph);
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{}" text-anchor="middle" font-size="12">1e{d}</text>"#,
            TOP + ph + 18.0
        );
    }
    for d in ya.decades() {
        let y = py(10f64.powi(d));
        let _ = writeln!(svg, r##"<line x1="{LEFT}" y1="{y:.2}" x2="{}" y2="{y:.2}" stroke="#ddd"/>"##, LEFT + pw);
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{:.2}" text-anchor="end" font-size="12">1e{d}</text>"#,
            LEFT - 6.0,
            y + 4.0
        );
    }
    axis_labels(&mut svg, xlabel, ylabel);
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut pts = s.points.clone();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pts.len() > 1 {
            let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
            let _ = writeln!(
                svg,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
                path.join(" ")
            );
        }
        for &(x, y) in &pts {
            let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="{color}"/>"#, px(x), py(y));
        }
        let ly = TOP + 14.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 14.0;
        let _ = writeln!(svg, r#"<circle cx="{lx}" cy="{}" r="4" fill="{color}"/>"#, ly - 4.0);
        let _ = writeln!(svg, r#"<text x="{}" y="{ly}" font-size="12">{}</text>"#, lx + 10.0, escape(&s.label));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn ramp(t: f64) -> String {
    const STOPS: [(f64, f64, f64); 5] =
        [(68.0, 1.0, 84.0), (59.0, 82.0, 139.0), (33.0, 145.0, 140.0), (94.0, 201.0, 98.0), (253.0, 231.0, 37.0)];
    let t = t.clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let i = (t.floor() as usize).min(STOPS.len() - 2);
    let f = t - i as f64;
    let (a, b) = (STOPS[i], STOPS[i + 1]);
    let mix = |u: f64, v: f64| (u + f * (v - u)).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

/// Heatmap of `log10(values[row][col])`; rows run bottom to top.
pub fn heatmap_svg(
    title: &str,
    xlabel: &str,
    ylabel: &str,
    cols: &[String],
    rows: &[String],
    values: &[Vec<Option<f64>>],
) -> Result<String> {
    let logs: Vec<f64> = values.iter().flatten().flatten().filter(|v| **v > 0.0).map(|v| v.log10()).collect();
    if cols.is_empty() || rows.is_empty() || logs.is_empty() {
        return Err(Error::Config("nothing to plot".into()));
    }
    let lo = logs.iter().cloned().fold(f64::INFINITY, f64::min).floor();
    let mut hi = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil();
    if hi <= lo {
        hi = lo + 1.0;
    }
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let (cw, ch) = (pw / cols.len() as f64, ph / rows.len() as f64);
    let mut svg = String::new();
    header(&mut svg, title);
    for (r, line) in values.iter().enumerate() {
        let y = TOP + ph - (r + 1) as f64 * ch;
        for (c, v) in line.iter().enumerate() {
            let x = LEFT + c as f64 * cw;
            let fill = match v {
                Some(v) if *v > 0.0 => ramp((v.log10() - lo) / (hi - lo)),
                _ => "#bbbbbb".to_string(),
            };
            let _ = writeln!(
                svg,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{cw:.2}" height="{ch:.2}" fill="{fill}" stroke="white"/>"#
            );
            if let Some(v) = v {
                if cw >= 48.0 && ch >= 16.0 {
                    let _ = writeln!(
                        svg,
                        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="10" fill="white">{v:.1e}</text>"#,
                        x + cw / 2.0,
                        y + ch / 2.0 + 3.5
                    );
                }
            }
        }
    }
    for (c, label) in cols.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{}" text-anchor="middle" font-size="12">{}</text>"#,
            LEFT + (c as f64 + 0.5) * cw,
            TOP + ph + 18.0,
            escape(label)
        );
    }
    for (r, label) in rows.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{:.2}" text-anchor="end" font-size="12">{}</text>"#,
            LEFT - 6.0,
            TOP + ph - (r as f64 + 0.5) * ch + 4.0,
            escape(label)
        );
    }
    axis_labels(&mut svg, xlabel, ylabel);
    let bx = WIDTH - RIGHT + 30.0;
    let steps = 40;
    for s in 0..steps {
        let t = s as f64 / steps as f64;
        let y = TOP + ph * (1.0 - t) - ph / steps as f64;
        let _ = writeln!(
            svg,
            r#"<rect x="{bx}" y="{y:.2}" width="18" height="{:.2}" fill="{}"/>"#,
            ph / steps as f64 + 0.5,
            ramp(t + 0.5 / steps as f64)
        );
    }
    for d in lo as i32..=hi as i32 {
        let y = TOP + ph * (1.0 - (d as f64 - lo) / (hi - lo));
        let _ = writeln!(svg, r#"<text x="{}" y="{:.2}" font-size="11">1e{d}</text>"#, bx + 24.0, y + 4.0);
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn fmt_num(v: f64) -> String {
    format!("{v}")
}

type Key = Vec<String>;

fn series_key(r: &TableRow) -> Key {
    vec![
        r.dimension.clone(),
        r.scatterer.clone(),
        format!("Z={}", r.z),
        format!("k={}", fmt_num(r.k)),
        format!("r0={}", fmt_num(r.r0)),
        format!("R={}", fmt_num(r.r_outer)),
        r.abc.clone(),
        format!("NT={}", r.terms),
        format!("p={}", r.degree),
    ]
}

/// Split keys into the parts shared by all rows (title) and a label per key.
fn labels(keys: &[Key]) -> (String, Vec<String>) {
    let width = keys[0].len();
    let varying: Vec<bool> = (0..width).map(|i| keys.iter().any(|k| k[i] != keys[0][i])).collect();
    let shared: Vec<&str> = (0..width).filter(|&i| !varying[i]).map(|i| keys[0][i].as_str()).collect();
    let labels = keys
        .iter()
        .map(|k| {
            let parts: Vec<&str> = (0..width).filter(|&i| varying[i]).map(|i| k[i].as_str()).collect();
            if parts.is_empty() {
                "all runs".to_string()
            } else {
                parts.join(" ")
            }
        })
        .collect();
    (shared.join(", "), labels)
}

fn error_series(rows: &[&TableRow], metric: impl Fn(&TableRow) -> Option<f64>) -> (String, Vec<Series>) {
    let mut keys: Vec<Key> = Vec::new();
    let mut points: Vec<Vec<(f64, f64)>> = Vec::new();
    for r in rows {
        let (Some(h), Some(e)) = (r.h, metric(r)) else { continue };
        if !(e > 0.0) {
            continue;
        }
        let key = series_key(r);
        match keys.iter().position(|k| *k == key) {
            Some(i) => points[i].push((h, e)),
            None => {
                keys.push(key);
                points.push(vec![(h, e)]);
            }
        }
    }
    if keys.is_empty() {
        return (String::new(), Vec::new());
    }
    let (title, names) = labels(&keys);
    let series = names.into_iter().zip(points).map(|(label, points)| Series { label, points }).collect();
    (title, series)
}

fn distinct<T: PartialEq + Clone>(values: impl Iterator<Item = T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Render every plot the table supports into `out_dir`: log-log error
/// curves against `h` for each available error, and heatmaps of the FFP
/// error over `(NT, n_λ)` and `(NT, p)` when the table spans such grids.
pub fn emit_plots(csv_path: &Path, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let table = read_csv(std::fs::File::open(csv_path)?)?;
    let rows: Vec<&TableRow> = table.iter().filter(|r| r.ok).collect();
    if rows.is_empty() {
        return Err(Error::Config(format!("{} has no successful rows to plot", csv_path.display())));
    }
    std::fs::create_dir_all(out_dir)?;
    let stem = csv_path.file_stem().and_then(|s| s.to_str()).unwrap_or("results").to_string();
    let mut written = Vec::new();
    let metrics: [(&str, &str, fn(&TableRow) -> Option<f64>); 3] = [
        ("boundary", "relative L2 error on S_R", |r| r.err_boundary),
        ("domain", "relative L2 error in the domain", |r| r.err_domain),
        ("ffp", "far-field pattern relative L2 error", |r| r.err_ffp),
    ];
    for (tag, ylabel, metric) in metrics {
        let (title, series) = error_series(&rows, metric);
        if series.is_empty() {
            continue;
        }
        let path = out_dir.join(format!("{stem}_{tag}.svg"));
        std::fs::write(&path, loglog_svg(&title, "mesh size h", ylabel, &series)?)?;
        written.push(path);
    }

    let terms = distinct(rows.iter().map(|r| r.terms));
    let grids: [(&str, &str, fn(&TableRow) -> Option<String>); 2] = [
        ("nlambda", "control points per wavelength", |r| r.n_lambda.map(fmt_num)),
        ("p", "degree p", |r| Some(r.degree.to_string())),
    ];
    for (tag, xlabel, col_of) in grids {
        let cols = distinct(rows.iter().filter_map(|r| col_of(r)));
        if terms.len() < 2 || cols.len() < 2 {
            continue;
        }
        let mut sorted_terms = terms.clone();
        sorted_terms.sort_unstable();
        let mut cols = cols;
        cols.sort_by(|a, b| a.parse::<f64>().unwrap_or(0.0).total_cmp(&b.parse::<f64>().unwrap_or(0.0)));
        let values: Vec<Vec<Option<f64>>> = sorted_terms
            .iter()
            .map(|&t| {
                cols.iter()
                    .map(|c| {
                        rows.iter()
                            .find(|r| r.terms == t && col_of(r).as_deref() == Some(c.as_str()))
                            .and_then(|r| r.err_ffp.or(r.err_boundary))
                    })
                    .collect()
            })
            .collect();
        let row_labels: Vec<String> = sorted_terms.iter().map(|t| t.to_string()).collect();
        let (shared, _) = labels(&rows.iter().map(|r| series_key(r)[..7].to_vec()).collect::<Vec<_>>());
        let title = format!("FFP relative L2 error, {shared}");
        let svg = heatmap_svg(&title, xlabel, "NT", &cols, &row_labels, &values)?;
        let path = out_dir.join(format!("{stem}_heatmap_NT_{tag}.svg"));
        std::fs::write(&path, svg)?;
        written.push(path);
    }
    Ok(written)
}
