//! Wachter-law model diagnostic: the limiting density of the squared
//! canonical correlations, the eigenvalue histogram, and SVG/CSV emission of
//! both.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::coint::WachterParams;
use crate::error::{Error, Result};

/// Number of points in the emitted density trace.
pub const CURVE_POINTS: usize = 512;

/// Wachter density; zero outside `[λ-, λ+]`.
pub fn wachter_density(x: f64, params: &WachterParams) -> f64 {
    let (lm, lp) = (params.lambda_minus, params.lambda_plus);
    if !(x > lm && x < lp) {
        return 0.0;
    }
    (params.p + params.q) / (2.0 * PI) * ((x - lm) * (lp - x)).sqrt() / (x * (1.0 - x))
}

/// Wachter CDF by composite Simpson quadrature after the substitution
/// `x = c - h cos θ`, which removes the square-root endpoint behaviour.
pub fn wachter_cdf(x: f64, params: &WachterParams) -> f64 {
    let (lm, lp) = (params.lambda_minus, params.lambda_plus);
    if x <= lm {
        return 0.0;
    }
    if x >= lp {
        return 1.0;
    }
    let c = 0.5 * (lp + lm);
    let h = 0.5 * (lp - lm);
    let theta_max = ((c - x) / h).clamp(-1.0, 1.0).acos();
    let norm = (params.p + params.q) / (2.0 * PI) * h * h;
    let f = |theta: f64| {
        let s = theta.sin();
        let y = c - h * theta.cos();
        norm * s * s / (y * (1.0 - y))
    };
    const PANELS: usize = 2048;
    let step = theta_max / PANELS as f64;
    let mut acc = f(0.0) + f(theta_max);
    for i in 1..PANELS {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * step);
    }
    (acc * step / 3.0).clamp(0.0, 1.0)
}

/// Sup distance between the empirical CDF of `eigs` and the Wachter CDF.
pub fn kolmogorov_distance(eigs: &[f64], params: &WachterParams) -> f64 {
    let mut sorted = eigs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = wachter_cdf(x, params);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramData {
    pub bin_edges: Vec<f64>,
    /// Area-normalized: `Σ densities[i] · width[i] = 1`.
    pub densities: Vec<f64>,
}

impl HistogramData {
    pub fn bins(&self) -> usize {
        self.densities.len()
    }

    pub fn area(&self) -> f64 {
        self.densities
            .iter()
            .zip(self.bin_edges.windows(2))
            .map(|(d, w)| d * (w[1] - w[0]))
            .sum()
    }
}

/// `max(10, round(sqrt(N)))`.
pub fn default_bins(n: usize) -> usize {
    ((n as f64).sqrt().round() as usize).max(10)
}

/// Equal-width histogram over `[min(λ-, min eigs), max(λ+, max eigs)]`.
pub fn eigen_histogram(eigs: &[f64], bins: usize, params: &WachterParams) -> Result<HistogramData> {
    if eigs.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("eigenvalues must be finite".into()));
    }
    let lo = eigs.iter().copied().fold(params.lambda_minus, f64::min);
    let hi = eigs.iter().copied().fold(params.lambda_plus, f64::max);
    histogram(eigs, bins, lo, hi)
}

/// Equal-width, area-normalized histogram of the finite `values` over
/// `[lo, hi]`; values outside the range land in the end bins.
pub fn histogram(values: &[f64], bins: usize, lo: f64, hi: f64) -> Result<HistogramData> {
    if bins < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 bins, got {bins}")));
    }
    let finite: Vec<f64> = values.iter().copied().filter(|v| v.is_finite()).collect();
    if finite.is_empty() {
        return Err(Error::InvalidInput("histogram needs at least one finite value".into()));
    }
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::InvalidInput(format!("bad histogram range [{lo}, {hi}]")));
    }
    let width = (hi - lo) / bins as f64;
    let bin_edges: Vec<f64> = (0..=bins)
        .map(|i| if i == bins { hi } else { lo + i as f64 * width })
        .collect();
    let mut counts = vec![0usize; bins];
    for &x in &finite {
        let idx = ((x - lo) / width).floor().clamp(0.0, (bins - 1) as f64) as usize;
        counts[idx] += 1;
    }
    let total = finite.len() as f64;
    let densities = counts
        .iter()
        .zip(bin_edges.windows(2))
        .map(|(&c, w)| c as f64 / (total * (w[1] - w[0])))
        .collect();
    Ok(HistogramData {
        bin_edges,
        densities,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Csv,
}

impl PlotFormat {
    /// Picks the format from a `.svg` or `.csv` extension.
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase) {
            Some(e) if e == "svg" => Ok(Self::Svg),
            Some(e) if e == "csv" => Ok(Self::Csv),
            _ => Err(Error::InvalidInput(format!(
                "plot path {} must end in .svg or .csv",
                path.display()
            ))),
        }
    }
}

fn curve(params: &WachterParams) -> Vec<(f64, f64)> {
    let (lm, lp) = (params.lambda_minus, params.lambda_plus);
    (0..CURVE_POINTS)
        .map(|i| {
            let x = lm + (lp - lm) * i as f64 / (CURVE_POINTS - 1) as f64;
            (x, wachter_density(x, params))
        })
        .collect()
}

pub fn diagnostic_csv(hist: &HistogramData, params: &WachterParams) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# wachter p={} q={} lminus={} lplus={}",
        params.p, params.q, params.lambda_minus, params.lambda_plus
    );
    for (d, w) in hist.densities.iter().zip(hist.bin_edges.windows(2)) {
        let _ = writeln!(out, "bin,{},{},{}", w[0], w[1], d);
    }
    for (x, y) in curve(params) {
        let _ = writeln!(out, "curve,{x},{y}");
    }
    out
}

pub fn diagnostic_svg(hist: &HistogramData, params: &WachterParams) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const MARGIN: f64 = 50.0;
    let pts = curve(params);
    let x_lo = hist.bin_edges[0];
    let x_hi = *hist.bin_edges.last().unwrap();
    let y_hi = hist
        .densities
        .iter()
        .copied()
        .chain(pts.iter().map(|p| p.1))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE)
        * 1.05;
    let sx = |x: f64| MARGIN + (x - x_lo) / (x_hi - x_lo) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - y / y_hi * (H - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="25" text-anchor="middle" font-family="sans-serif" font-size="14">Histogram of eigenvalues and Wachter density</text>"#,
        W / 2.0
    );
    for (d, w) in hist.densities.iter().zip(hist.bin_edges.windows(2)) {
        let (x0, x1) = (sx(w[0]), sx(w[1]));
        let (top, base) = (sy(*d), sy(0.0));
        let _ = writeln!(
            s,
            r##"<rect x="{x0:.3}" y="{top:.3}" width="{:.3}" height="{:.3}" fill="#9ecae1" stroke="#3182bd" stroke-width="0.5"/>"##,
            x1 - x0,
            base - top
        );
    }
    let mut d = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        let _ = write!(d, "{}{:.3},{:.3} ", if i == 0 { "M" } else { "L" }, sx(*x), sy(*y));
    }
    let _ = writeln!(
        s,
        r##"<path d="{}" fill="none" stroke="#de2d26" stroke-width="2"/>"##,
        d.trim_end()
    );
    let base = sy(0.0);
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="{base:.3}" x2="{}" y2="{base:.3}" stroke="black"/>"#,
        W - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{base:.3}" stroke="black"/>"#
    );
    for (x, anchor) in [(x_lo, "start"), (x_hi, "end")] {
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="{anchor}" font-family="sans-serif" font-size="11">{x:.3}</text>"#,
            sx(x),
            base + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{:.3}" text-anchor="end" font-family="sans-serif" font-size="11">{y_hi:.2}</text>"#,
        MARGIN - 4.0,
        sy(y_hi) + 4.0
    );
    s.push_str("</svg>\n");
    s
}

pub fn render_diagnostic(
    hist: &HistogramData,
    params: &WachterParams,
    path: &Path,
    format: PlotFormat,
) -> Result<()> {
    let body = match format {
        PlotFormat::Svg => diagnostic_svg(hist, params),
        PlotFormat::Csv => diagnostic_csv(hist, params),
    };
    fs::write(path, body).map_err(|e| Error::io(path, e))
}
