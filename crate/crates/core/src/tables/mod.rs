//! Embedded quantile tables of `Σ_{i<=r} a_i` (partial sums of the Airy_1
//! point process) for `r = 1..10`, with p-value and decision lookup.
//!
//! Levels are held as integer indices `0..100` (level = index / 100) so that
//! no floating-point comparison of levels ever happens. There is no
//! interpolation between grid levels.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::coint::{lr_statistic, rescaled_statistic, scaling_constants};
use crate::error::{Error, Result};

pub const MAX_R: usize = 10;
pub const LEVELS: usize = 100;

/// Levels reported in the significance table.
pub const SIGNIFICANCE_LEVELS: [usize; 4] = [90, 95, 97, 99];

const EMBEDDED: [&str; MAX_R] = [
    include_str!("data/airy_r01.txt"),
    include_str!("data/airy_r02.txt"),
    include_str!("data/airy_r03.txt"),
    include_str!("data/airy_r04.txt"),
    include_str!("data/airy_r05.txt"),
    include_str!("data/airy_r06.txt"),
    include_str!("data/airy_r07.txt"),
    include_str!("data/airy_r08.txt"),
    include_str!("data/airy_r09.txt"),
    include_str!("data/airy_r10.txt"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct QuantileTable {
    r: usize,
    values: [f64; LEVELS],
}

impl QuantileTable {
    /// Validates that level 0 is `-∞`, the rest finite and the whole row
    /// non-decreasing.
    pub fn new(r: usize, values: [f64; LEVELS]) -> Result<Self> {
        if values[0] != f64::NEG_INFINITY {
            return Err(Error::InvalidInput("level 0.00 must be -inf".into()));
        }
        if let Some(i) = (1..LEVELS).find(|&i| !values[i].is_finite()) {
            return Err(Error::InvalidInput(format!("level 0.{i:02} is not finite")));
        }
        if let Some(i) = (1..LEVELS).find(|&i| values[i] < values[i - 1]) {
            return Err(Error::InvalidInput(format!(
                "quantiles decrease between levels 0.{:02} and 0.{i:02}",
                i - 1
            )));
        }
        Ok(Self { r, values })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[f64; LEVELS] {
        &self.values
    }

    /// Value at level `index / 100`.
    pub fn at(&self, index: usize) -> f64 {
        self.values[index]
    }

    /// Value at a level on the 0.01 grid.
    pub fn quantile(&self, level: f64) -> Result<f64> {
        Ok(self.values[level_index(level)?])
    }

    /// Parses the text format: `#` comments and `q=<0.00..0.99> <value|-inf>`
    /// lines, every level exactly once.
    pub fn parse(r: usize, text: &str) -> Result<Self> {
        let mut values = [f64::NAN; LEVELS];
        let mut seen = [false; LEVELS];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse(format!("table line {}: {line:?}", lineno + 1));
            let rest = line.strip_prefix("q=").ok_or_else(bad)?;
            let (level, value) = rest.split_once(char::is_whitespace).ok_or_else(bad)?;
            let idx = parse_level(level).ok_or_else(bad)?;
            let value = match value.trim() {
                "-inf" => f64::NEG_INFINITY,
                v => v.parse::<f64>().map_err(|_| bad())?,
            };
            if seen[idx] {
                return Err(Error::Parse(format!("duplicate level {level}")));
            }
            seen[idx] = true;
            values[idx] = value;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Parse(format!("missing level 0.{i:02}")));
        }
        Self::new(r, values)
    }

    /// Serializes to the text format, with the given comment lines on top.
    pub fn to_text(&self, header: &[String]) -> String {
        let mut out = String::new();
        for h in header {
            let _ = writeln!(out, "# {h}");
        }
        for (i, v) in self.values.iter().enumerate() {
            if v.is_infinite() {
                let _ = writeln!(out, "q=0.{i:02} -inf");
            } else {
                let _ = writeln!(out, "q=0.{i:02} {v:.4}");
            }
        }
        out
    }
}

fn parse_level(s: &str) -> Option<usize> {
    let digits = s.strip_prefix("0.")?;
    if digits.len() != 2 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Grid index of a level that must be a multiple of 0.01 in `[0, 1)`.
pub fn level_index(level: f64) -> Result<usize> {
    let scaled = level * 100.0;
    let idx = scaled.round();
    if !(0.0..LEVELS as f64).contains(&idx) || (scaled - idx).abs() > 1e-9 {
        return Err(Error::OutOfRange(format!(
            "level {level} is not on the 0.01 grid within [0, 0.99]"
        )));
    }
    Ok(idx as usize)
}

fn check_r(r: usize) -> Result<()> {
    if (1..=MAX_R).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "quantile tables exist for r = 1..{MAX_R}, got r = {r}"
        )))
    }
}

fn embedded() -> &'static [QuantileTable] {
    static TABLES: OnceLock<Vec<QuantileTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        EMBEDDED
            .iter()
            .enumerate()
            .map(|(i, text)| {
                QuantileTable::parse(i + 1, text)
                    .unwrap_or_else(|e| panic!("embedded table r={} is invalid: {e}", i + 1))
            })
            .collect()
    })
}

pub fn quantile_table(r: usize) -> Result<&'static QuantileTable> {
    check_r(r)?;
    Ok(&embedded()[r - 1])
}

/// Raw text of the embedded table file for `r`.
pub fn embedded_table_text(r: usize) -> Result<&'static str> {
    check_r(r)?;
    Ok(EMBEDDED[r - 1])
}

/// `1 - q*`, where `q*` is the largest level whose quantile is `<= stat`.
/// Values live on the grid `{0.01, ..., 1.00}`.
pub fn p_value(r: usize, stat: f64) -> Result<f64> {
    let table = quantile_table(r)?;
    if stat.is_nan() {
        return Err(Error::InvalidInput("statistic is NaN".into()));
    }
    let q_star = table
        .values
        .iter()
        .rposition(|&v| v <= stat)
        .expect("level 0.00 is -inf");
    Ok((LEVELS - q_star) as f64 / 100.0)
}

/// Rejects (`true`) iff `stat` is strictly above the quantile at level
/// `1 - alpha`.
pub fn decide(r: usize, stat: f64, alpha: f64) -> Result<bool> {
    let table = quantile_table(r)?;
    let idx = level_index(1.0 - alpha)?;
    if idx == 0 {
        return Err(Error::OutOfRange(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok(stat > table.at(idx))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignificanceRow {
    pub r: usize,
    /// Quantiles at levels 0.90, 0.95, 0.97, 0.99.
    pub quantiles: [f64; 4],
    pub statistic: f64,
}

/// One row per `r = 1..min(10, N)`: tabulated quantiles and the rescaled
/// statistic built from the same eigenvalues.
pub fn significance_table(eigs: &[f64], n: usize, t: usize, k: usize) -> Result<Vec<SignificanceRow>> {
    if eigs.len() != n {
        return Err(Error::Dimension(format!(
            "expected {n} eigenvalues, got {}",
            eigs.len()
        )));
    }
    let params = scaling_constants(n, t, k)?;
    (1..=MAX_R.min(n))
        .map(|r| {
            let table = quantile_table(r)?;
            let lr = lr_statistic(eigs, r);
            Ok(SignificanceRow {
                r,
                quantiles: SIGNIFICANCE_LEVELS.map(|i| table.at(i)),
                statistic: rescaled_statistic(lr, r, n, &params),
            })
        })
        .collect()
}
