use std::io::Write;

use rand::Rng;
use rand_distr::{Distribution, Gamma, Normal};
use rayon::prelude::*;

use super::stream_rng;
use crate::error::{Error, Result};
use crate::numerics::{tridiag_top_eigenvalues, SymTridiag};
use crate::tables::{QuantileTable, LEVELS};

/// Minimum batch size accepted by [`estimate_quantile_table`].
pub const MIN_SAMPLES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AirySimConfig {
    /// Size of the full tridiagonal model whose edge is rescaled.
    pub n_full: u64,
    /// Size of the top-left corner actually diagonalized.
    pub m: usize,
    pub r_max: usize,
    pub num_sims: usize,
    pub seed: u64,
}

impl AirySimConfig {
    /// Corner size defaults to `floor(sqrt(n_full))`.
    pub fn new(n_full: u64, r_max: usize, num_sims: usize, seed: u64) -> Self {
        Self {
            n_full,
            m: (n_full as f64).sqrt().floor() as usize,
            r_max,
            num_sims,
            seed,
        }
    }

    /// `n_full = 1e6`, `m = 1000`, `r_max = 10`, `2e4` runs.
    pub fn desk_scale(seed: u64) -> Self {
        Self::new(1_000_000, 10, 20_000, seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.m as u64 > self.n_full {
            return Err(Error::InvalidInput(format!(
                "corner size m={} must satisfy 1 <= m <= n_full={}",
                self.m, self.n_full
            )));
        }
        if self.r_max == 0 || self.r_max > self.m {
            return Err(Error::InvalidInput(format!(
                "r_max={} must satisfy 1 <= r_max <= m={}",
                self.r_max, self.m
            )));
        }
        if self.num_sims == 0 {
            return Err(Error::InvalidInput("num_sims must be at least 1".into()));
        }
        Ok(())
    }
}

/// Cumulative sums of the rescaled top eigenvalues, one row per run.
#[derive(Debug, Clone, PartialEq)]
pub struct AirySimBatch {
    r_max: usize,
    samples: Vec<f64>,
}

impl AirySimBatch {
    pub fn from_rows(r_max: usize, rows: &[Vec<f64>]) -> Result<Self> {
        if r_max == 0 || rows.iter().any(|r| r.len() != r_max) {
            return Err(Error::Dimension(format!("every row must have {r_max} entries")));
        }
        Ok(Self {
            r_max,
            samples: rows.concat(),
        })
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn num_sims(&self) -> usize {
        self.samples.len() / self.r_max
    }

    /// Partial sum of the top `r` points (1-based) in run `s`.
    pub fn get(&self, s: usize, r: usize) -> f64 {
        self.samples[s * self.r_max + r - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.samples.chunks(self.r_max)
    }

    /// All runs' partial sums of the top `r` points.
    pub fn column(&self, r: usize) -> Vec<f64> {
        self.rows().map(|row| row[r - 1]).collect()
    }

    /// CSV with header `r1,...,r<r_max>` and one line per run.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let header: Vec<String> = (1..=self.r_max).map(|r| format!("r{r}")).collect();
        writeln!(w, "{}", header.join(","))?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }
}

/// Top-left `m × m` corner of the tridiagonal GOE model of size `n_full`:
/// diagonal `N(0, 2)`, off-diagonal entry `j` distributed as `χ_{n_full-j}`.
pub fn sample_corner_tridiag(cfg: &AirySimConfig, run: u64) -> SymTridiag {
    let mut rng = stream_rng(cfg.seed, run);
    corner_from_rng(cfg, &mut rng)
}

fn corner_from_rng<R: Rng>(cfg: &AirySimConfig, rng: &mut R) -> SymTridiag {
    let normal = Normal::new(0.0, std::f64::consts::SQRT_2).expect("valid normal");
    let diag: Vec<f64> = (0..cfg.m).map(|_| normal.sample(rng)).collect();
    let offdiag: Vec<f64> = (1..cfg.m as u64)
        .map(|j| {
            let dof = (cfg.n_full - j) as f64;
            Gamma::new(0.5 * dof, 2.0)
                .expect("positive shape")
                .sample(rng)
                .sqrt()
        })
        .collect();
    SymTridiag::new(diag, offdiag).expect("sampled entries are finite")
}

fn run_partial_sums(cfg: &AirySimConfig, run: u64) -> Vec<f64> {
    let t = sample_corner_tridiag(cfg, run);
    let top = tridiag_top_eigenvalues(&t, cfg.r_max).expect("r_max validated");
    let n = cfg.n_full as f64;
    let scale = n.powf(1.0 / 6.0);
    let edge = 2.0 * n.sqrt();
    let mut acc = 0.0;
    top.iter()
        .map(|mu| {
            acc += scale * (mu - edge);
            acc
        })
        .collect()
}

/// Runs `num_sims` independent corners in parallel and returns the
/// cumulative sums of the rescaled top `r_max` eigenvalues
/// `n_full^{1/6} (μ_i - 2 sqrt(n_full))`.
pub fn airy_partial_sums(cfg: &AirySimConfig) -> Result<AirySimBatch> {
    cfg.validate()?;
    let samples: Vec<f64> = (0..cfg.num_sims as u64)
        .into_par_iter()
        .flat_map_iter(|run| run_partial_sums(cfg, run))
        .collect();
    Ok(AirySimBatch {
        r_max: cfg.r_max,
        samples,
    })
}

/// Empirical quantiles of the `r` column: the value at level `i/100` is the
/// `ceil(i·n/100)`-th order statistic; level 0 is `-∞`.
pub fn estimate_quantile_table(batch: &AirySimBatch, r: usize) -> Result<QuantileTable> {
    if r == 0 || r > batch.r_max {
        return Err(Error::OutOfRange(format!(
            "r={r} outside the batch's 1..={}",
            batch.r_max
        )));
    }
    let n = batch.num_sims();
    if n < MIN_SAMPLES {
        return Err(Error::InsufficientSamples {
            needed: MIN_SAMPLES,
            got: n,
        });
    }
    let mut col = batch.column(r);
    col.sort_by(f64::total_cmp);
    let mut values = [f64::NEG_INFINITY; LEVELS];
    for (i, v) in values.iter_mut().enumerate().skip(1) {
        let rank = (i * n).div_ceil(100);
        *v = col[rank - 1];
    }
    QuantileTable::new(r, values)
}

/// Level-wise mean of several estimates of the same table.
pub fn average_quantile_tables(tables: &[QuantileTable]) -> Result<QuantileTable> {
    let first = tables
        .first()
        .ok_or_else(|| Error::InvalidInput("no tables to average".into()))?;
    if tables.iter().any(|t| t.r() != first.r()) {
        return Err(Error::InvalidInput("tables disagree on r".into()));
    }
    let mut values = [f64::NEG_INFINITY; LEVELS];
    for (i, v) in values.iter_mut().enumerate().skip(1) {
        *v = tables.iter().map(|t| t.at(i)).sum::<f64>() / tables.len() as f64;
    }
    QuantileTable::new(first.r(), values)
}
