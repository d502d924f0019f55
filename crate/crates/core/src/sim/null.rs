use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use super::stream_rng;
use crate::coint::{
    lr_statistic, pipeline_eigenvalues, rescaled_statistic, scaling_constants, TimeSeriesMatrix,
};
use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Null-hypothesis simulation settings. `tau` counts time points, so
/// `T = tau - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct H0SimConfig {
    pub n: usize,
    pub tau: usize,
    pub k: usize,
    pub r: usize,
    pub fin_sample_corr: bool,
    pub sim_num: usize,
    pub seed: Option<u64>,
}

impl H0SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sim_num == 0 {
            return Err(Error::InvalidInput("number of simulations must be at least 1".into()));
        }
        if self.tau < 2 {
            return Err(Error::Dimension(format!("tau must be at least 2, got {}", self.tau)));
        }
        scaling_constants(self.n, self.tau - 1, self.k)?;
        if self.r == 0 || self.r > self.n {
            return Err(Error::OutOfRange(format!(
                "r must satisfy 1 <= r <= N={}, got {}",
                self.n, self.r
            )));
        }
        if self.fin_sample_corr {
            return Err(Error::UnsupportedCorrection);
        }
        Ok(())
    }
}

/// Levels `X_0 = 0, X_t = X_{t-1} + increment_t`; `increments` is `T × N`.
pub fn cumulative_walk(increments: &Matrix) -> Result<TimeSeriesMatrix> {
    let (t_len, n) = increments.shape();
    let mut x = Matrix::zeros(t_len + 1, n);
    for t in 1..=t_len {
        for j in 0..n {
            x[(t, j)] = x[(t - 1, j)] + increments[(t - 1, j)];
        }
    }
    TimeSeriesMatrix::new(x)
}

/// Driftless Gaussian random walk with `tau` time points: the VAR(k) null
/// with `Π = 0`, `Γ_i = 0`, `μ = 0` and `X_0 = 0`.
pub fn simulate_h0_dataset<R: Rng + ?Sized>(
    n: usize,
    tau: usize,
    k: usize,
    rng: &mut R,
) -> Result<TimeSeriesMatrix> {
    if tau < 2 {
        return Err(Error::Dimension(format!("tau must be at least 2, got {tau}")));
    }
    scaling_constants(n, tau - 1, k)?;
    let eps = Matrix::from_fn(tau - 1, n, |_, _| rng.sample(StandardNormal));
    cumulative_walk(&eps)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalPValue {
    pub p_value: f64,
    /// Rescaled statistics of the simulated null datasets, in run order.
    pub samples: Vec<f64>,
    /// Seed actually used (drawn at random when none was configured).
    pub seed: u64,
}

/// Fraction of simulated null statistics strictly larger than `stat_value`.
pub fn empirical_p_value(cfg: &H0SimConfig, stat_value: f64) -> Result<EmpiricalPValue> {
    cfg.validate()?;
    if stat_value.is_nan() {
        return Err(Error::InvalidInput("stat_value is NaN".into()));
    }
    let seed = cfg.seed.unwrap_or_else(|| rand::rng().random());
    let params = scaling_constants(cfg.n, cfg.tau - 1, cfg.k)?;
    let samples = (0..cfg.sim_num as u64)
        .into_par_iter()
        .map(|run| {
            let mut rng = stream_rng(seed, run);
            let ts = simulate_h0_dataset(cfg.n, cfg.tau, cfg.k, &mut rng)?;
            let eigs = pipeline_eigenvalues(&ts, cfg.k)?;
            Ok(rescaled_statistic(lr_statistic(&eigs, cfg.r), cfg.r, cfg.n, &params))
        })
        .collect::<Result<Vec<f64>>>()?;
    let above = samples.iter().filter(|&&s| s > stat_value).count();
    Ok(EmpiricalPValue {
        p_value: above as f64 / cfg.sim_num as f64,
        samples,
        seed,
    })
}
