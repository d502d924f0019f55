//! The modified Johansen likelihood-ratio pipeline for large `N` and `T`:
//! detrending, cyclic regressors, residualization, squared canonical
//! correlations, the LR statistic and its `(N, T)` rescaling.

use crate::error::{Error, Result};
use crate::numerics::{cholesky_lower, lower_solve, solve_spd, sym_eigenvalues, Matrix};
use crate::tables::{self, SignificanceRow};

/// Overshoot outside `[0, 1]` that is clamped away; anything larger is a
/// numerical failure.
const CLAMP_TOL: f64 = 1e-12;

/// Observations `X_0, ..., X_T` of an `N`-dimensional series, one row per
/// time point.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesMatrix {
    data: Matrix,
}

impl TimeSeriesMatrix {
    pub fn new(data: Matrix) -> Result<Self> {
        if data.nrows() < 2 || data.ncols() < 1 {
            return Err(Error::Dimension(format!(
                "time series needs at least 2 time points and 1 series, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("time series contains non-finite values".into()));
        }
        Ok(Self { data })
    }

    /// Builds from row vectors, one per time point.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = Matrix::from_fn(rows.len(), n, |i, j| rows[i][j]);
        Self::new(data)
    }

    /// Number of increments `T` (rows minus one).
    pub fn t(&self) -> usize {
        self.data.nrows() - 1
    }

    /// Number of series `N`.
    pub fn n(&self) -> usize {
        self.data.ncols()
    }

    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn into_inner(self) -> Matrix {
        self.data
    }

    /// `ΔX_t = X_t - X_{t-1}` as an `N`-vector, `1 <= t <= T`.
    fn diff_into(&self, t: usize, out: &mut [f64]) {
        for (j, o) in out.iter_mut().enumerate() {
            *o = self.data[(t, j)] - self.data[(t - 1, j)];
        }
    }
}

/// Constants of the Wachter limit and of the LR rescaling for given
/// `(N, T, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WachterParams {
    pub p: f64,
    pub q: f64,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    pub c1: f64,
    pub c2: f64,
}

impl WachterParams {
    /// Wachter support endpoints for arbitrary shape parameters.
    pub fn support(p: f64, q: f64) -> (f64, f64) {
        let s = p + q;
        let a = (p * (s - 1.0)).sqrt();
        let b = q.sqrt();
        ((a - b).powi(2) / (s * s), (a + b).powi(2) / (s * s))
    }

    /// Parameters with the given `(p, q)`; `c1` and `c2` follow from the
    /// support.
    pub fn from_shape(p: f64, q: f64) -> Result<Self> {
        if !(p > 1.0 && q > 1.0) {
            return Err(Error::Dimension(format!(
                "Wachter parameters need p > 1 and q > 1 (got p={p}, q={q})"
            )));
        }
        let (lambda_minus, lambda_plus) = Self::support(p, q);
        let c1 = (1.0 - lambda_plus).ln();
        let c2 = -(2.0_f64.powf(2.0 / 3.0) * lambda_plus.powf(2.0 / 3.0))
            / ((1.0 - lambda_plus).cbrt() * (lambda_plus - lambda_minus).cbrt())
            * (p + q).powf(-2.0 / 3.0);
        Ok(Self {
            p,
            q,
            lambda_minus,
            lambda_plus,
            c1,
            c2,
        })
    }
}

fn check_regime(n: usize, t: usize, k: usize) -> Result<()> {
    if n == 0 || t == 0 || k == 0 {
        return Err(Error::Dimension(format!(
            "N, T and k must be positive (N={n}, T={t}, k={k})"
        )));
    }
    if t <= (k + 1) * n {
        return Err(Error::Dimension(format!(
            "requires T/N > k+1, got T={t}, N={n}, k={k} (T/N = {:.4})",
            t as f64 / n as f64
        )));
    }
    Ok(())
}

/// `p = 2`, `q = T/N - k` and the derived support and scaling constants.
pub fn scaling_constants(n: usize, t: usize, k: usize) -> Result<WachterParams> {
    check_regime(n, t, k)?;
    WachterParams::from_shape(2.0, t as f64 / n as f64 - k as f64)
}

/// Detrended, shifted levels: row `t-1` holds
/// `X̃_t = X_{t-1} - (t-1)/T · (X_T - X_0)` for `t = 1..T`.
pub fn detrend(ts: &TimeSeriesMatrix) -> Matrix {
    let t_len = ts.t();
    let x = ts.data();
    let n = ts.n();
    Matrix::from_fn(t_len, n, |row, j| {
        let slope = (x[(t_len, j)] - x[(0, j)]) / t_len as f64;
        x[(row, j)] - row as f64 * slope
    })
}

/// Index `a` reduced modulo `T` into `1..=T`.
pub fn cyclic_index(a: i64, t: usize) -> usize {
    assert!(t >= 1, "cyclic index needs T >= 1");
    ((a - 1).rem_euclid(t as i64) + 1) as usize
}

/// Regressor blocks, each with one column per time point `t = 1..T`.
#[derive(Debug, Clone)]
pub struct Regressors {
    /// `ΔX_t`, `N × T`.
    pub z0: Matrix,
    /// Detrended levels lagged by `k-1`, `N × T`.
    pub zk: Matrix,
    /// Lagged differences `ΔX_{t-1}, ..., ΔX_{t-k+1}` and a constant,
    /// `((k-1)N + 1) × T`.
    pub z1: Matrix,
}

/// Builds the regressor blocks with cyclic indices. `detrended` is the
/// output of [`detrend`].
pub fn build_regressors(ts: &TimeSeriesMatrix, detrended: &Matrix, k: usize) -> Result<Regressors> {
    let (n, t_len) = (ts.n(), ts.t());
    check_regime(n, t_len, k)?;
    if detrended.nrows() != t_len || detrended.ncols() != n {
        return Err(Error::Dimension(format!(
            "detrended matrix must be {t_len}x{n}, got {}x{}",
            detrended.nrows(),
            detrended.ncols()
        )));
    }
    let mut z0 = Matrix::zeros(n, t_len);
    let mut zk = Matrix::zeros(n, t_len);
    let mut z1 = Matrix::zeros((k - 1) * n + 1, t_len);
    let mut diff = vec![0.0; n];
    for t in 1..=t_len {
        let col = t - 1;
        ts.diff_into(t, &mut diff);
        z0.column_mut(col).copy_from_slice(&diff);

        let lvl = cyclic_index(t as i64 - k as i64 + 1, t_len);
        for j in 0..n {
            zk[(j, col)] = detrended[(lvl - 1, j)];
        }

        for lag in 1..k {
            let s = cyclic_index(t as i64 - lag as i64, t_len);
            ts.diff_into(s, &mut diff);
            for j in 0..n {
                z1[((lag - 1) * n + j, col)] = diff[j];
            }
        }
        z1[((k - 1) * n, col)] = 1.0;
    }
    Ok(Regressors { z0, zk, z1 })
}

/// Residuals of the rows of `zi` after least-squares projection on the rows
/// of `z1`.
pub fn residualize(zi: &Matrix, z1: &Matrix) -> Result<Matrix> {
    if zi.ncols() != z1.ncols() {
        return Err(Error::Dimension(format!(
            "regressand has {} columns, regressors {}",
            zi.ncols(),
            z1.ncols()
        )));
    }
    let gram = z1 * z1.transpose();
    let cross = z1 * zi.transpose();
    let coef = solve_spd(&gram, &cross)?;
    Ok(zi - coef.transpose() * z1)
}

/// Squared canonical correlations between the rows of `r0` and `rk`,
/// descending, each in `[0, 1]`.
///
/// With `S00 = L0 L0ᵀ` and `Skk = Lk Lkᵀ`, these are the squared singular
/// values of `W = L0⁻¹ S0k Lk⁻ᵀ`, i.e. the eigenvalues of `W Wᵀ`, which are
/// also the eigenvalues of `Sk0 S00⁻¹ S0k Skk⁻¹`.
pub fn squared_canonical_correlations(r0: &Matrix, rk: &Matrix) -> Result<Vec<f64>> {
    if r0.shape() != rk.shape() {
        return Err(Error::Dimension(format!(
            "residual blocks differ in shape: {:?} vs {:?}",
            r0.shape(),
            rk.shape()
        )));
    }
    let s00 = r0 * r0.transpose();
    let skk = rk * rk.transpose();
    let s0k = r0 * rk.transpose();
    let l0 = cholesky_lower(&s00)?;
    let lk = cholesky_lower(&skk)?;
    let a = lower_solve(&l0, &s0k)?;
    let w = lower_solve(&lk, &a.transpose())?.transpose();
    let wwt = &w * w.transpose();
    let wwt = (&wwt + wwt.transpose()) * 0.5;
    sym_eigenvalues(&wwt)?
        .into_iter()
        .map(|e| {
            if (-CLAMP_TOL..=1.0 + CLAMP_TOL).contains(&e) {
                Ok(e.clamp(0.0, 1.0))
            } else {
                Err(Error::Numerical(format!(
                    "squared canonical correlation {e} outside [0, 1]"
                )))
            }
        })
        .collect()
}

/// `Σ_{i<=r} ln(1 - λ_i)`; `-∞` when some `λ_i = 1`.
pub fn lr_statistic(eigs: &[f64], r: usize) -> f64 {
    eigs[..r].iter().map(|&l| (1.0 - l).ln()).sum()
}

/// `(lr - r·c1) / (N^{-2/3} c2)`. An `lr` of `-∞` maps to `+∞`.
pub fn rescaled_statistic(lr: f64, r: usize, n: usize, params: &WachterParams) -> f64 {
    (lr - r as f64 * params.c1) / ((n as f64).powf(-2.0 / 3.0) * params.c2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestOptions {
    pub k: usize,
    pub r: usize,
    pub alpha: f64,
    pub fin_sample_corr: bool,
}

impl Default for TestOptions {
    fn default() -> Self {
        Self {
            k: 1,
            r: 1,
            alpha: 0.05,
            fin_sample_corr: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub r: usize,
    pub alpha: f64,
    /// Squared canonical correlations, descending.
    pub eigenvalues: Vec<f64>,
    pub lr_raw: f64,
    pub statistic: f64,
    pub params: WachterParams,
    /// Present only for `r <= 10`.
    pub p_value: Option<f64>,
    /// `true` rejects the no-cointegration null. Present only for `r <= 10`.
    pub decision: Option<bool>,
    pub significance_table: Vec<SignificanceRow>,
}

/// Squared canonical correlations of the pipeline for lag order `k`.
pub fn pipeline_eigenvalues(ts: &TimeSeriesMatrix, k: usize) -> Result<Vec<f64>> {
    let detrended = detrend(ts);
    let reg = build_regressors(ts, &detrended, k)?;
    let r0 = residualize(&reg.z0, &reg.z1)?;
    let rk = residualize(&reg.zk, &reg.z1)?;
    squared_canonical_correlations(&r0, &rk)
}

/// Runs the full test and attaches tabulated p-value, decision and the
/// significance table.
pub fn run_test(ts: &TimeSeriesMatrix, opts: &TestOptions) -> Result<TestResult> {
    let (n, t) = (ts.n(), ts.t());
    let TestOptions {
        k,
        r,
        alpha,
        fin_sample_corr,
    } = *opts;
    if fin_sample_corr {
        return Err(Error::UnsupportedCorrection);
    }
    let params = scaling_constants(n, t, k)?;
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!("r must satisfy 1 <= r <= N={n}, got {r}")));
    }
    tables::level_index(1.0 - alpha)?;

    let eigenvalues = pipeline_eigenvalues(ts, k)?;
    let lr_raw = lr_statistic(&eigenvalues, r);
    let statistic = rescaled_statistic(lr_raw, r, n, &params);
    let (p_value, decision) = if r <= tables::MAX_R {
        (
            Some(tables::p_value(r, statistic)?),
            Some(tables::decide(r, statistic, alpha)?),
        )
    } else {
        (None, None)
    };
    let significance_table = tables::significance_table(&eigenvalues, n, t, k)?;
    Ok(TestResult {
        n,
        t,
        k,
        r,
        alpha,
        eigenvalues,
        lr_raw,
        statistic,
        params,
        p_value,
        decision,
        significance_table,
    })
}
