use rand::Rng;
use rand_distr::StandardNormal;

use crate::coint::TimeSeriesMatrix;
use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Simulates `ΔX_t = Π X_{t-2} + Γ ΔX_{t-1} + ε_t` for `t = 1..T` with
/// standard normal errors, started from independent standard normal
/// `X_{-1}` and `X_0`. Returns rows `X_0, ..., X_T`.
pub fn simulate_error_correction<R: Rng + ?Sized>(
    pi: &Matrix,
    gamma: &Matrix,
    t_len: usize,
    rng: &mut R,
) -> Result<TimeSeriesMatrix> {
    let n = pi.nrows();
    if pi.shape() != (n, n) || gamma.shape() != (n, n) || n == 0 {
        return Err(Error::Dimension("Π and Γ must be square and of equal size".into()));
    }
    if t_len == 0 {
        return Err(Error::Dimension("T must be positive".into()));
    }
    let draw = |rng: &mut R| nalgebra::DVector::from_fn(n, |_, _| rng.sample(StandardNormal));
    let x_minus1 = draw(rng);
    let x0 = draw(rng);
    let eps = Matrix::from_fn(n, t_len, |_, _| rng.sample(StandardNormal));

    let mut out = Matrix::zeros(t_len + 1, n);
    out.row_mut(0).copy_from(&x0.transpose());
    let mut lag2 = x_minus1;
    let mut lag1 = x0;
    let mut dx_prev = &lag1 - &lag2;
    for t in 1..=t_len {
        let dx = pi * &lag2 + gamma * &dx_prev + eps.column(t - 1);
        let x = &lag1 + &dx;
        out.row_mut(t).copy_from(&x.transpose());
        lag2 = std::mem::replace(&mut lag1, x);
        dx_prev = dx;
    }
    TimeSeriesMatrix::new(out)
}

/// The rank-2 VAR(2) example: two cointegrated pairs in coordinates (1,2)
/// and (4,5), pure random walks elsewhere. Requires `n >= 5`.
pub fn example_var2_dataset<R: Rng + ?Sized>(
    n: usize,
    t_len: usize,
    rng: &mut R,
) -> Result<TimeSeriesMatrix> {
    if n < 5 {
        return Err(Error::Dimension(format!("example needs N >= 5, got {n}")));
    }
    let mut pi = Matrix::zeros(n, n);
    pi[(0, 0)] = -0.9;
    pi[(0, 1)] = 0.8;
    pi[(3, 3)] = -0.9;
    pi[(3, 4)] = 0.8;
    let mut gamma = Matrix::zeros(n, n);
    gamma[(0, 0)] = -0.7;
    gamma[(0, 1)] = 0.8;
    gamma[(1, 1)] = 0.3;
    gamma[(3, 3)] = -1.2;
    gamma[(3, 4)] = 0.8;
    gamma[(4, 4)] = 0.25;
    simulate_error_correction(&pi, &gamma, t_len, rng)
}
