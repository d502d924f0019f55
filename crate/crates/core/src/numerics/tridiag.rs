//! Symmetric tridiagonal matrices and Sturm-sequence bisection for the
//! largest eigenvalues.

use super::Matrix;
use crate::error::{Error, Result};

/// Absolute bisection tolerance, relative to `max(1, ‖T‖∞)`.
const BISECTION_RTOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    offdiag_sq: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Dimension("tridiagonal matrix needs M >= 1".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Dimension(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if !diag.iter().chain(&offdiag).all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("tridiagonal entries must be finite".into()));
        }
        let offdiag_sq = offdiag.iter().map(|e| e * e).collect();
        Ok(Self {
            diag,
            offdiag,
            offdiag_sq,
        })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    fn row_radius(&self, i: usize) -> f64 {
        let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
        let right = self.offdiag.get(i).map_or(0.0, |e| e.abs());
        left + right
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.len())
            .map(|i| self.diag[i].abs() + self.row_radius(i))
            .fold(0.0, f64::max)
    }

    /// Gershgorin interval, widened by a few ulps so that
    /// `count_below(lo) == 0` and `count_below(hi) == M`.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let r = self.row_radius(i);
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        let pad = 4.0 * f64::EPSILON * self.inf_norm().max(1.0) * self.len() as f64;
        (lo - pad, hi + pad)
    }

    /// Number of eigenvalues strictly below `x`, from the signs of the LDLᵀ
    /// pivots of `T - xI`.
    pub fn count_below(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE * self.offdiag_sq.iter().fold(1.0_f64, |m, &v| m.max(v));
        let mut q = self.diag[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        let mut count = usize::from(q < 0.0);
        for (d, e2) in self.diag[1..].iter().zip(&self.offdiag_sq) {
            q = (d - x) - e2 / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            count += usize::from(q < 0.0);
        }
        count
    }

    pub fn to_dense(&self) -> Matrix {
        let n = self.len();
        let mut a = Matrix::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = self.diag[i];
        }
        for (i, &e) in self.offdiag.iter().enumerate() {
            a[(i, i + 1)] = e;
            a[(i + 1, i)] = e;
        }
        a
    }
}

/// The `r` largest eigenvalues of `t`, descending.
///
/// Each eigenvalue is isolated by bisection on Sturm counts inside the
/// Gershgorin interval; no dense matrix is formed. Counts computed for one
/// eigenvalue are reused to tighten the brackets of the following ones.
pub fn tridiag_top_eigenvalues(t: &SymTridiag, r: usize) -> Result<Vec<f64>> {
    let m = t.len();
    if r == 0 || r > m {
        return Err(Error::OutOfRange(format!(
            "requested {r} eigenvalues of a {m}x{m} tridiagonal matrix"
        )));
    }
    let (glo, ghi) = t.gershgorin_bounds();
    let tol = BISECTION_RTOL * t.inf_norm().max(1.0);

    // (x, count_below(x)) pairs seen so far.
    let mut probes: Vec<(f64, usize)> = vec![(glo, 0), (ghi, m)];
    let mut out = Vec::with_capacity(r);
    for i in 1..=r {
        // λ_i is the largest x with count_below(x) <= m - i.
        let target = m - i;
        let mut lo = glo;
        let mut hi = ghi;
        for &(x, c) in &probes {
            if c <= target {
                lo = lo.max(x);
            } else {
                hi = hi.min(x);
            }
        }
        loop {
            let width = hi - lo;
            if width <= tol.max(2.0 * f64::EPSILON * lo.abs().max(hi.abs())) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let c = t.count_below(mid);
            probes.push((mid, c));
            if c <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}
