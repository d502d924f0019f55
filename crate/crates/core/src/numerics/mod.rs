//! Dense and tridiagonal symmetric linear algebra.
//!
//! Dense matrices are `nalgebra::DMatrix<f64>`. Symmetric inputs are checked
//! against a relative asymmetry tolerance and symmetrized before use, since
//! cross-product matrices pick up roundoff in their off-diagonal halves.

mod tridiag;

pub use tridiag::{tridiag_top_eigenvalues, SymTridiag};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

pub type Matrix = DMatrix<f64>;

/// Relative asymmetry accepted (and removed) by [`symmetrized`].
pub const SYMMETRY_RTOL: f64 = 1e-10;

/// Largest absolute entry.
pub fn max_abs(a: &Matrix) -> f64 {
    a.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

fn check_finite(a: &Matrix, what: &str) -> Result<()> {
    if a.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{what} contains non-finite entries")))
    }
}

/// Returns `(A + Aᵀ)/2` when `A` is square and symmetric to within
/// `SYMMETRY_RTOL * max|A|`.
pub fn symmetrized(a: &Matrix) -> Result<Matrix> {
    if a.nrows() != a.ncols() {
        return Err(Error::Dimension(format!(
            "expected a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.nrows() == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    check_finite(a, "matrix")?;
    let n = a.nrows();
    let mut asym = 0.0_f64;
    for j in 0..n {
        for i in (j + 1)..n {
            asym = asym.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    let tolerance = SYMMETRY_RTOL * max_abs(a);
    if asym > tolerance {
        return Err(Error::NotSymmetric {
            asymmetry: asym,
            tolerance,
        });
    }
    Ok((a + a.transpose()) * 0.5)
}

/// Lower-triangular Cholesky factor `L` with `A = L Lᵀ`.
///
/// Fails with `NotPositiveDefinite` on the first pivot that is not strictly
/// positive.
pub fn cholesky_lower(a: &Matrix) -> Result<Matrix> {
    let a = symmetrized(a)?;
    let n = a.nrows();
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut pivot = a[(j, j)];
        for p in 0..j {
            pivot -= l[(j, p)] * l[(j, p)];
        }
        if pivot.is_nan() || pivot <= 0.0 {
            return Err(Error::NotPositiveDefinite { index: j, pivot });
        }
        let d = pivot.sqrt();
        l[(j, j)] = d;
        for i in (j + 1)..n {
            let mut s = a[(i, j)];
            for p in 0..j {
                s -= l[(i, p)] * l[(j, p)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

/// `L⁻¹ B` for lower-triangular `L`.
pub(crate) fn lower_solve(l: &Matrix, b: &Matrix) -> Result<Matrix> {
    l.solve_lower_triangular(b)
        .ok_or_else(|| Error::Numerical("singular triangular factor".into()))
}

/// `L⁻ᵀ B` for lower-triangular `L`.
pub(crate) fn lower_transpose_solve(l: &Matrix, b: &Matrix) -> Result<Matrix> {
    l.tr_solve_lower_triangular(b)
        .ok_or_else(|| Error::Numerical("singular triangular factor".into()))
}

/// Solves `A X = B` for symmetric positive definite `A` through its Cholesky
/// factor. `A` is never inverted explicitly.
pub fn solve_spd(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.nrows() != b.nrows() {
        return Err(Error::Dimension(format!(
            "solve_spd: A is {}x{} but B has {} rows",
            a.nrows(),
            a.ncols(),
            b.nrows()
        )));
    }
    check_finite(b, "right-hand side")?;
    let l = cholesky_lower(a)?;
    let y = lower_solve(&l, b)?;
    lower_transpose_solve(&l, &y)
}

/// All eigenvalues of a symmetric matrix, in descending order.
pub fn sym_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    let a = symmetrized(a)?;
    let mut eigs: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|x, y| y.total_cmp(x));
    Ok(eigs)
}
