//! Helpers shared by the integration test targets. The oracles here use
//! plain `Vec` arithmetic and do not call into the library's linear algebra.
#![allow(dead_code)]

use largevars::TimeSeriesMatrix;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type Rows = Vec<Vec<f64>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random walk levels, `t_len + 1` rows by `n` columns.
pub fn random_walk(n: usize, t_len: usize, rng: &mut impl Rng) -> Rows {
    let mut rows = vec![vec![0.0; n]];
    for _ in 0..t_len {
        let prev = rows.last().unwrap().clone();
        rows.push(prev.iter().map(|v| v + rng.sample::<f64, _>(StandardNormal)).collect());
    }
    rows
}

/// Random walk where column 0 is tied to column 1 by a stationary error,
/// so at least one canonical correlation stands out.
pub fn mixed_walk(n: usize, t_len: usize, rng: &mut impl Rng) -> Rows {
    let mut rows = random_walk(n, t_len, rng);
    if n >= 2 {
        for row in rows.iter_mut() {
            row[0] = 0.7 * row[1] + rng.sample::<f64, _>(StandardNormal);
        }
    }
    rows
}

pub fn ts(rows: &Rows) -> TimeSeriesMatrix {
    TimeSeriesMatrix::from_rows(rows).unwrap()
}

pub fn to_dmatrix(rows: &Rows) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), rows[0].len(), |i, j| rows[i][j])
}

/// Gaussian elimination with partial pivoting on a copy.
pub fn det(mut a: Rows) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                a[i][j] -= f * a[c][j];
            }
        }
    }
    d
}

/// Solves `a x = b` column by column via Gauss-Jordan with partial pivoting.
pub fn solve(a: &Rows, b: &Rows) -> Rows {
    let n = a.len();
    let m = b[0].len();
    let mut aug: Rows = a.iter().zip(b).map(|(r, s)| r.iter().chain(s).copied().collect()).collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| aug[i][c].abs().total_cmp(&aug[j][c].abs())).unwrap();
        aug.swap(p, c);
        let piv = aug[c][c];
        for v in aug[c].iter_mut() {
            *v /= piv;
        }
        for i in 0..n {
            if i != c {
                let f = aug[i][c];
                if f != 0.0 {
                    for j in 0..n + m {
                        aug[i][j] -= f * aug[c][j];
                    }
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn matmul(a: &Rows, b: &Rows) -> Rows {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn transpose(a: &Rows) -> Rows {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Residuals of each observation row of `y` (obs × p) after regressing on
/// the observation rows of `z` (obs × q).
fn residuals(y: &Rows, z: &Rows) -> Rows {
    let zt = transpose(z);
    let beta = solve(&matmul(&zt, z), &matmul(&zt, y));
    let fit = matmul(z, &beta);
    y.iter().zip(&fit).map(|(a, b)| a.iter().zip(b).map(|(u, v)| u - v).collect()).collect()
}

/// Moment matrices `(S00, S0k, Skk)` of the residualized blocks, built
/// straight from the level rows `X_0..X_T`.
pub fn moment_matrices(x: &Rows, k: usize) -> (Rows, Rows, Rows) {
    let t_len = x.len() - 1;
    let n = x[0].len();
    let wrap = |a: i64| ((a - 1).rem_euclid(t_len as i64) + 1) as usize;
    let diff = |t: usize| -> Vec<f64> { (0..n).map(|j| x[t][j] - x[t - 1][j]).collect() };
    let level = |t: usize| -> Vec<f64> {
        (0..n)
            .map(|j| x[t - 1][j] - (t - 1) as f64 / t_len as f64 * (x[t_len][j] - x[0][j]))
            .collect()
    };
    let mut y0 = Vec::new();
    let mut yk = Vec::new();
    let mut z = Vec::new();
    for t in 1..=t_len {
        y0.push(diff(t));
        yk.push(level(wrap(t as i64 - k as i64 + 1)));
        let mut row = Vec::new();
        for lag in 1..k {
            row.extend(diff(wrap(t as i64 - lag as i64)));
        }
        row.push(1.0);
        z.push(row);
    }
    let r0 = residuals(&y0, &z);
    let rk = residuals(&yk, &z);
    let (r0t, rkt) = (transpose(&r0), transpose(&rk));
    (matmul(&r0t, &r0), matmul(&r0t, &rk), matmul(&rkt, &rk))
}

/// Roots in `[0, 1]` of `det(Sk0 S00⁻¹ S0k − λ Skk)`, found by scanning a
/// grid for sign changes and bisecting each bracket. Descending.
pub fn determinant_roots(x: &Rows, k: usize) -> Vec<f64> {
    let (s00, s0k, skk) = moment_matrices(x, k);
    let n = s00.len();
    let a = matmul(&transpose(&s0k), &solve(&s00, &s0k));
    let f = |lam: f64| {
        let m: Rows = (0..n).map(|i| (0..n).map(|j| a[i][j] - lam * skk[i][j]).collect()).collect();
        det(m)
    };
    let grid = 200_000;
    let (lo, hi) = (-1e-6, 1.0 + 1e-6);
    let mut roots = Vec::new();
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=grid {
        let x1 = lo + (hi - lo) * i as f64 / grid as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            let (mut a_, mut b_, mut fa) = (x0, x1, f0);
            for _ in 0..200 {
                let mid = 0.5 * (a_ + b_);
                if mid <= a_ || mid >= b_ {
                    break;
                }
                let fm = f(mid);
                if fm.signum() == fa.signum() {
                    a_ = mid;
                    fa = fm;
                } else {
                    b_ = mid;
                }
            }
            roots.push(0.5 * (a_ + b_));
        }
        x0 = x1;
        f0 = f1;
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// `trace(Skk⁻¹ Sk0 S00⁻¹ S0k)`.
pub fn trace_of_product(x: &Rows, k: usize) -> f64 {
    let (s00, s0k, skk) = moment_matrices(x, k);
    let a = matmul(&transpose(&s0k), &solve(&s00, &s0k));
    let c = solve(&skk, &a);
    (0..c.len()).map(|i| c[i][i]).sum()
}

/// Dense eigenvalues of a symmetric tridiagonal matrix, descending, via
/// nalgebra's QR-based symmetric eigensolver.
pub fn dense_tridiag_eigs(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let m = diag.len();
    let a = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            diag[i]
        } else if i + 1 == j {
            off[i]
        } else if j + 1 == i {
            off[j]
        } else {
            0.0
        }
    });
    let mut e: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

/// Composite Simpson on `[a, b]` with adaptive refinement.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
            + rec(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    rec(f, a, fa, b, fb, whole, m, fm, tol, 50)
}
pub mod expected_tables;
