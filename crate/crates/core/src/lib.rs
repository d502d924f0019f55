//! Cointegration testing for high-dimensional vector autoregressions.
//!
//! The test statistic is a modified Johansen likelihood ratio built from the
//! largest squared canonical correlations between detrended lagged levels and
//! differences. After centering and scaling by `(N, T)`-dependent constants it
//! is compared with tabulated quantiles of partial sums of the Airy_1 point
//! process.
//!
//! - [`numerics`]: Cholesky solves, dense symmetric eigenvalues, Sturm
//!   bisection for tridiagonal matrices.
//! - [`coint`]: the test pipeline.
//! - [`tables`]: embedded quantile tables, p-values and decisions.
//! - [`sim`]: Monte Carlo for the Airy_1 partial sums and for the null
//!   distribution of the statistic.
//! - [`diagnostics`]: Wachter-density fit check.
//! - [`cli`]: the `largevars` command line.

pub mod cli;
pub mod coint;
pub mod diagnostics;
pub mod error;
pub mod numerics;
pub mod sim;
pub mod tables;

pub use coint::{run_test, TestOptions, TestResult, TimeSeriesMatrix, WachterParams};
pub use error::{Error, Result};
