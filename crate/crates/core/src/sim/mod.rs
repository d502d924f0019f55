//! Monte Carlo engines: Airy_1 partial sums from corners of large random
//! tridiagonal matrices, and null-hypothesis simulations of the test
//! statistic.
//!
//! Every run draws from its own ChaCha8 stream selected by `(seed, run)`, so
//! results do not depend on how runs are scheduled across threads.

mod airy;
mod null;
mod var;

pub use airy::{
    airy_partial_sums, average_quantile_tables, estimate_quantile_table, sample_corner_tridiag,
    AirySimBatch, AirySimConfig, MIN_SAMPLES,
};
pub use null::{
    cumulative_walk, empirical_p_value, simulate_h0_dataset, EmpiricalPValue, H0SimConfig,
};
pub use var::{example_var2_dataset, simulate_error_correction};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent generator for run `stream` under master `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
