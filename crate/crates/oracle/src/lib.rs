//! Brute-force point counts over prime fields: invertible matrices, frames
//! in subspace configurations and the strata cut out by the divisor
//! components. Nothing here consults the symbolic classes.

pub mod count;
mod error;
pub mod verify;

pub use count::{
    count_det_complement, count_frames, count_frames_fq, count_intersection, count_stratum, reduce_config,
    stratum_histogram, StratumHistogram, DEFAULT_BUDGET,
};
pub use error::OracleError;
pub use verify::{verify_class, verify_counts, CountRequest, PrimeCheck, VerifyReport};
