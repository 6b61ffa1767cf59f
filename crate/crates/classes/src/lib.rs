//! Classes in the Grothendieck ring, as integer polynomials in `L`, of
//! determinant-hypersurface complements, frame loci and the strata cut out
//! by the divisors Σ̂_{ℓ,g}.

mod det;
mod error;
pub mod fixtures;
pub mod frames;
pub mod selection;
pub mod strata;

pub use det::{det_complement_class, det_hypersurface_class};
pub use error::ClassError;
pub use fixtures::{is_known_discrepancy, known_discrepancies, KnownDiscrepancy};
pub use frames::{
    frame_class, frame_class_chain, frame_class_r2, frame_class_r3, frame_class_r3_closed,
    frame_class_r3_dims, permuted, r3_strata, FrameDims, Stratum,
};
pub use selection::config_from_selection;
pub use strata::{inclusion_exclusion_strata, sigma_complement_class, StrataTable};
