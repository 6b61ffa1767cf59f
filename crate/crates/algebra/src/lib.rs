//! Exact arithmetic for the determinant-locus toolkit.
//!
//! Everything here is exact: integers are arbitrary precision, rationals are
//! kept in lowest terms and prime-field residues live in `[0, q)`. The crate
//! knows nothing about graphs or classes; the other crates build on it.

mod error;
pub mod fq;
pub mod lpoly;
pub mod multipoly;
pub mod ratmatrix;
pub mod subspace;

pub use error::AlgebraError;
pub use fq::{is_prime, FqMatrix};
pub use lpoly::LPoly;
pub use multipoly::{poly_det, Coefficient, IntPoly, Monomial, MultiPoly, PolyMatrix, RatPoly};
pub use ratmatrix::RatMatrix;
pub use subspace::SubspaceConfig;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Parses `"3"`, `"-2"` or `"5/7"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_rational(" -2 ").unwrap(), BigRational::from_integer((-2).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
