//! Comparison of a class polynomial with point counts.

use detloci_algebra::{BigInt, LPoly, SubspaceConfig};
use serde::Serialize;

use crate::count::{count_det_complement, count_frames, stratum_histogram};
use crate::OracleError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountRequest {
    DetComplement {
        loops: usize,
    },
    FrameLocus {
        config: SubspaceConfig,
    },
    /// Invertible matrices on exactly the components in `mask`.
    IeStratum {
        loops: usize,
        genus: usize,
        mask: u64,
    },
    /// Invertible matrices on at least the components in `mask`.
    Intersection {
        loops: usize,
        genus: usize,
        mask: u64,
    },
}

impl CountRequest {
    pub fn count(&self, q: u64, budget: u64) -> Result<u64, OracleError> {
        match self {
            CountRequest::DetComplement { loops } => count_det_complement(*loops, q, budget),
            CountRequest::FrameLocus { config } => count_frames(config, q, budget),
            CountRequest::IeStratum { loops, genus, mask } => {
                Ok(stratum_histogram(*loops, *genus, q, budget)?.stratum(*mask))
            }
            CountRequest::Intersection { loops, genus, mask } => {
                Ok(stratum_histogram(*loops, *genus, q, budget)?.intersection(*mask))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub q: u64,
    pub expected: String,
    /// The count, or the error that prevented it.
    pub actual: Result<u64, String>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<PrimeCheck>,
    pub all_match: bool,
}

impl VerifyReport {
    /// True when some prime failed with a budget error.
    pub fn resource_limited(&self) -> bool {
        self.checks.iter().any(|c| matches!(&c.actual, Err(e) if e.starts_with("enumeration needs")))
    }
}

/// Compares `p(q)` with `count(q)` for each prime; a failing count is
/// recorded for its prime and does not stop the others.
pub fn verify_counts(
    p: &LPoly,
    primes: &[u64],
    count: impl Fn(u64) -> Result<u64, OracleError>,
) -> VerifyReport {
    let checks: Vec<PrimeCheck> = primes
        .iter()
        .map(|&q| {
            let expected = p.eval_u64(q);
            let actual = count(q).map_err(|e| e.to_string());
            let matches = match (&expected, &actual) {
                (Ok(e), Ok(a)) => *e == BigInt::from(*a),
                _ => false,
            };
            PrimeCheck {
                q,
                expected: expected.map_or_else(|e| e.to_string(), |e| e.to_string()),
                actual,
                matches,
            }
        })
        .collect();
    let all_match = checks.iter().all(|c| c.matches);
    VerifyReport { checks, all_match }
}

pub fn verify_class(p: &LPoly, request: &CountRequest, primes: &[u64], budget: u64) -> VerifyReport {
    verify_counts(p, primes, |q| request.count(q, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn invertible_counts_match_their_class() {
        let p: LPoly = "L^3(L+1)(L^2+L+1)(L-1)^3".parse().unwrap();
        let r = verify_class(&p, &CountRequest::DetComplement { loops: 3 }, &[2, 3], DEFAULT_BUDGET);
        assert!(r.all_match);
    }

    #[test]
    fn wrong_class_and_limits_are_reported() {
        let p: LPoly = "L^3".parse().unwrap();
        let r = verify_class(&p, &CountRequest::DetComplement { loops: 1 }, &[2, 3], DEFAULT_BUDGET);
        assert!(!r.all_match);
        assert_eq!(r.checks[0].actual, Ok(1));
        let r = verify_class(&p, &CountRequest::DetComplement { loops: 3 }, &[2, 5], 1000);
        assert!(!r.checks[0].matches && r.resource_limited());
    }

    #[test]
    fn zero_class_and_empty_locus() {
        let r = verify_class(
            &LPoly::zero(),
            &CountRequest::IeStratum { loops: 3, genus: 0, mask: 63 },
            &[2, 3],
            DEFAULT_BUDGET,
        );
        assert!(r.all_match);
    }
}
