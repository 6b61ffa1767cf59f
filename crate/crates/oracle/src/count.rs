//! Enumeration of frames and invertible matrices over `F_q`.

use detloci_algebra::{is_prime, AlgebraError, FqMatrix, SubspaceConfig};
use detloci_graph::sigma_lg;
use rayon::prelude::*;
use serde::Serialize;

use crate::OracleError;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Row-echelon basis over `F_q` that grows one vector at a time.
#[derive(Clone)]
struct Echelon {
    q: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(q: u64) -> Self {
        Echelon { q, rows: Vec::new() }
    }

    /// Reduces `v` against the basis; keeps it if independent.
    fn push(&mut self, v: &[u64]) -> bool {
        let q = self.q;
        let mut w = v.to_vec();
        for (p, r) in &self.rows {
            let c = w[*p];
            if c != 0 {
                for (x, y) in w.iter_mut().zip(r) {
                    *x = (*x + (q - c) * y) % q;
                }
            }
        }
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = detloci_algebra::fq::inv_mod(w[p], q);
        for x in w.iter_mut() {
            *x = *x * inv % q;
        }
        self.rows.push((p, w));
        true
    }

    fn pop(&mut self) {
        self.rows.pop();
    }
}

/// All nonzero `F_q`-points of the row space of `basis`.
fn points(basis: &FqMatrix) -> Vec<Vec<u64>> {
    let q = basis.modulus();
    let (d, n) = (basis.nrows(), basis.ncols());
    let total = q.pow(d as u32);
    (1..total)
        .map(|mut code| {
            let mut v = vec![0u64; n];
            for i in 0..d {
                let c = code % q;
                code /= q;
                if c != 0 {
                    for (x, y) in v.iter_mut().zip(basis.row(i)) {
                        *x = (*x + c * y) % q;
                    }
                }
            }
            v
        })
        .collect()
}

fn estimate(q: u64, dims: impl IntoIterator<Item = usize>, budget: u64) -> Result<(), OracleError> {
    let mut required: u128 = 1;
    for d in dims {
        for _ in 0..d {
            required = required.saturating_mul(q as u128);
        }
    }
    if required > budget as u128 {
        return Err(OracleError::Resource { required, budget });
    }
    Ok(())
}

fn check_prime(q: u64) -> Result<(), OracleError> {
    if !is_prime(q) || q >= 1 << 32 {
        return Err(AlgebraError::NotPrime(q).into());
    }
    Ok(())
}

/// Visits every tuple `(v_1, ..., v_r)` of independent vectors, `v_i` a
/// nonzero point of `pts[i]`, in parallel over `v_1`. `leaf` folds a frame
/// into a per-worker accumulator; accumulators are merged with `merge`.
fn fold_frames<A, L, M>(q: u64, pts: &[Vec<Vec<u64>>], init: impl Fn() -> A + Sync, leaf: L, merge: M) -> A
where
    A: Send,
    L: Fn(&mut A, &[&[u64]]) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    if pts.is_empty() {
        let mut acc = init();
        leaf(&mut acc, &[]);
        return acc;
    }
    fn go<A>(
        level: usize,
        pts: &[Vec<Vec<u64>>],
        ech: &mut Echelon,
        chosen: &mut Vec<usize>,
        acc: &mut A,
        leaf: &(impl Fn(&mut A, &[&[u64]]) + Sync),
    ) {
        if level == pts.len() {
            let frame: Vec<&[u64]> = chosen.iter().enumerate().map(|(i, &k)| pts[i][k].as_slice()).collect();
            leaf(acc, &frame);
            return;
        }
        for (k, v) in pts[level].iter().enumerate() {
            if ech.push(v) {
                chosen.push(k);
                go(level + 1, pts, ech, chosen, acc, leaf);
                chosen.pop();
                ech.pop();
            }
        }
    }
    (0..pts[0].len())
        .into_par_iter()
        .fold(&init, |mut acc, k| {
            let mut ech = Echelon::new(q);
            ech.push(&pts[0][k]);
            let mut chosen = vec![k];
            go(1, pts, &mut ech, &mut chosen, &mut acc, &leaf);
            acc
        })
        .reduce(&init, &merge)
}

/// Frames over `F_q` in the spaces spanned by the rows of each matrix.
pub fn count_frames_fq(spaces: &[FqMatrix], budget: u64) -> Result<u64, OracleError> {
    let Some(first) = spaces.first() else {
        return Ok(1);
    };
    let q = first.modulus();
    if spaces.iter().any(|s| s.modulus() != q || s.ncols() != first.ncols()) {
        return Err(OracleError::Domain("spaces over different fields or ambients".into()));
    }
    estimate(q, spaces.iter().map(FqMatrix::nrows), budget)?;
    let pts: Vec<Vec<Vec<u64>>> = spaces.iter().map(points).collect();
    Ok(fold_frames(q, &pts, || 0u64, |n, _| *n += 1, |a, b| a + b))
}

/// Reduces a rational configuration mod `q`, refusing primes at which any
/// dimension of a sum or intersection of the spaces changes.
pub fn reduce_config(c: &SubspaceConfig, q: u64) -> Result<Vec<FqMatrix>, OracleError> {
    check_prime(q)?;
    let bad = |what: String| OracleError::BadReduction { q, what };
    let spaces = c
        .spaces()
        .iter()
        .map(|s| FqMatrix::from_rational(s, q).map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let r = spaces.len();
    for (i, s) in spaces.iter().enumerate() {
        if s.rank() != c.dim(i) {
            return Err(bad(format!("V{} drops rank", i + 1)));
        }
    }
    let sum = spaces.iter().try_fold(FqMatrix::zeros(q, 0, c.ambient())?, |a, s| a.stack(s))?;
    if sum.rank() != c.sum_dim() {
        return Err(bad("the sum of the spaces drops rank".into()));
    }
    if r <= 6 {
        for mask in 1u32..(1 << r) {
            if mask.count_ones() < 2 {
                continue;
            }
            let idx: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let mut acc = spaces[idx[0]].clone();
            for &i in &idx[1..] {
                acc = acc.intersect_row_spaces(&spaces[i])?;
            }
            if acc.nrows() != c.intersection_dim(&idx) {
                return Err(bad(format!("intersection of spaces {idx:?} changes dimension")));
            }
        }
    }
    Ok(spaces)
}

pub fn count_frames(c: &SubspaceConfig, q: u64, budget: u64) -> Result<u64, OracleError> {
    count_frames_fq(&reduce_config(c, q)?, budget)
}

/// Invertible `ℓ × ℓ` matrices over `F_q`, enumerated row by row.
pub fn count_det_complement(loops: usize, q: u64, budget: u64) -> Result<u64, OracleError> {
    check_prime(q)?;
    if loops == 0 {
        return Err(OracleError::Domain("the number of loops must be at least 1".into()));
    }
    let id = identity(q, loops)?;
    count_frames_fq(&vec![id; loops], budget)
}

fn identity(q: u64, n: usize) -> Result<FqMatrix, OracleError> {
    let mut m = FqMatrix::zeros(q, n, n)?;
    for i in 0..n {
        m.set(i, i, 1);
    }
    Ok(m)
}

/// Invertible matrices over `F_q` sorted by the set of divisor components
/// they lie on, as a bitmask over the canonical component order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumHistogram {
    pub loops: usize,
    pub genus: usize,
    pub q: u64,
    pub components: usize,
    pub counts: Vec<u64>,
}

impl StratumHistogram {
    /// Matrices on exactly the components in `mask`.
    pub fn stratum(&self, mask: u64) -> u64 {
        self.counts[mask as usize]
    }

    /// Matrices on at least the components in `mask`.
    pub fn intersection(&self, mask: u64) -> u64 {
        let m = mask as usize;
        (0..self.counts.len()).filter(|&j| j & m == m).map(|j| self.counts[j]).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn stratum_histogram(
    loops: usize,
    genus: usize,
    q: u64,
    budget: u64,
) -> Result<StratumHistogram, OracleError> {
    check_prime(q)?;
    let comps = sigma_lg(loops, genus)?;
    let n = comps.len();
    if n > 20 {
        return Err(OracleError::Domain(format!("{n} components is too many for a histogram")));
    }
    estimate(q, vec![loops; loops], budget)?;
    let forms: Vec<Vec<(usize, u64)>> = comps
        .iter()
        .map(|c| {
            c.form
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(k, &a)| (k, a.rem_euclid(q as i64) as u64))
                .collect()
        })
        .collect();
    let pts = vec![points(&identity(q, loops)?); loops];
    let size = 1usize << n;
    let counts = fold_frames(
        q,
        &pts,
        || vec![0u64; size],
        |h, rows| {
            let mut mask = 0usize;
            for (b, f) in forms.iter().enumerate() {
                let v = f.iter().fold(0u64, |s, &(k, a)| (s + a * rows[k / loops][k % loops]) % q);
                if v == 0 {
                    mask |= 1 << b;
                }
            }
            h[mask] += 1;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(StratumHistogram { loops, genus, q, components: n, counts })
}

pub fn count_stratum(loops: usize, genus: usize, mask: u64, q: u64, budget: u64) -> Result<u64, OracleError> {
    Ok(stratum_histogram(loops, genus, q, budget)?.stratum(mask))
}

pub fn count_intersection(
    loops: usize,
    genus: usize,
    mask: u64,
    q: u64,
    budget: u64,
) -> Result<u64, OracleError> {
    Ok(stratum_histogram(loops, genus, q, budget)?.intersection(mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use detloci_algebra::RatMatrix;

    #[test]
    fn invertible_matrices() {
        assert_eq!(count_det_complement(2, 2, DEFAULT_BUDGET).unwrap(), 6);
        assert_eq!(count_det_complement(3, 2, DEFAULT_BUDGET).unwrap(), 168);
        assert_eq!(count_det_complement(1, 5, DEFAULT_BUDGET).unwrap(), 4);
        assert!(matches!(count_det_complement(2, 4, DEFAULT_BUDGET), Err(OracleError::Algebra(_))));
    }

    #[test]
    fn frames_in_small_configurations() {
        let full = SubspaceConfig::full(3, 3);
        assert_eq!(count_frames(&full, 2, DEFAULT_BUDGET).unwrap(), 168);
        let lines = |rows: &[Vec<i64>]| {
            let spaces =
                rows.iter().map(|r| RatMatrix::from_i64_rows(3, std::slice::from_ref(r)).unwrap()).collect();
            SubspaceConfig::new(3, spaces).unwrap()
        };
        let coplanar = lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
        assert_eq!(count_frames(&coplanar, 3, DEFAULT_BUDGET).unwrap(), 0);
        let zero = SubspaceConfig::new(3, vec![RatMatrix::identity(3), RatMatrix::zeros(0, 3)]).unwrap();
        assert_eq!(count_frames(&zero, 2, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn reduction_and_budget_failures() {
        // Spanned by (1, 2) and (1, 0): rank 2 over Q, rank 1 mod 2.
        let c = SubspaceConfig::new(
            2,
            vec![
                RatMatrix::from_i64_rows(2, &[vec![1, 2]]).unwrap(),
                RatMatrix::from_i64_rows(2, &[vec![1, 0]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(count_frames(&c, 2, DEFAULT_BUDGET), Err(OracleError::BadReduction { .. })));
        assert_eq!(count_frames(&c, 3, DEFAULT_BUDGET).unwrap(), 4);
        match count_det_complement(4, 3, 1000) {
            Err(OracleError::Resource { required, .. }) => assert_eq!(required, 43_046_721),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wheel_histogram() {
        let h = stratum_histogram(3, 0, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(h.total(), 168);
        assert_eq!(h.stratum(63), 0);
        assert_eq!(h.stratum(0), 2);
        assert_eq!(h.intersection(0), 168);
    }
}
