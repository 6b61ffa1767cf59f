//! Classes of frame loci `F(V_1, ..., V_r)`: tuples of linearly independent
//! vectors with `v_i ∈ V_i`.

use detloci_algebra::{LPoly, RatMatrix, SubspaceConfig};
use serde::Serialize;

use crate::ClassError;

fn l(k: usize) -> LPoly {
    LPoly::monomial(k as i64)
}

/// `L^{d1+d2} − L^{d1} − L^{d2} − L^{d12+1} + L^{d12} + L`.
pub fn frame_class_r2(d1: usize, d2: usize, d12: usize) -> Result<LPoly, ClassError> {
    if d12 > d1.min(d2) {
        return Err(ClassError::Domain(format!(
            "intersection dimension {d12} exceeds the dimensions ({d1}, {d2})"
        )));
    }
    Ok(l(d1 + d2) - l(d1) - l(d2) - l(d12 + 1) + l(d12) + LPoly::l())
}

/// The dimension data a three-space configuration is classified by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrameDims {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub d12: usize,
    pub d13: usize,
    pub d23: usize,
    pub d123: usize,
    /// `dim(V_1 + V_2 + V_3)`.
    pub sum: usize,
}

impl FrameDims {
    pub fn from_config(c: &SubspaceConfig) -> Result<Self, ClassError> {
        if c.len() != 3 {
            return Err(ClassError::Domain(format!("expected 3 subspaces, got {}", c.len())));
        }
        let dims = FrameDims {
            d1: c.dim(0),
            d2: c.dim(1),
            d3: c.dim(2),
            d12: c.pair_dim(0, 1),
            d13: c.pair_dim(0, 2),
            d23: c.pair_dim(1, 2),
            d123: c.intersection_dim(&[0, 1, 2]),
            sum: c.sum_dim(),
        };
        dims.check()?;
        // dim((V1 + V2) ∩ V3) computed directly must match the formula.
        let v12 = c.space(0).stack(c.space(1))?.row_space();
        let direct = v12.intersect_row_spaces(c.space(2))?.nrows();
        if Some(direct) != dims.sum12_cap3() {
            return Err(ClassError::Internal(format!(
                "dim((V1+V2)∩V3) = {direct} disagrees with the dimension data {dims:?}"
            )));
        }
        Ok(dims)
    }

    /// `dim((V_1 + V_2) ∩ V_3) = d1 + d2 + d3 − D − d12`.
    pub fn sum12_cap3(&self) -> Option<usize> {
        (self.d1 + self.d2 + self.d3).checked_sub(self.sum + self.d12)
    }

    fn check(&self) -> Result<(), ClassError> {
        let ok = self.d12 <= self.d1.min(self.d2)
            && self.d13 <= self.d1.min(self.d3)
            && self.d23 <= self.d2.min(self.d3)
            && self.d123 <= self.d12.min(self.d13).min(self.d23)
            && self.d1.max(self.d2).max(self.d3) <= self.sum
            && self.sum12_cap3().is_some_and(|x| x >= self.d13.max(self.d23) && x <= self.d3);
        if ok {
            Ok(())
        } else {
            Err(ClassError::Internal(format!("inconsistent dimension data {self:?}")))
        }
    }
}

/// One stratum of `V_3 ∖ {0}` in the three-space computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub name: &'static str,
    pub class: LPoly,
    /// Number of `V_1, V_2` containing a vector of the stratum.
    pub s: i64,
    /// Projected dimensions `(dim πV1, dim πV2, dim πV1 ∩ πV2)`.
    pub projected: (usize, usize, usize),
}

/// Stratification of `V_3 ∖ {0}` by position relative to `V_1`, `V_2`.
pub fn r3_strata(d: &FrameDims) -> Result<Vec<Stratum>, ClassError> {
    d.check()?;
    let m = d.sum12_cap3().expect("checked");
    let (d1, d2, d12) = (d.d1, d.d2, d.d12);
    // Projected dimensions use saturating arithmetic only for empty strata,
    // which are dropped below.
    let dec = |x: usize| x.saturating_sub(1);
    let all = [
        ("123", l(d.d123) - LPoly::one(), 2, (dec(d1), dec(d2), dec(d12))),
        ("13", l(d.d13) - l(d.d123), 1, (dec(d1), d2, d12)),
        ("23", l(d.d23) - l(d.d123), 1, (d1, dec(d2), d12)),
        ("(12)3", l(m) - l(d.d13) - l(d.d23) + l(d.d123), 0, (d1, d2, d12 + 1)),
        ("3", l(d.d3) - l(m), 0, (d1, d2, d12)),
    ];
    Ok(all
        .into_iter()
        .filter(|(_, class, _, _)| !class.is_zero())
        .map(|(name, class, s, projected)| Stratum { name, class, s, projected })
        .collect())
}

/// `[F(V_1, V_2, V_3)] = Σ_α L^{s_α} [F_α] [S_α]`, summing over the strata
/// of `V_3 ∖ {0}`, where `F_α` is the two-frame class in `V / ⟨v_3⟩`.
pub fn frame_class_r3(c: &SubspaceConfig) -> Result<LPoly, ClassError> {
    frame_class_r3_dims(&FrameDims::from_config(c)?)
}

pub fn frame_class_r3_dims(d: &FrameDims) -> Result<LPoly, ClassError> {
    let mut total = LPoly::zero();
    for s in r3_strata(d)? {
        let (a, b, ab) = s.projected;
        let f = frame_class_r2(a, b, ab)
            .map_err(|e| ClassError::Internal(format!("stratum {} of {d:?}: {e}", s.name)))?;
        total = total + (f * s.class).shifted(s.s);
    }
    Ok(total)
}

/// The symmetric closed expression
///
/// ```text
/// (L^d1 − 1)(L^d2 − 1)(L^d3 − 1)
///   − (L − 1)((L^d1 − L)(L^d23 − 1) + (L^d2 − L)(L^d13 − 1) + (L^d3 − L)(L^d12 − 1))
///   + (L − 1)²(L^{d1+d2+d3−D} − L^{d123+1}) + (L − 1)³
/// ```
///
/// It disagrees with point counts (for `V_1 = V_2 = V_3 = Q³` it gives 266
/// at `L = 2` against 168 invertible matrices). Only reports use it.
pub fn frame_class_r3_closed(d: &FrameDims) -> LPoly {
    let t = LPoly::binomial(1, 0);
    let lm = |k: usize| l(k) - LPoly::l();
    let m1 = |k: usize| LPoly::binomial(k as i64, 0);
    let top = m1(d.d1) * m1(d.d2) * m1(d.d3);
    let pairs = lm(d.d1) * m1(d.d23) + lm(d.d2) * m1(d.d13) + lm(d.d3) * m1(d.d12);
    let exp = (d.d1 + d.d2 + d.d3) as i64 - d.sum as i64;
    let third = LPoly::monomial(exp) - l(d.d123 + 1);
    top - &t * &pairs + t.pow(2) * third + t.pow(3)
}

/// Frames in a nested chain `V_1 ⊆ ... ⊆ V_r`: `Π_k (L^{d_k} − L^{k−1})`.
pub fn frame_class_chain(dims: &[usize]) -> Result<LPoly, ClassError> {
    if dims.windows(2).any(|w| w[0] > w[1]) {
        return Err(ClassError::Domain(format!("chain dimensions {dims:?} are not nondecreasing")));
    }
    Ok(dims.iter().enumerate().map(|(k, &d)| LPoly::binomial(d as i64, k as i64)).product())
}

/// Frame class of up to three spaces.
pub fn frame_class(c: &SubspaceConfig) -> Result<LPoly, ClassError> {
    match c.len() {
        0 => Ok(LPoly::one()),
        1 => Ok(LPoly::binomial(c.dim(0) as i64, 0)),
        2 => frame_class_r2(c.dim(0), c.dim(1), c.pair_dim(0, 1)),
        3 => frame_class_r3(c),
        r => Err(ClassError::Domain(format!("frame classes are available for at most 3 subspaces, got {r}"))),
    }
}

/// Spaces listed in the permuted order `perm`.
pub fn permuted(c: &SubspaceConfig, perm: &[usize]) -> Result<SubspaceConfig, ClassError> {
    let spaces: Vec<RatMatrix> = perm.iter().map(|&i| c.space(i).clone()).collect();
    Ok(SubspaceConfig::new(c.ambient(), spaces)?)
}
