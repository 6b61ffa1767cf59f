//! Classes of the complement of the determinant hypersurface and of the
//! hypersurface itself.

use detloci_algebra::LPoly;

use crate::ClassError;

fn check(loops: usize) -> Result<i64, ClassError> {
    if loops == 0 {
        return Err(ClassError::Domain("the number of loops must be at least 1".into()));
    }
    Ok(loops as i64)
}

/// `[𝔸^{ℓ²} ∖ D̂_ℓ] = L^{C(ℓ,2)} Π_{i=1..ℓ} (L^i − 1)`, or the class of the
/// projective complement, which drops the `i = 1` factor.
pub fn det_complement_class(loops: usize, projective: bool) -> Result<LPoly, ClassError> {
    let l = check(loops)?;
    let first = if projective { 2 } else { 1 };
    let prod: LPoly = (first..=l).map(|i| LPoly::binomial(i, 0)).product();
    Ok(prod.shifted(l * (l - 1) / 2))
}

/// Class of the singular matrices: the ambient `𝔸^{ℓ²}` (or `P^{ℓ²−1}`)
/// minus the complement.
pub fn det_hypersurface_class(loops: usize, projective: bool) -> Result<LPoly, ClassError> {
    let l = check(loops)?;
    let n = l * l;
    let ambient = if projective { (0..n).map(LPoly::monomial).sum() } else { LPoly::monomial(n) };
    Ok(ambient - det_complement_class(loops, projective)?)
}
