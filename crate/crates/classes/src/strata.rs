//! The stratification of the determinant complement by the components of
//! Σ̂_{ℓ,g}, obtained by Möbius inversion over the Boolean lattice.

use detloci_algebra::LPoly;
use detloci_graph::{sigma_lg, DivisorSelection};

use crate::frames::frame_class;
use crate::selection::config_from_selection;
use crate::{det_complement_class, ClassError};

/// Indexed by bitmask `I` over the canonical component order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataTable {
    pub loops: usize,
    pub genus: usize,
    pub components: usize,
    /// Class of the determinant complement inside `∩_{i∈I} X_i`.
    pub intersections: Vec<LPoly>,
    /// Class of `Z_I°`: points on exactly the components in `I`.
    pub strata: Vec<LPoly>,
}

impl StrataTable {
    pub fn intersection(&self, sel: &DivisorSelection) -> &LPoly {
        &self.intersections[sel.mask() as usize]
    }

    pub fn stratum(&self, sel: &DivisorSelection) -> &LPoly {
        &self.strata[sel.mask() as usize]
    }
}

/// `[Z_I°] = Σ_{J ⊇ I} (−1)^{|J|−|I|} [F(J)]` for every `I`. Needs at most
/// three matrix rows, so `ℓ ≤ 3`.
pub fn inclusion_exclusion_strata(loops: usize, genus: usize) -> Result<StrataTable, ClassError> {
    if loops > 3 {
        return Err(ClassError::Domain(format!(
            "frame classes are available for at most 3 rows, got ℓ = {loops}"
        )));
    }
    let n = sigma_lg(loops, genus)?.len();
    let size = 1usize << n;
    let intersections = (0..size)
        .map(|mask| {
            let sel = DivisorSelection::from_mask(loops, genus, mask as u64)?;
            frame_class(&config_from_selection(&sel)?)
        })
        .collect::<Result<Vec<_>, ClassError>>()?;
    let mut strata = intersections.clone();
    for bit in 0..n {
        for mask in 0..size {
            if mask & (1 << bit) == 0 {
                strata[mask] = &strata[mask] - &strata[mask | (1 << bit)];
            }
        }
    }
    let total: LPoly = strata.iter().cloned().sum();
    if total != det_complement_class(loops, false)? {
        return Err(ClassError::Internal(format!(
            "strata sum {total} differs from the determinant complement"
        )));
    }
    Ok(StrataTable { loops, genus, components: n, intersections, strata })
}

/// Class of the part of the determinant complement lying on the union of
/// the selected components: the sum of the strata meeting the selection.
pub fn sigma_complement_class(table: &StrataTable, sel: &DivisorSelection) -> LPoly {
    let m = sel.mask() as usize;
    (0..table.strata.len()).filter(|i| i & m != 0).map(|i| table.strata[i].clone()).sum()
}
