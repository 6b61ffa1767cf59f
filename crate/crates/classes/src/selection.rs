//! Subspace configurations cut out by a choice of divisor components.

use detloci_algebra::{RatMatrix, SubspaceConfig};
use detloci_graph::{sigma_lg, DivisorSelection};

use crate::ClassError;

/// The rows `v_1, ..., v_ℓ` of a matrix on every selected component range
/// over `V_1 × ... × V_ℓ`, where `V_i` is cut out by the selected components
/// touching row `i` (off-diagonal `x_ij` gives `x_j = 0`, a row sum gives
/// `x_1 + ... + x_b = 0`). Rows without selected components are unconstrained.
pub fn config_from_selection(sel: &DivisorSelection) -> Result<SubspaceConfig, ClassError> {
    let comps = sigma_lg(sel.loops, sel.genus)?;
    let ell = sel.loops;
    if let Some(&bad) = sel.indices.iter().find(|&&i| i >= comps.len()) {
        return Err(ClassError::Domain(format!("component {} out of range 1..={}", bad + 1, comps.len())));
    }
    let mut equations: Vec<Vec<Vec<i64>>> = vec![vec![]; ell];
    for &i in &sel.indices {
        let c = &comps[i];
        let r = c.row();
        equations[r].push(c.form[r * ell..(r + 1) * ell].to_vec());
    }
    let spaces = equations
        .iter()
        .map(|eqs| Ok(RatMatrix::from_i64_rows(ell, eqs)?.kernel()))
        .collect::<Result<Vec<_>, ClassError>>()?;
    Ok(SubspaceConfig::new(ell, spaces)?)
}
