//! Configurations on which the symmetric closed three-frame expression
//! disagrees with the strata sum. Tests and the CLI treat these as known
//! mismatches rather than failures.

use detloci_algebra::{LPoly, SubspaceConfig};
use detloci_graph::DivisorSelection;

use crate::frames::{frame_class_r3_closed, frame_class_r3_dims, FrameDims};
use crate::selection::config_from_selection;
use crate::ClassError;

#[derive(Clone, Debug)]
pub struct KnownDiscrepancy {
    pub name: &'static str,
    pub description: &'static str,
    pub config: SubspaceConfig,
    pub dims: FrameDims,
    pub closed: LPoly,
    pub strata: LPoly,
}

pub fn known_discrepancies() -> Result<Vec<KnownDiscrepancy>, ClassError> {
    let full = SubspaceConfig::full(3, 3);
    let sel = DivisorSelection::from_bitmask(3, 0, "111011")?;
    let partial = config_from_selection(&sel)?;
    [
        ("full", "V1 = V2 = V3 = Q^3", full),
        ("sel-111011", "rows cut out by x12, x13, x23 and the row sums of rows 2 and 3", partial),
    ]
    .into_iter()
    .map(|(name, description, config)| {
        let dims = FrameDims::from_config(&config)?;
        Ok(KnownDiscrepancy {
            name,
            description,
            closed: frame_class_r3_closed(&dims),
            strata: frame_class_r3_dims(&dims)?,
            config,
            dims,
        })
    })
    .collect()
}

pub fn is_known_discrepancy(name: &str) -> bool {
    matches!(name, "full" | "sel-111011")
}
