//! Ordered tuples of subspaces `V_1, ..., V_r` of `Q^ℓ` with their
//! intersection dimensions.

use crate::{AlgebraError, BigRational, RatMatrix};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceConfig {
    ambient: usize,
    spaces: Vec<RatMatrix>,
    dims: Vec<usize>,
    sum_dim: usize,
}

impl SubspaceConfig {
    /// Each space is given by a spanning set stored as matrix rows.
    pub fn new(ambient: usize, spanning: Vec<RatMatrix>) -> Result<Self, AlgebraError> {
        for (i, s) in spanning.iter().enumerate() {
            if s.ncols() != ambient {
                return Err(AlgebraError::Dimension(format!(
                    "space {} lives in dimension {}, expected {ambient}",
                    i + 1,
                    s.ncols()
                )));
            }
        }
        let spaces: Vec<RatMatrix> = spanning.iter().map(RatMatrix::row_space).collect();
        let dims = spaces.iter().map(RatMatrix::nrows).collect();
        let sum_dim = spaces.iter().try_fold(RatMatrix::zeros(0, ambient), |acc, s| acc.stack(s))?.rank();
        Ok(SubspaceConfig { ambient, spaces, dims, sum_dim })
    }

    /// `r` copies of the whole ambient space.
    pub fn full(ambient: usize, r: usize) -> Self {
        Self::new(ambient, vec![RatMatrix::identity(ambient); r]).expect("square identities")
    }

    /// Coordinate subspaces: `masks[i][k]` says whether `e_k` lies in `V_i`.
    pub fn coordinate(ambient: usize, masks: &[Vec<bool>]) -> Result<Self, AlgebraError> {
        let spaces = masks
            .iter()
            .map(|mask| {
                if mask.len() != ambient {
                    return Err(AlgebraError::Dimension("coordinate mask of wrong length".into()));
                }
                let rows = mask
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(k, _)| {
                        (0..ambient)
                            .map(|j| if j == k { BigRational::one() } else { BigRational::zero() })
                            .collect()
                    })
                    .collect();
                RatMatrix::from_rows(ambient, rows)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ambient, spaces)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// Reduced basis of `V_{i+1}` (indices are zero-based).
    pub fn space(&self, i: usize) -> &RatMatrix {
        &self.spaces[i]
    }

    pub fn spaces(&self) -> &[RatMatrix] {
        &self.spaces
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim(V_1 + ... + V_r)`.
    pub fn sum_dim(&self) -> usize {
        self.sum_dim
    }

    /// Basis of the intersection of the listed spaces; the ambient space
    /// when the list is empty.
    pub fn intersection(&self, idx: &[usize]) -> RatMatrix {
        let mut acc = RatMatrix::identity(self.ambient);
        for &i in idx {
            acc = acc.intersect_row_spaces(&self.spaces[i]).expect("common ambient");
        }
        acc
    }

    pub fn intersection_dim(&self, idx: &[usize]) -> usize {
        self.intersection(idx).nrows()
    }

    pub fn pair_dim(&self, i: usize, j: usize) -> usize {
        self.intersection_dim(&[i, j])
    }

    /// The configuration with full spaces appended until there are `r`.
    pub fn padded(&self, r: usize) -> Self {
        let mut spaces = self.spaces.clone();
        while spaces.len() < r {
            spaces.push(RatMatrix::identity(self.ambient));
        }
        Self::new(self.ambient, spaces).expect("same ambient")
    }

    pub fn is_full(&self) -> bool {
        self.dims.iter().all(|&d| d == self.ambient)
    }
}
