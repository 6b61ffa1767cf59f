//! Dense matrices over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Build from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::Dimension(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(RatMatrix { rows: nrows, cols, data })
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &RatMatrix) -> Result<Self, AlgebraError> {
        if self.cols != below.cols {
            return Err(AlgebraError::Dimension("stacking matrices of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(RatMatrix { rows: self.rows + below.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> Result<BigRational, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Dimension("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let mut det = BigRational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of the row space, as the nonzero rows of the reduced echelon form.
    pub fn row_space(&self) -> RatMatrix {
        let (m, pivots) = self.rref();
        RatMatrix { rows: pivots.len(), cols: self.cols, data: m.data[..pivots.len() * self.cols].to_vec() }
    }

    /// Basis (as rows) of `{x : self · x = 0}`.
    pub fn kernel(&self) -> RatMatrix {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, BigRational::one());
            for (r, &p) in pivots.iter().enumerate() {
                out.set(k, p, -m.get(r, f).clone());
            }
        }
        out
    }

    /// Basis of the intersection of the row spaces of `self` and `other`.
    pub fn intersect_row_spaces(&self, other: &RatMatrix) -> Result<RatMatrix, AlgebraError> {
        if self.cols != other.cols {
            return Err(AlgebraError::Dimension("intersecting spaces of different ambients".into()));
        }
        let a = self.row_space();
        let b = other.row_space();
        // (u, v) with u·A = v·B, read off as u·A.
        let stacked = a.stack(&b)?;
        let left = stacked.transpose().kernel();
        let mut vecs = RatMatrix::zeros(left.rows, self.cols);
        for k in 0..left.rows {
            for j in 0..self.cols {
                let mut s = BigRational::zero();
                for i in 0..a.rows {
                    s += left.get(k, i) * a.get(i, j);
                }
                vecs.set(k, j, s);
            }
        }
        Ok(vecs.row_space())
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: &[BigRational]) -> bool {
        let r = self.rank();
        let extra = RatMatrix { rows: 1, cols: self.cols, data: v.to_vec() };
        self.stack(&extra).map(|m| m.rank() == r).unwrap_or(false)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(cols: usize, rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_i64_rows(cols, rows).unwrap()
    }

    #[test]
    fn rank_kernel_and_intersection() {
        let a = m(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = m(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersect_row_spaces(&b).unwrap();
        assert_eq!(i, m(3, &[vec![0, 1, 0]]));
        assert_eq!(a.kernel(), m(3, &[vec![0, 0, 1]]));
        assert_eq!(m(2, &[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(RatMatrix::zeros(0, 4).kernel().nrows(), 4);
        assert_eq!(
            m(2, &[vec![2, 1], vec![1, 3]]).determinant().unwrap(),
            BigRational::from_integer(5.into())
        );
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..5)) {
            let a = m(4, &rows);
            let k = a.kernel();
            prop_assert_eq!(a.rank() + k.nrows(), 4);
            prop_assert!(a.mul(&k.transpose()).unwrap().is_zero());
        }

        #[test]
        fn grassmann_formula(
            ra in prop::collection::vec(prop::collection::vec(-1i64..=1, 4), 0..4),
            rb in prop::collection::vec(prop::collection::vec(-1i64..=1, 4), 0..4),
        ) {
            let (a, b) = (m(4, &ra), m(4, &rb));
            let i = a.intersect_row_spaces(&b).unwrap();
            let sum = a.stack(&b).unwrap().rank();
            prop_assert_eq!(i.nrows() + sum, a.rank() + b.rank());
            for row in i.rows() {
                prop_assert!(a.spans(row) && b.spans(row));
            }
        }
    }
}
