//! Linear algebra over prime fields `F_q` with `q < 2^32`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::{AlgebraError, BigRational, RatMatrix};

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

pub fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % q;
        }
        a = a * a % q;
        e >>= 1;
    }
    acc
}

/// Reduce a rational mod `q`; fails when `q` divides the denominator.
pub fn reduce_rational(x: &BigRational, q: u64) -> Result<u64, AlgebraError> {
    let qb = BigInt::from(q);
    let den = x.denom().mod_floor(&qb).to_u64().unwrap();
    if den == 0 {
        return Err(AlgebraError::Domain(format!("denominator of {x} vanishes mod {q}")));
    }
    let num = x.numer().mod_floor(&qb).to_u64().unwrap();
    Ok(num * inv_mod(den, q) % q)
}

pub fn reduce_integer(x: &BigInt, q: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(q));
    debug_assert!(!r.is_negative());
    r.to_u64().unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    q: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FqMatrix {
    pub fn zeros(q: u64, rows: usize, cols: usize) -> Result<Self, AlgebraError> {
        if !is_prime(q) || q >= 1 << 32 {
            return Err(AlgebraError::NotPrime(q));
        }
        Ok(FqMatrix { q, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn from_rows(q: u64, cols: usize, rows: &[Vec<u64>]) -> Result<Self, AlgebraError> {
        let mut m = Self::zeros(q, rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(AlgebraError::Dimension("ragged matrix".into()));
            }
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x % q);
            }
        }
        Ok(m)
    }

    pub fn from_rational(m: &RatMatrix, q: u64) -> Result<Self, AlgebraError> {
        let mut out = Self::zeros(q, m.nrows(), m.ncols())?;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.set(i, j, reduce_rational(m.get(i, j), q)?);
            }
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let q = self.q;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = inv_mod(m.get(r, c), q);
            for j in c..m.cols {
                let v = m.get(r, j) * inv % q;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = (m.get(i, j) + q - f * m.get(r, j) % q) % q;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> Result<u64, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Dimension("determinant of a non-square matrix".into()));
        }
        let q = self.q;
        let mut m = self.clone();
        let mut det = 1u64;
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| m.get(i, c) != 0) else {
                return Ok(0);
            };
            if p != c {
                m.swap_rows(p, c);
                det = (q - det) % q;
            }
            let piv = m.get(c, c);
            det = det * piv % q;
            let inv = inv_mod(piv, q);
            for i in c + 1..m.rows {
                let f = m.get(i, c) * inv % q;
                if f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = (m.get(i, j) + q - f * m.get(c, j) % q) % q;
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn row_space(&self) -> FqMatrix {
        let (m, pivots) = self.rref();
        FqMatrix {
            q: self.q,
            rows: pivots.len(),
            cols: self.cols,
            data: m.data[..pivots.len() * self.cols].to_vec(),
        }
    }

    /// Basis (as rows) of `{x : self · x = 0}`.
    pub fn kernel(&self) -> FqMatrix {
        let q = self.q;
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out =
            FqMatrix { q, rows: free.len(), cols: self.cols, data: vec![0; free.len() * self.cols] };
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (r, &p) in pivots.iter().enumerate() {
                out.set(k, p, (q - m.get(r, f)) % q);
            }
        }
        out
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = FqMatrix { q: self.q, rows: self.cols, cols: self.rows, data: vec![0; self.data.len()] };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn stack(&self, below: &FqMatrix) -> Result<FqMatrix, AlgebraError> {
        if self.cols != below.cols || self.q != below.q {
            return Err(AlgebraError::Dimension("stacking incompatible matrices".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(FqMatrix { q: self.q, rows: self.rows + below.rows, cols: self.cols, data })
    }

    pub fn intersect_row_spaces(&self, other: &FqMatrix) -> Result<FqMatrix, AlgebraError> {
        let q = self.q;
        let a = self.row_space();
        let b = other.row_space();
        let left = a.stack(&b)?.transpose().kernel();
        let mut vecs = FqMatrix { q, rows: left.rows, cols: self.cols, data: vec![0; left.rows * self.cols] };
        for k in 0..left.rows {
            for j in 0..self.cols {
                let s = (0..a.rows).fold(0, |s, i| (s + left.get(k, i) * a.get(i, j)) % q);
                vecs.set(k, j, s);
            }
        }
        Ok(vecs.row_space())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(matches!(FqMatrix::zeros(4, 1, 1), Err(AlgebraError::NotPrime(4))));
    }

    #[test]
    fn reduction_and_rank() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(reduce_rational(&half, 3).unwrap(), 2);
        assert!(reduce_rational(&half, 2).is_err());

        // Full rank over Q, singular mod 2.
        let m = FqMatrix::from_rows(2, 2, &[vec![1, 1], vec![1, 3]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.determinant().unwrap(), 0);
        let m3 = FqMatrix::from_rows(3, 2, &[vec![1, 1], vec![1, 3]]).unwrap();
        assert_eq!(m3.determinant().unwrap(), 2);
        assert_eq!(m.kernel().nrows(), 1);
    }

    #[test]
    fn intersection_mod_q() {
        let a = FqMatrix::from_rows(5, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = FqMatrix::from_rows(5, 3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let i = a.intersect_row_spaces(&b).unwrap();
        assert_eq!(i.nrows(), 1);
        assert_eq!(i.row(0), &[1, 1, 0]);
    }
}
