//! Sparse multivariate polynomials over exact coefficient rings.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors ordered
//! graded-lexicographically, so iteration order is canonical and the leading
//! term is the last entry. Variables are named; two polynomials over different
//! variable lists compare equal when they agree after alignment.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

/// Exact coefficient ring for [`MultiPoly`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn is_negative_coeff(&self) -> bool;
}

impl Coefficient for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coefficient for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

/// Exponent vector, one slot per variable of the owning polynomial.
///
/// Ordered by total degree first, then lexicographically with the first
/// variable most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly<C = BigInt> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, C>,
}

pub type IntPoly = MultiPoly<BigInt>;
pub type RatPoly = MultiPoly<BigRational>;

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, C::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: Vec<String>, name: &str) -> Result<Self, AlgebraError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), C::one());
        Ok(p)
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(AlgebraError::Dimension(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    p.vars.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e <= 1))
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coefficient_of(&self, powers: &[(&str, u32)]) -> C {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in powers {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => e[i] += k,
                None if *k == 0 => {}
                None => return C::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(C::zero)
    }

    /// Variables that occur with a nonzero exponent somewhere.
    pub fn support_vars(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].as_str())
            .collect()
    }

    /// Re-express over `vars`, which must contain every variable in use.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self, AlgebraError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.0[i] > 0) {
                        return Err(AlgebraError::UnknownVariable(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(vars.to_vec());
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] += k;
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned_pair(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let u = self.union_vars(other);
        (
            self.with_vars(&u).expect("union contains all variables"),
            other.with_vars(&u).expect("union contains all variables"),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `var` by `replacement`, expanding fully.
    ///
    /// The result's variables are those of `self` without `var`, followed by
    /// any variables of `replacement` not already present.
    pub fn substitute(&self, var: &str, replacement: &Self) -> Result<Self, AlgebraError> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        let mut vars: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        for v in &replacement.vars {
            if !vars.contains(v) && v != var {
                vars.push(v.clone());
            }
        }
        if replacement.support_vars().contains(&var) {
            return Err(AlgebraError::Domain(format!("replacement for {var} mentions {var} itself")));
        }
        let rep = replacement.with_vars(&vars)?;
        let mut powers: HashMap<u32, Self> = HashMap::new();
        let mut out = Self::zero(vars.clone());
        for (m, c) in &self.terms {
            let k = m.0[idx];
            let mut rest = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if i != idx {
                    let name = &self.vars[i];
                    let j = vars.iter().position(|v| v == name).expect("kept variable");
                    rest[j] = e;
                }
            }
            let mono = MultiPoly { vars: vars.clone(), terms: BTreeMap::from([(Monomial(rest), c.clone())]) };
            let pw = powers.entry(k).or_insert_with(|| rep.pow(k));
            out = &out + &(&mono * &*pw);
        }
        Ok(out)
    }

    /// Evaluate at a point given in the order of `self.vars()`.
    pub fn eval(&self, point: &[C]) -> Result<C, AlgebraError> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (num, den) = self.aligned_pair(divisor);
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(AlgebraError::InexactDivision),
        };
        let mut rem = num;
        let mut quot = Self::zero(rem.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm).ok_or(AlgebraError::InexactDivision)?;
            let qc = c.exact_div(&lc).ok_or(AlgebraError::InexactDivision)?;
            let step = MultiPoly { vars: rem.vars.clone(), terms: BTreeMap::from([(qm, qc)]) };
            rem = &rem - &(&step * &den);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::<D>::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], e) })
                .collect();
        parts.join("*")
    }

    /// Canonical text form: monomials in descending graded-lex order, each
    /// with an explicit coefficient, e.g. `1*t1*t2 + -3*t3^2`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono = self.monomial_text(m);
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Coefficient> PartialEq for MultiPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned_pair(other);
        a.terms == b.terms
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_coeff();
            let abs = if neg { -c.clone() } else { c.clone() };
            let mono = self.monomial_text(m);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        let (mut a, b) = self.aligned_pair(rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        let (mut a, b) = self.aligned_pair(rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let (a, b) = self.aligned_pair(rhs);
        let mut out = MultiPoly::zero(a.vars.clone());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&-C::one())
    }
}

/// Dense square-or-not matrix of polynomials sharing one variable list.
#[derive(Clone, Debug)]
pub struct PolyMatrix<C = BigInt> {
    vars: Vec<String>,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly<C>>,
}

impl<C: Coefficient> PolyMatrix<C> {
    pub fn new(vars: Vec<String>, rows: Vec<Vec<MultiPoly<C>>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(AlgebraError::Dimension("ragged polynomial matrix".into()));
            }
            for p in row {
                entries.push(p.with_vars(&vars)?);
            }
        }
        Ok(PolyMatrix { vars, rows: nrows, cols: ncols, entries })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Square sub-matrix on the given row/column indices.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let entries = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix { vars: self.vars.clone(), rows: idx.len(), cols: idx.len(), entries }
    }
}

impl<C: Coefficient> PartialEq for PolyMatrix<C> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

const COFACTOR_LIMIT: usize = 6;

/// Exact determinant. Cofactor expansion up to dimension six, fraction-free
/// (Bareiss) elimination above.
pub fn poly_det<C: Coefficient>(m: &PolyMatrix<C>) -> Result<MultiPoly<C>, AlgebraError> {
    if m.rows != m.cols {
        return Err(AlgebraError::Dimension(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    if m.rows <= COFACTOR_LIMIT {
        Ok(cofactor_det(m))
    } else {
        bareiss_det(m)
    }
}

pub(crate) fn cofactor_det<C: Coefficient>(m: &PolyMatrix<C>) -> MultiPoly<C> {
    fn expand<C: Coefficient>(
        m: &PolyMatrix<C>,
        row: usize,
        cols: u64,
        memo: &mut HashMap<u64, MultiPoly<C>>,
    ) -> MultiPoly<C> {
        if row == m.rows {
            return MultiPoly::one(m.vars.clone());
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = MultiPoly::zero(m.vars.clone());
        let mut sign_neg = false;
        for j in 0..m.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = m.get(row, j);
            if !entry.is_zero() {
                let minor = expand(m, row + 1, cols & !(1 << j), memo);
                let term = entry * &minor;
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    expand(m, 0, (1u64 << m.cols) - 1, &mut memo)
}

pub(crate) fn bareiss_det<C: Coefficient>(m: &PolyMatrix<C>) -> Result<MultiPoly<C>, AlgebraError> {
    let n = m.rows;
    let mut a: Vec<Vec<MultiPoly<C>>> =
        (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = MultiPoly::one(m.vars.clone());
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(m.vars.clone())),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn t(vs: &[String], name: &str) -> IntPoly {
        IntPoly::var(vs.to_vec(), name).unwrap()
    }

    #[test]
    fn determinant_of_small_matrices() {
        let vs = vars(&["t1", "t2"]);
        let sum = &t(&vs, "t1") + &t(&vs, "t2");
        let m = PolyMatrix::new(vs.clone(), vec![vec![sum.clone()]]).unwrap();
        assert_eq!(poly_det(&m).unwrap(), sum);

        let empty = PolyMatrix::<BigInt>::new(vs.clone(), vec![]).unwrap();
        assert_eq!(poly_det(&empty).unwrap(), IntPoly::one(vs.clone()));

        let ragged = PolyMatrix::new(vs.clone(), vec![vec![sum.clone(), sum.clone()]]).unwrap();
        assert!(matches!(poly_det(&ragged), Err(AlgebraError::Dimension(_))));
    }

    #[test]
    fn wheel_matrix_determinant_is_the_tree_sum() {
        let vs: Vec<String> = (1..=6).map(|i| format!("t{i}")).collect();
        let x = |i: usize| t(&vs, &format!("t{i}"));
        let s = |ids: &[usize]| ids.iter().fold(IntPoly::zero(vs.clone()), |acc, &i| &acc + &x(i));
        let m = PolyMatrix::new(
            vs.clone(),
            vec![
                vec![s(&[1, 2, 5]), -&x(1), -&x(2)],
                vec![-&x(1), s(&[1, 3, 4]), -&x(3)],
                vec![-&x(2), -&x(3), s(&[2, 3, 6])],
            ],
        )
        .unwrap();
        let det = poly_det(&m).unwrap();
        assert_eq!(det.num_terms(), 16);
        assert!(det.terms().all(|(_, c)| c.is_one()));
        assert!(det.is_homogeneous() && det.is_multilinear());
        assert_eq!(det.total_degree(), Some(3));
        // Bareiss agrees on the same input.
        assert_eq!(bareiss_det(&m).unwrap(), det);
    }

    #[test]
    fn substitution() {
        let vs = vars(&["t1", "t2"]);
        let p = &t(&vs, "t1") + &t(&vs, "t2");
        let rv = vars(&["t2'", "t2''"]);
        let rep = &t(&rv, "t2'") + &t(&rv, "t2''");
        let q = p.substitute("t2", &rep).unwrap();
        assert_eq!(q.vars(), &vars(&["t1", "t2'", "t2''"])[..]);
        assert_eq!(q.to_string(), "t1 + t2' + t2''");

        let prod = &t(&vs, "t1") * &t(&vs, "t2");
        assert!(prod.substitute("t2", &IntPoly::zero(vec![])).unwrap().is_zero());
        assert!(matches!(prod.substitute("t9", &rep), Err(AlgebraError::UnknownVariable(_))));
    }

    #[test]
    fn equality_ignores_variable_layout() {
        let a = &t(&vars(&["x", "y"]), "x") + &t(&vars(&["x", "y"]), "y");
        let b = &t(&vars(&["y", "x", "z"]), "y") + &t(&vars(&["y", "x", "z"]), "x");
        assert_eq!(a, b);
        assert_ne!(a, t(&vars(&["x"]), "x"));
    }

    #[test]
    fn text_forms() {
        let vs = vars(&["t1", "t2"]);
        let p = &(&t(&vs, "t1") * &t(&vs, "t1")).scale(&BigInt::from(-3)) + &t(&vs, "t2");
        assert_eq!(p.to_string(), "-3*t1^2 + t2");
        assert_eq!(p.to_canonical_string(), "-3*t1^2 + 1*t2");
        assert_eq!(IntPoly::zero(vs).to_canonical_string(), "0");
    }

    #[test]
    fn exact_division_detects_remainders() {
        let vs = vars(&["x", "y"]);
        let x = t(&vs, "x");
        let y = t(&vs, "y");
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.exact_div(&(&x - &y)).unwrap(), &x + &y);
        assert!(matches!(f.exact_div(&x), Err(AlgebraError::InexactDivision)));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(((0u32..2, 0u32..2, 0u32..2), -3i64..=3), 0..4).prop_map(|ts| {
            IntPoly::from_terms(
                vars(&["a", "b", "c"]),
                ts.into_iter().map(|((x, y, z), c)| (vec![x, y, z], BigInt::from(c))),
            )
            .unwrap()
        })
    }

    /// Leibniz permutation sum, an independent determinant route.
    fn leibniz(m: &PolyMatrix<BigInt>) -> IntPoly {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for p in perms(n - 1) {
                for k in 0..n {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.nrows();
        let mut acc = IntPoly::zero(m.vars().to_vec());
        for p in perms(n) {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = IntPoly::one(m.vars().to_vec());
            for (i, &j) in p.iter().enumerate() {
                term = &term * m.get(i, j);
            }
            acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn det_matches_permutation_sum(n in 0usize..=4, entries in prop::collection::vec(small_poly(), 16)) {
            let rows: Vec<Vec<IntPoly>> = (0..n).map(|i| entries[i * 4..i * 4 + n].to_vec()).collect();
            let m = PolyMatrix::new(vars(&["a", "b", "c"]), rows).unwrap();
            let expected = leibniz(&m);
            prop_assert_eq!(&poly_det(&m).unwrap(), &expected);
            if n > 0 {
                prop_assert_eq!(&bareiss_det(&m).unwrap(), &expected);
            }
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }
    }
}
