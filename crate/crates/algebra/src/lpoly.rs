//! Integer polynomials in the Lefschetz class `L`.
//!
//! Stored as Laurent polynomials so that intermediate quotients by powers of
//! `L` stay exact; every class produced by the toolkit ends up with
//! non-negative exponents.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::AlgebraError;

/// `Σ coeffs[k] · L^(shift + k)`, with no zero coefficient at either end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LPoly {
    shift: i64,
    coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { shift: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::normalized(0, vec![c.into()])
    }

    /// The class `L` itself.
    pub fn l() -> Self {
        Self::monomial(1)
    }

    /// `L^k`.
    pub fn monomial(k: i64) -> Self {
        LPoly { shift: k, coeffs: vec![BigInt::one()] }
    }

    /// `L^k - L^j`, a shape that appears in almost every class formula.
    pub fn binomial(k: i64, j: i64) -> Self {
        &Self::monomial(k) - &Self::monomial(j)
    }

    /// Coefficients listed from `L^0` upwards.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::normalized(0, coeffs.into_iter().map(Into::into).collect())
    }

    fn normalized(mut shift: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        shift += lead as i64;
        LPoly { shift, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.shift + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent, `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.shift;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.shift + k as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.shift, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `L^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LPoly { shift: self.shift + k, coeffs: self.coeffs.clone() }
    }

    /// Value at `L = q`. Negative exponents are rejected.
    pub fn eval(&self, q: &BigInt) -> Result<BigInt, AlgebraError> {
        if self.shift < 0 {
            return Err(AlgebraError::Domain(format!(
                "class has a term L^{} and cannot be evaluated",
                self.shift
            )));
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        Ok(acc * q.pow(self.shift as u32))
    }

    pub fn eval_u64(&self, q: u64) -> Result<BigInt, AlgebraError> {
        self.eval(&BigInt::from(q))
    }

    /// Leading-term division over the integers. The remainder is zero exactly
    /// when `divisor` divides `self` as Laurent polynomials.
    pub fn div_rem(&self, divisor: &LPoly) -> Result<(LPoly, LPoly), AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::Domain("division by the zero class".into()));
        }
        let dl = divisor.degree().unwrap();
        let dlead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = LPoly::zero();
        let span = dl - divisor.shift;
        while let Some(rd) = rem.degree() {
            if rd - rem.shift < span {
                break;
            }
            let rlead = rem.leading_coeff().unwrap();
            let (qc, r) = rlead.div_rem(&dlead);
            if !r.is_zero() {
                return Err(AlgebraError::InexactDivision);
            }
            let step = LPoly { shift: rd - dl, coeffs: vec![qc] };
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok((quot, rem))
    }

    pub fn exact_div(&self, divisor: &LPoly) -> Option<LPoly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Compact product form, e.g. `L^3(L+1)(L^2+L+1)(L-1)^3`.
    ///
    /// Powers of `L`, `L+1`, `L^2+L+1` and `L-1` are split off by trial
    /// division; whatever remains is printed as a single cofactor.
    pub fn factored_display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut rest = LPoly { shift: 0, coeffs: self.coeffs.clone() };
        let a = self.shift;
        let count = |rest: &mut LPoly, f: &LPoly| {
            let mut k = 0u32;
            while rest.degree().unwrap_or(0) > 0 {
                match rest.exact_div(f) {
                    Some(q) => {
                        *rest = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            k
        };
        let lm1 = LPoly::from_coeffs([-1, 1]);
        let lp1 = LPoly::from_coeffs([1, 1]);
        let cyc3 = LPoly::from_coeffs([1, 1, 1]);
        let d = count(&mut rest, &lm1);
        let b = count(&mut rest, &lp1);
        let c = count(&mut rest, &cyc3);

        let mut content = rest.content();
        if rest.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        let cofactor = LPoly::normalized(rest.shift, rest.coeffs.iter().map(|x| x / &content).collect());

        let power = |base: &str, k: u32| match k {
            0 => String::new(),
            1 => base.to_string(),
            _ => format!("{base}^{k}"),
        };
        let mut body = String::new();
        body += &match a {
            0 => String::new(),
            1 => "L".into(),
            _ => format!("L^{a}"),
        };
        if !cofactor.is_one() {
            body += &format!("({})", cofactor.compact());
        }
        body += &power("(L+1)", b);
        body += &power("(L^2+L+1)", c);
        body += &power("(L-1)", d);

        if body.is_empty() {
            content.to_string()
        } else if content.is_one() {
            body
        } else if content == -BigInt::one() {
            format!("-{body}")
        } else {
            format!("{content}{body}")
        }
    }

    fn is_one(&self) -> bool {
        self.shift == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Expanded form without spaces, highest power first: `L^2+2L-1`.
    pub fn compact(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let (plus, minus) = if spaced { (" + ", " - ") } else { ("+", "-") };
        for (k, (e, c)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            out += match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => minus,
                (_, false) => plus,
            };
            let mono = match e {
                0 => String::new(),
                1 => "L".into(),
                _ => format!("L^{e}"),
            };
            if mono.is_empty() {
                out += &abs.to_string();
            } else if abs.is_one() {
                out += &mono;
            } else {
                out += &format!("{abs}{mono}");
            }
        }
        out
    }

    /// Coefficients from `L^0` up to the degree, for non-negative classes.
    pub fn dense_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.shift < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(vec![]);
        }
        let mut v = vec![BigInt::zero(); self.shift as usize];
        v.extend(self.coeffs.iter().cloned());
        Some(v)
    }

    /// Coefficients as `i64`, when they fit.
    pub fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.dense_coeffs()?.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LPoly::normalized(lo, coeffs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly { shift: self.shift, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        self + &(-rhs)
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LPoly::normalized(self.shift + rhs.shift, coeffs)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LPoly {
            type Output = LPoly;
            fn $m(self, rhs: LPoly) -> LPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LPoly> for LPoly {
            type Output = LPoly;
            fn $m(self, rhs: &LPoly) -> LPoly { (&self).$m(rhs) }
        }
        impl $tr<LPoly> for &LPoly {
            type Output = LPoly;
            fn $m(self, rhs: LPoly) -> LPoly { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        -&self
    }
}

impl std::iter::Sum for LPoly {
    fn sum<I: Iterator<Item = LPoly>>(iter: I) -> LPoly {
        iter.fold(LPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LPoly {
    fn product<I: Iterator<Item = LPoly>>(iter: I) -> LPoly {
        iter.fold(LPoly::one(), |a, b| a * b)
    }
}

/// Parses sums of products such as `L^3(L+1)(L^2+L+1)`, `-(L-1)^2` or
/// `6L^4 - 3L^3 + 2`. `𝕃` is accepted for `L`; juxtaposition and `*` both
/// multiply.
impl std::str::FromStr for LPoly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, pos: 0 };
        let v = p.sum()?;
        if p.pos != chars.len() {
            return Err(p.error());
        }
        Ok(v)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self) -> AlgebraError {
        let text: String = self.chars.iter().collect();
        AlgebraError::Parse(format!("bad L-polynomial {text:?} at position {}", self.pos))
    }

    fn sum(&mut self) -> Result<LPoly, AlgebraError> {
        let mut acc = LPoly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<LPoly, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                Some('(' | 'L' | '𝕃') => {}
                Some(c) if c.is_ascii_digit() => {}
                _ => return Ok(acc),
            }
            acc = acc * self.power()?;
        }
    }

    fn power(&mut self) -> Result<LPoly, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?.to_u32().ok_or_else(|| self.error())?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LPoly, AlgebraError> {
        match self.peek() {
            Some('L' | '𝕃') => {
                self.pos += 1;
                Ok(LPoly::l())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(LPoly::constant(self.integer()?)),
            _ => Err(self.error()),
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lm1() -> LPoly {
        LPoly::binomial(1, 0)
    }

    #[test]
    fn parsing_round_trips_displays() {
        let cases = ["L^3(L+1)(L^2+L+1)(L-1)^2", "-(L-1)", "2(L^2+1)", "0", "L(L^2-L-1)(L-1)^6"];
        for c in cases {
            let p: LPoly = c.parse().unwrap();
            assert_eq!(p.factored_display(), c);
        }
        let p: LPoly = "6L^4 - 3*L^3 + 2L^2 + 2L - 1".parse().unwrap();
        assert_eq!(p.compact(), "6L^4-3L^3+2L^2+2L-1");
        assert_eq!("𝕃^2".parse::<LPoly>().unwrap(), LPoly::monomial(2));
        assert!("L^".parse::<LPoly>().is_err());
        assert!("(L+1".parse::<LPoly>().is_err());
    }

    #[test]
    fn expanded_and_factored_text() {
        let p = LPoly::monomial(8) - LPoly::monomial(6) - LPoly::monomial(5) + LPoly::monomial(3);
        assert_eq!(p.to_string(), "L^8 - L^6 - L^5 + L^3");
        assert_eq!(p.factored_display(), "L^3(L+1)(L^2+L+1)(L-1)^2");

        let q = LPoly::monomial(1) * LPoly::from_coeffs([-1, 2, 1]);
        assert_eq!(q.factored_display(), "L(L^2+2L-1)");
        assert_eq!(LPoly::zero().factored_display(), "0");
        assert_eq!(LPoly::constant(-3).factored_display(), "-3");
        assert_eq!((LPoly::monomial(2) * lm1().pow(4)).factored_display(), "L^2(L-1)^4");
        assert_eq!((-lm1()).factored_display(), "-(L-1)");
        assert_eq!(LPoly::from_coeffs([2, 0, 2]).factored_display(), "2(L^2+1)");
    }

    #[test]
    fn evaluation() {
        let gl2 = (LPoly::monomial(2) - LPoly::one()) * (LPoly::monomial(2) - LPoly::l());
        assert_eq!(gl2.eval_u64(2).unwrap(), BigInt::from(6));
        assert_eq!(gl2.eval_u64(3).unwrap(), BigInt::from(48));
        assert!(matches!(LPoly::monomial(-1).eval_u64(2), Err(AlgebraError::Domain(_))));
    }

    #[test]
    fn division() {
        let p = LPoly::monomial(5) - LPoly::monomial(2);
        let (q, r) = p.div_rem(&lm1()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, LPoly::from_coeffs([0, 0, 1, 1, 1]));
        assert!(LPoly::monomial(2).exact_div(&LPoly::from_coeffs([1, 1])).is_none());
    }

    fn small() -> impl Strategy<Value = LPoly> {
        (prop::collection::vec(-4i64..=4, 0..5), -2i64..4).prop_map(|(c, s)| LPoly::from_coeffs(c).shifted(s))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small(), b in small()) {
            let (a, b) = (a.shifted(2), b.shifted(2));
            for q in [2u64, 3, 7] {
                let q = BigInt::from(q);
                prop_assert_eq!((&a * &b).eval(&q).unwrap(), a.eval(&q).unwrap() * b.eval(&q).unwrap());
                prop_assert_eq!((&a + &b).eval(&q).unwrap(), a.eval(&q).unwrap() + b.eval(&q).unwrap());
            }
        }

        #[test]
        fn multiplication_then_division(a in small(), k in 1u32..4) {
            let d = lm1().pow(k);
            prop_assert_eq!((&a * &d).exact_div(&d), Some(a.clone()));
        }
    }
}
