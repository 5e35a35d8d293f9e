//! Laurent polynomials in `q` and `a` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A monomial `q^qexp * a^aexp`.
///
/// Ordered lexicographically on `(aexp, qexp)`, which is the canonical term
/// order used for serialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub aexp: i32,
    pub qexp: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { aexp: 0, qexp: 0 };

    pub fn new(qexp: i32, aexp: i32) -> Self {
        Monomial { aexp, qexp }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial {
            aexp: self.aexp + other.aexp,
            qexp: self.qexp + other.qexp,
        }
    }
}

/// A finite sum of monomials with nonzero integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::term(BigInt::from(c), Monomial::ONE)
    }

    /// `c * q^qexp * a^aexp`.
    pub fn monomial(c: i64, qexp: i32, aexp: i32) -> Self {
        LaurentPoly::term(BigInt::from(c), Monomial::new(qexp, aexp))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1, 0)
    }

    pub fn a() -> Self {
        LaurentPoly::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, qexp, aexp)` triples; repeated
    /// monomials are summed.
    pub fn from_triples<I, C>(triples: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (c, i, j) in triples {
            p.add_term(Monomial::new(i, j), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .map_or(false, |c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending `(aexp, qexp)`) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest term under the canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of the exponents, `(min qexp, min aexp)`.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut mq, mut ma) = (first.qexp, first.aexp);
        for m in it {
            mq = mq.min(m.qexp);
            ma = ma.min(m.aexp);
        }
        Some((mq, ma))
    }

    /// Componentwise maximum of the exponents, `(max qexp, max aexp)`.
    pub fn max_exponents(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut mq, mut ma) = (first.qexp, first.aexp);
        for m in it {
            mq = mq.max(m.qexp);
            ma = ma.max(m.aexp);
        }
        Some((mq, ma))
    }

    /// True when no term involves `a`.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|m| m.aexp == 0)
    }

    /// Multiplies by the monomial `q^qexp a^aexp`.
    pub fn shift(&self, qexp: i32, aexp: i32) -> Self {
        let s = Monomial::new(qexp, aexp);
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.times(s), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `a := sign * q^qpow`, producing a polynomial in `q` only.
    pub fn substitute_a(&self, sign: i32, qpow: i32) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let c = if sign < 0 && m.aexp.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            out.add_term(Monomial::new(m.qexp + qpow * m.aexp, 0), c);
        }
        out
    }

    /// The involution `q := -q^{-1}`, `a` fixed.
    pub fn mirror(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.qexp.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
                    (Monomial::new(-m.qexp, m.aexp), c)
                })
                .collect(),
        }
    }

    /// The map `q := q^{-1}`, `a` fixed.
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(-m.qexp, m.aexp), c.clone()))
                .collect(),
        }
    }

    /// Content: the nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`; returns `None` unless all divide exactly.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = BTreeMap::new();
        for (m, x) in &self.terms {
            if !(x % c).is_zero() {
                return None;
            }
            out.insert(*m, x / c);
        }
        Some(LaurentPoly { terms: out })
    }

    /// Coefficients as `(c, qexp, aexp)` in canonical order.
    pub fn to_triples(&self) -> Vec<(BigInt, i32, i32)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.clone(), m.qexp, m.aexp))
            .collect()
    }

    pub(crate) fn leading_sign_negative(&self) -> bool {
        self.leading().map_or(false, |(_, c)| c.is_negative())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text form: `c * q^i * a^j` terms joined by ` + `, in canonical order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * q^{} * a^{}", c, m.qexp, m.aexp)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly::from_triples([(1, 1, 0), (-1, 1, 0), (2, 0, 3)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coefficient(Monomial::new(0, 3)), BigInt::from(2));
    }

    #[test]
    fn text_form_is_canonically_ordered() {
        let p = LaurentPoly::from_triples([(1, 0, 1), (-1, 0, -1), (3, 2, 0)]);
        assert_eq!(p.to_string(), "-1 * q^0 * a^-1 + 3 * q^2 * a^0 + 1 * q^0 * a^1");
    }

    #[test]
    fn substitution_and_mirror() {
        // a^-1 q  under q -> -q^-1 gives -a^-1 q^-1
        let p = LaurentPoly::monomial(1, 1, -1);
        assert_eq!(p.mirror(), LaurentPoly::monomial(-1, -1, -1));
        // a^2 + a^-1 at a = -q^3
        let p = LaurentPoly::from_triples([(1, 0, 2), (1, 0, -1)]);
        assert_eq!(
            p.substitute_a(-1, 3),
            LaurentPoly::from_triples([(1, 6, 0), (-1, -3, 0)])
        );
    }

    #[test]
    fn power_matches_repeated_product() {
        let p = LaurentPoly::from_triples([(1, 1, 0), (1, -1, 0), (2, 0, 1)]);
        let mut acc = LaurentPoly::one();
        for _ in 0..5 {
            acc = &acc * &p;
        }
        assert_eq!(p.pow(5), acc);
    }
}
