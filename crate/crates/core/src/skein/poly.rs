//! Working values of the skein recursion: polynomials in `z = q^-1 - q`,
//! `a^±1` and `δ = [t]` with `i128` coefficients. Every value the recursion
//! produces lives here, and the conversion to a [`RingElem`] happens once.

use std::fmt;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::ring::{LaurentPoly, Monomial, RingElem};

use super::SkeinError;

const A_BIAS: i64 = 1 << 15;

/// Exponents packed as `z << 32 | δ << 16 | (a + 2^15)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key(u64);

impl Key {
    fn new(z: u32, a: i32, d: u32) -> Self {
        debug_assert!(z < 1 << 16 && d < 1 << 16 && (a as i64 + A_BIAS) >= 0);
        Key((z as u64) << 32 | (d as u64) << 16 | (a as i64 + A_BIAS) as u64)
    }

    fn z(self) -> u32 {
        (self.0 >> 32) as u32
    }

    fn d(self) -> u32 {
        ((self.0 >> 16) & 0xffff) as u32
    }

    fn a(self) -> i32 {
        ((self.0 & 0xffff) as i64 - A_BIAS) as i32
    }

    fn checked_mul(self, o: Key) -> Option<Key> {
        let z = self.z() + o.z();
        let d = self.d() + o.d();
        let a = self.a() + o.a();
        if z >= 1 << 16 || d >= 1 << 16 || !(-(A_BIAS as i32)..A_BIAS as i32).contains(&a) {
            return None;
        }
        Some(Key::new(z, a, d))
    }
}

/// Sorted by key, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkeinPoly {
    terms: Vec<(Key, i128)>,
}

impl SkeinPoly {
    pub fn zero() -> Self {
        SkeinPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0, 0)
    }

    /// `c z^zexp a^aexp δ^dexp`
    pub fn monomial(c: i128, zexp: u32, aexp: i32, dexp: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        SkeinPoly {
            terms: vec![(Key::new(zexp, aexp, dexp), c)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(coefficient, zexp, aexp, dexp)`.
    pub fn terms(&self) -> impl Iterator<Item = (i128, u32, i32, u32)> + '_ {
        self.terms.iter().map(|&(k, c)| (c, k.z(), k.a(), k.d()))
    }

    pub fn checked_add(&self, other: &SkeinPoly) -> Result<SkeinPoly, SkeinError> {
        self.merge(other, 1)
    }

    pub fn checked_sub(&self, other: &SkeinPoly) -> Result<SkeinPoly, SkeinError> {
        self.merge(other, -1)
    }

    fn merge(&self, other: &SkeinPoly, sign: i128) -> Result<SkeinPoly, SkeinError> {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, b[j].1.checked_mul(sign).ok_or(SkeinError::Overflow)?));
                j += 1;
            } else {
                let c = a[i]
                    .1
                    .checked_add(b[j].1.checked_mul(sign).ok_or(SkeinError::Overflow)?)
                    .ok_or(SkeinError::Overflow)?;
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(SkeinPoly { terms: out })
    }

    pub fn checked_mul(&self, other: &SkeinPoly) -> Result<SkeinPoly, SkeinError> {
        if self.is_zero() || other.is_zero() {
            return Ok(SkeinPoly::zero());
        }
        if other.terms.len() == 1 {
            let (k, c) = other.terms[0];
            return self.mul_monomial(k, c);
        }
        if self.terms.len() == 1 {
            let (k, c) = self.terms[0];
            return other.mul_monomial(k, c);
        }
        let mut acc: FxHashMap<Key, i128> = FxHashMap::default();
        for &(k1, c1) in &self.terms {
            for &(k2, c2) in &other.terms {
                let k = k1.checked_mul(k2).ok_or(SkeinError::Overflow)?;
                let c = c1.checked_mul(c2).ok_or(SkeinError::Overflow)?;
                let e = acc.entry(k).or_insert(0);
                *e = e.checked_add(c).ok_or(SkeinError::Overflow)?;
            }
        }
        let mut terms: Vec<(Key, i128)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Ok(SkeinPoly { terms })
    }

    fn mul_monomial(&self, k: Key, c: i128) -> Result<SkeinPoly, SkeinError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(k1, c1) in &self.terms {
            terms.push((
                k1.checked_mul(k).ok_or(SkeinError::Overflow)?,
                c1.checked_mul(c).ok_or(SkeinError::Overflow)?,
            ));
        }
        // exponent shifts preserve the order
        Ok(SkeinPoly { terms })
    }

    /// Multiplies by `c z^zexp a^aexp δ^dexp`.
    pub fn times(&self, c: i128, zexp: u32, aexp: i32, dexp: u32) -> Result<SkeinPoly, SkeinError> {
        if c == 0 {
            return Ok(SkeinPoly::zero());
        }
        self.mul_monomial(Key::new(zexp, aexp, dexp), c)
    }

    /// Exact value as a rational function in `q` and `a`.
    pub fn to_ring_elem(&self) -> RingElem {
        if self.is_zero() {
            return RingElem::zero();
        }
        let dmax = self.terms.iter().map(|t| t.0.d()).max().unwrap_or(0);
        let zmax = self.terms.iter().map(|t| t.0.z()).max().unwrap_or(0);
        let z = LaurentPoly::from_triples([(1, -1, 0), (-1, 1, 0)]);
        let num_d = LaurentPoly::from_triples([(1, 0, 1), (-1, 0, -1)]);
        let den_d = LaurentPoly::from_triples([(1, 1, 0), (-1, -1, 0)]);
        let powers = |p: &LaurentPoly, n: u32| {
            let mut v = vec![LaurentPoly::one()];
            for k in 0..n as usize {
                let next = &v[k] * p;
                v.push(next);
            }
            v
        };
        let zp = powers(&z, zmax);
        let np = powers(&num_d, dmax);
        let dp = powers(&den_d, dmax);
        // sum c z^i a^j (a - a^-1)^k (q - q^-1)^(dmax - k) over (q - q^-1)^dmax
        let mut num = LaurentPoly::zero();
        for &(k, c) in &self.terms {
            let t = LaurentPoly::term(BigInt::from(c), Monomial::new(0, k.a()));
            let t = &(&t * &zp[k.z() as usize]) * &np[k.d() as usize];
            let t = &t * &dp[(dmax - k.d()) as usize];
            num = &num + &t;
        }
        RingElem::from_fraction(num, dp[dmax as usize].clone())
            .expect("(q - q^-1)^k is never zero")
    }
}

impl fmt::Display for SkeinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, z, a, d)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * z^{z} * a^{a} * δ^{d}")?;
        }
        Ok(())
    }
}
