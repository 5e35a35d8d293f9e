//! JSON forms: a polynomial is a list of `[c, i, j]` triples meaning
//! `c * q^i * a^j`; a ring element is `{"num": [...], "den": [...]}`.
//! Coefficients that do not fit in an `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BetaExpansion, LaurentPoly, RingElem};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Coeff {
    fn from_big(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(x) => Coeff::Small(x),
            None => Coeff::Big(c.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            Coeff::Small(x) => Ok(BigInt::from(*x)),
            Coeff::Big(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

type Triple = (Coeff, i32, i32);

fn to_triples(p: &LaurentPoly) -> Vec<Triple> {
    p.terms()
        .map(|(m, c)| (Coeff::from_big(c), m.qexp, m.aexp))
        .collect()
}

fn from_triples(t: Vec<Triple>) -> Result<LaurentPoly, String> {
    let mut out = Vec::with_capacity(t.len());
    for (c, i, j) in t {
        out.push((c.to_big()?, i, j));
    }
    Ok(LaurentPoly::from_triples(out))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_triples(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t = Vec::<Triple>::deserialize(d)?;
        from_triples(t).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct Fraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Fraction {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = Fraction::deserialize(d)?;
        RingElem::from_fraction(f.num, f.den).map_err(D::Error::custom)
    }
}

impl Serialize for BetaExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(BetaExpansion {
            coeffs: Vec::deserialize(d)?,
        })
    }
}
