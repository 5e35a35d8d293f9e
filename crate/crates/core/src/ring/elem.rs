use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::{b_div_exact, b_gcd, b_is_one, from_dense, to_dense};
use super::laurent::{LaurentPoly, Monomial};
use super::RingError;

/// An exact rational function in `q` and `a = q^t` with integer coefficients.
///
/// Always stored in canonical form: numerator and denominator are coprime in
/// `Z[q, a]`, the denominator has minimal exponents zero and a positive
/// leading coefficient, and zero is `0 / 1`. Equality of values is therefore
/// structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RingElem::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RingElem::from_laurent(LaurentPoly::constant(c))
    }

    /// `c * q^qexp * a^aexp`
    pub fn monomial(c: i64, qexp: i32, aexp: i32) -> Self {
        RingElem::from_laurent(LaurentPoly::monomial(c, qexp, aexp))
    }

    pub fn q() -> Self {
        RingElem::monomial(1, 1, 0)
    }

    pub fn a() -> Self {
        RingElem::monomial(1, 0, 1)
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RingElem {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(canonical(num, den))
    }

    /// The quantum integer `[b t + c] = (a^b q^c - a^-b q^-c) / (q - q^-1)`.
    pub fn quantum_int(b: i32, c: i32) -> Self {
        let num = LaurentPoly::from_triples([(1, c, b), (-1, -c, -b)]);
        canonical(num, q_minus_qinv())
    }

    /// The loop value `[t]`.
    pub fn loop_value() -> Self {
        RingElem::quantum_int(1, 0)
    }

    /// The skein coefficient `q^-1 - q`.
    pub fn skein_coefficient() -> Self {
        RingElem::from_laurent(LaurentPoly::from_triples([(1, -1, 0), (-1, 1, 0)]))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// True when the value does not involve `a`.
    pub fn is_q_only(&self) -> bool {
        self.num.is_q_only() && self.den.is_q_only()
    }

    pub fn checked_div(&self, rhs: &RingElem) -> Result<RingElem, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if rhs.is_one() {
            return Ok(self.clone());
        }
        Ok(canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inverse(&self) -> Result<RingElem, RingError> {
        RingElem::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Result<RingElem, RingError> {
        if e >= 0 {
            Ok(RingElem {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            }
            .recanonical())
        } else {
            self.inverse()?.pow(-e)
        }
    }

    pub fn scale_monomial(&self, qexp: i32, aexp: i32) -> RingElem {
        RingElem {
            num: self.num.shift(qexp, aexp),
            den: self.den.clone(),
        }
    }

    /// Substitutes `a := sign * q^qpow`.
    pub fn substitute_a(&self, sign: i32, qpow: i32) -> Result<RingElem, RingError> {
        let den = self.den.substitute_a(sign, qpow);
        if den.is_zero() {
            return Err(RingError::SpecializationPole { sign, qpow });
        }
        Ok(canonical(self.num.substitute_a(sign, qpow), den))
    }

    /// Image under `a := q^d`.
    pub fn specialize_d(&self, d: i32) -> Result<RingElem, RingError> {
        self.substitute_a(1, d)
    }

    /// Image under the involution `q := -q^-1` fixing `a`.
    pub fn mirror_tau(&self) -> RingElem {
        canonical(self.num.mirror(), self.den.mirror())
    }

    /// Image under `q := q^-1` fixing `a`.
    pub fn invert_q(&self) -> RingElem {
        canonical(self.num.invert_q(), self.den.invert_q())
    }

    fn recanonical(self) -> RingElem {
        canonical(self.num, self.den)
    }
}

fn q_minus_qinv() -> LaurentPoly {
    LaurentPoly::from_triples([(1, 1, 0), (-1, -1, 0)])
}

fn canonical(num: LaurentPoly, den: LaurentPoly) -> RingElem {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RingElem::zero();
    }
    let (sn, mut dn) = to_dense(&num);
    let (sd, mut dd) = to_dense(&den);
    let g = b_gcd(&dn, &dd);
    if !b_is_one(&g) {
        dn = b_div_exact(&dn, &g).expect("gcd divides numerator");
        dd = b_div_exact(&dd, &g).expect("gcd divides denominator");
    }
    let mut num = from_dense(Monomial::new(sn.qexp - sd.qexp, sn.aexp - sd.aexp), &dn);
    let mut den = from_dense(Monomial::ONE, &dd);
    if den.leading_sign_negative() {
        num = -num;
        den = -den;
    }
    RingElem { num, den }
}

impl Default for RingElem {
    fn default() -> Self {
        RingElem::zero()
    }
}

impl From<i64> for RingElem {
    fn from(c: i64) -> Self {
        RingElem::from_int(c)
    }
}

impl From<LaurentPoly> for RingElem {
    fn from(p: LaurentPoly) -> Self {
        RingElem::from_laurent(p)
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RingElem::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return canonical(&self.num + &rhs.num, self.den.clone());
        }
        canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RingElem::from_laurent(&self.num * &rhs.num);
        }
        canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $f(self, rhs: RingElem) -> RingElem {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RingElem> for RingElem {
            type Output = RingElem;
            fn $f(self, rhs: &RingElem) -> RingElem {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl std::iter::Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(iter: I) -> RingElem {
        iter.fold(RingElem::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `num` alone when the denominator is 1, otherwise `(num) / (den)`.
impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(x: i32) -> RingElem {
        RingElem::quantum_int(0, x)
    }

    #[test]
    fn additive_identity_and_small_quantum_integers() {
        let x = RingElem::quantum_int(3, -2);
        assert_eq!(&x + &RingElem::zero(), x);
        assert_eq!(&qi(1) + &qi(1), RingElem::from_int(2));
        assert_eq!(&RingElem::q() + &RingElem::q().inverse().unwrap(), qi(2));
        assert_eq!(qi(0), RingElem::zero());
        assert_eq!(qi(2), RingElem::from_laurent(LaurentPoly::from_triples([(1, 1, 0), (1, -1, 0)])));
    }

    #[test]
    fn clearing_the_loop_denominator() {
        let lhs = &RingElem::from_laurent(q_minus_qinv()) * &RingElem::loop_value();
        let rhs = RingElem::from_laurent(LaurentPoly::from_triples([(1, 0, 1), (-1, 0, -1)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_times_two_is_three_plus_one() {
        assert_eq!(&qi(2) * &qi(2), &qi(3) + &qi(1));
    }

    #[test]
    fn division() {
        let x = RingElem::quantum_int(2, 1);
        assert_eq!(x.checked_div(&x).unwrap(), RingElem::one());
        assert_eq!(x.checked_div(&RingElem::zero()), Err(RingError::DivisionByZero));
        let y = RingElem::quantum_int(1, -1);
        assert_eq!(&x.checked_div(&y).unwrap() * &y, x);
    }

    #[test]
    fn specializations() {
        let t = RingElem::loop_value();
        assert_eq!(t.specialize_d(2).unwrap(), qi(2));
        assert_eq!(t.specialize_d(0).unwrap(), RingElem::zero());
        let sym2 = (&t * &RingElem::quantum_int(1, 1)).checked_div(&qi(2)).unwrap();
        assert_eq!(sym2.specialize_d(1).unwrap(), RingElem::one());
    }

    #[test]
    fn specialization_pole_is_reported() {
        let x = RingElem::one()
            .checked_div(&RingElem::from_laurent(LaurentPoly::from_triples([(1, 0, 1), (-1, 2, 0)])))
            .unwrap();
        assert!(matches!(x.specialize_d(2), Err(RingError::SpecializationPole { .. })));
    }

    #[test]
    fn mirror_examples() {
        let t = RingElem::loop_value();
        assert_eq!(t.mirror_tau(), t);
        assert_eq!(RingElem::monomial(1, 2, 0).mirror_tau(), RingElem::monomial(1, -2, 0));
        assert_eq!(RingElem::monomial(1, 1, -1).mirror_tau(), RingElem::monomial(-1, -1, -1));
    }

    #[test]
    fn canonical_denominator_is_normalized() {
        // (2a)/(-4 a q) = -1/(2q)  -> num -1 * q^-1, den 2
        let x = RingElem::from_fraction(
            LaurentPoly::monomial(2, 0, 1),
            LaurentPoly::monomial(-4, 1, 1),
        )
        .unwrap();
        assert_eq!(x.den(), &LaurentPoly::constant(2));
        assert_eq!(x.num(), &LaurentPoly::monomial(-1, -1, 0));
    }
}
