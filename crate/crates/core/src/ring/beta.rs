//! Normal form in powers of the loop value `[t]`.
//!
//! The subring `Z[q^±1, a^±1, [t]]` of the rational functions is a free module
//! over `Z[q^±1][[t]]` with basis `{1, a}`, because `a` satisfies the monic
//! relation `a^2 = (q - q^-1)[t] a + 1`. Every element of that subring has a
//! unique expansion `sum_k (u_k + a v_k) [t]^k` with `u_k, v_k` Laurent in `q`.
//! The coefficients are peeled off one at a time: `[t]` vanishes exactly at
//! `a = 1` and `a = -1`, so evaluating there recovers `u_0 + v_0` and
//! `u_0 - v_0`.

use std::fmt;

use num_bigint::BigInt;

use super::{LaurentPoly, RingElem, RingError};

/// Coefficients of an element in the `[t]`-power basis.
///
/// `coeffs[k]` is the coefficient of `[t]^k`; each coefficient only has terms
/// with `a`-exponent 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaExpansion {
    pub coeffs: Vec<LaurentPoly>,
}

impl BetaExpansion {
    /// Computes the expansion of `x`, or reports that `x` is outside the subring.
    pub fn of(x: &RingElem) -> Result<Self, RingError> {
        // a^k needs |k| powers of [t]
        let reach = |p: &LaurentPoly| match (p.min_exponents(), p.max_exponents()) {
            (Some((_, lo)), Some((_, hi))) => lo.unsigned_abs().max(hi.unsigned_abs()) as usize,
            _ => 0,
        };
        let bound = reach(x.num()) + reach(x.den()) + 2;
        let loop_value = RingElem::loop_value();
        let two = BigInt::from(2);

        let mut rest = x.clone();
        let mut coeffs = Vec::new();
        for _ in 0..=bound {
            if rest.is_zero() {
                break;
            }
            let at_plus = laurent_in_q(&rest, 1)?;
            let at_minus = laurent_in_q(&rest, -1)?;
            let u = (&at_plus + &at_minus).div_exact_scalar(&two).ok_or_else(|| {
                RingError::NotInSubring(format!("odd coefficient while expanding {x}"))
            })?;
            let v = (&at_plus - &at_minus).div_exact_scalar(&two).ok_or_else(|| {
                RingError::NotInSubring(format!("odd coefficient while expanding {x}"))
            })?;
            let c = &u + &v.shift(0, 1);
            rest = (&rest - &RingElem::from_laurent(c.clone())).checked_div(&loop_value)?;
            coeffs.push(c);
        }
        if !rest.is_zero() {
            return Err(RingError::NotInSubring(format!(
                "expansion of {x} did not terminate within {bound} steps"
            )));
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(BetaExpansion { coeffs })
    }

    /// Reassembles `sum_k coeffs[k] [t]^k`.
    pub fn to_ring_elem(&self) -> RingElem {
        self.evaluate_with(&RingElem::loop_value(), |c| RingElem::from_laurent(c.clone()))
    }

    /// Evaluates the expansion at `t = d`, i.e. `a = q^d` and `[t] = [d]`.
    pub fn specialize(&self, d: i32) -> RingElem {
        self.evaluate_with(&RingElem::quantum_int(0, d), |c| {
            RingElem::from_laurent(c.substitute_a(1, d))
        })
    }

    fn evaluate_with(&self, base: &RingElem, coeff: impl Fn(&LaurentPoly) -> RingElem) -> RingElem {
        // Horner
        let mut acc = RingElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * base) + &coeff(c);
        }
        acc
    }
}

fn laurent_in_q(x: &RingElem, sign: i32) -> Result<LaurentPoly, RingError> {
    let v = x
        .substitute_a(sign, 0)
        .map_err(|_| RingError::NotInSubring(format!("pole at a = {sign} in {x}")))?;
    v.as_laurent()
        .cloned()
        .ok_or_else(|| RingError::NotInSubring(format!("non-Laurent value at a = {sign}: {v}")))
}

impl fmt::Display for BetaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) * [t]^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_element_and_combination() {
        let t = RingElem::loop_value();
        let e = BetaExpansion::of(&t).unwrap();
        assert_eq!(e.coeffs, vec![LaurentPoly::zero(), LaurentPoly::one()]);

        let x = &(&t * &t) + &RingElem::q();
        let e = BetaExpansion::of(&x).unwrap();
        assert_eq!(e.coeffs, vec![LaurentPoly::q(), LaurentPoly::zero(), LaurentPoly::one()]);
    }

    #[test]
    fn inverse_of_a_reduces_into_the_basis() {
        // a^-1 = a - (q - q^-1)[t]
        let e = BetaExpansion::of(&RingElem::monomial(1, 0, -1)).unwrap();
        assert_eq!(
            e.coeffs,
            vec![LaurentPoly::a(), LaurentPoly::from_triples([(-1, 1, 0), (1, -1, 0)])]
        );
        assert_eq!(e.to_ring_elem(), RingElem::monomial(1, 0, -1));
    }

    #[test]
    fn high_powers_of_a() {
        let t = RingElem::loop_value();
        for k in -6..=6 {
            for m in 0..3 {
                let x = &RingElem::monomial(1, 0, k) * &t.pow(m).unwrap();
                let e = BetaExpansion::of(&x).unwrap_or_else(|err| panic!("a^{k} [t]^{m}: {err}"));
                assert_eq!(e.to_ring_elem(), x);
            }
        }
    }

    #[test]
    fn rejects_values_outside_the_subring() {
        let x = RingElem::one().checked_div(&RingElem::quantum_int(0, 2)).unwrap();
        assert!(matches!(BetaExpansion::of(&x), Err(RingError::NotInSubring(_))));
        let y = RingElem::one().checked_div(&RingElem::loop_value()).unwrap();
        assert!(BetaExpansion::of(&y).is_err());
    }
}
