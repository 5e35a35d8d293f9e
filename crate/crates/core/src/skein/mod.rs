//! Skein evaluation of closed diagrams and (1,1)-tangles.
//!
//! The relations used:
//!
//! * `X₊ − X₋ = (q⁻¹ − q) X₀` with `X₀` the oriented smoothing,
//! * a free loop is `[t]`,
//! * a positive curl is `a⁻¹ = q^-t`, a negative one `a`.
//!
//! Each component gets a base point. A diagram is descending when walking the
//! components in order from their base points meets every crossing first on
//! its over-strand; such a diagram is an unlink up to framing and evaluates to
//! `[t]^components · a^-writhe`. Otherwise the first crossing met from below
//! is switched, and the smoothing picks up the correction term. Base points
//! depend only on crossing positions, which switching leaves alone, so each
//! switch removes one violation and each smoothing removes a crossing.
//!
//! Between branch steps curls and bigons are removed, free loops factored out
//! and split diagrams evaluated piece by piece. Values of connected pieces are
//! memoized under a relabelling-invariant key.

mod diag;
mod engine;
mod poly;

pub use engine::{EngineConfig, EngineStats, Evaluand, SkeinEngine};
pub use poly::SkeinPoly;

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram, Tangle11};
use crate::ring::RingElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("recursion depth {depth} exceeded the bound {limit}")]
    DepthExceeded { depth: usize, limit: usize },

    #[error("coefficient or exponent overflow")]
    Overflow,

    #[error("linear combination mixes closed diagrams and tangles")]
    MixedBoundary,

    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Framed value of a closed diagram, using the shared engine.
pub fn evaluate_closed(l: &LinkDiagram) -> Result<RingElem, SkeinError> {
    SkeinEngine::global().evaluate_closed(l)
}

/// The scalar a (1,1)-tangle evaluates to, using the shared engine.
pub fn evaluate_tangle(t: &Tangle11) -> Result<RingElem, SkeinError> {
    SkeinEngine::global().evaluate_tangle(t)
}

pub fn evaluate_linear_combination(terms: &[(RingElem, Evaluand)]) -> Result<RingElem, SkeinError> {
    SkeinEngine::global().evaluate_linear_combination(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    fn value(s: &str) -> RingElem {
        evaluate_closed(&parse_braid(s).unwrap().closure()).unwrap()
    }

    fn t() -> RingElem {
        RingElem::loop_value()
    }

    fn z() -> RingElem {
        RingElem::skein_coefficient()
    }

    fn a(k: i32) -> RingElem {
        RingElem::monomial(1, 0, k)
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(value("braid 1:"), t());
        assert_eq!(value("braid 2:"), &t() * &t());
        assert_eq!(value("braid 2: 1"), &t() * &a(-1));
        assert_eq!(value("braid 2: -1"), &t() * &a(1));
    }

    #[test]
    fn hopf_link() {
        let expect = &(&z() * &(&a(-1) * &t())) + &(&t() * &t());
        assert_eq!(value("braid 2: 1 1"), expect);
    }

    #[test]
    fn trefoil_tangle() {
        // T^3 = z + (1 + z^2) T in H_2; closing the second strand of T gives a^-1
        let l = parse_braid("braid 2: 1 1 1").unwrap().closure();
        let alpha = evaluate_tangle(&l.cut_component(0).unwrap()).unwrap();
        let expect = &(&z() * &t()) + &(&(&RingElem::one() + &(&z() * &z())) * &a(-1));
        assert_eq!(alpha, expect);
        assert_eq!(&alpha * &t(), evaluate_closed(&l).unwrap());
    }

    #[test]
    fn tangle_base_cases() {
        assert_eq!(evaluate_tangle(&Tangle11::identity()).unwrap(), RingElem::one());
        let curl = parse_braid("braid 2: 1").unwrap().closure();
        assert_eq!(evaluate_tangle(&curl.cut_component(0).unwrap()).unwrap(), a(-1));
    }

    #[test]
    fn linear_combinations() {
        let u = Evaluand::Closed(LinkDiagram::unknot());
        let u2 = Evaluand::Closed(LinkDiagram::unlink(2));
        assert_eq!(evaluate_linear_combination(&[(RingElem::one(), u.clone())]).unwrap(), t());
        let zero = evaluate_linear_combination(&[
            (RingElem::one(), u.clone()),
            (RingElem::from_int(-1), u.clone()),
        ]);
        assert!(zero.unwrap().is_zero());
        let v = evaluate_linear_combination(&[(RingElem::q(), u.clone()), (RingElem::one(), u2)]);
        assert_eq!(v.unwrap(), &(&RingElem::q() * &t()) + &(&t() * &t()));
        let mixed = [
            (RingElem::one(), u),
            (RingElem::one(), Evaluand::Tangle(Tangle11::identity())),
        ];
        assert_eq!(evaluate_linear_combination(&mixed), Err(SkeinError::MixedBoundary));
    }

    #[test]
    fn memo_does_not_change_values() {
        let plain = SkeinEngine::new(EngineConfig {
            memo_capacity: 0,
            parallel: false,
        });
        for s in ["braid 3: 1 -2 1 -2", "braid 3: 1 1 -2 1 -2", "braid 4: 1 -2 3 -2 1 3 -2"] {
            let l = parse_braid(s).unwrap().closure();
            assert_eq!(plain.evaluate_closed(&l).unwrap(), evaluate_closed(&l).unwrap(), "{s}");
        }
    }
}
