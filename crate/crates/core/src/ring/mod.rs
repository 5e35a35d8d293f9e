//! Exact coefficient arithmetic.
//!
//! Values live in the field of rational functions in two formal units, `q`
//! and `a`, where `a` stands for `q^t`. The quantum integer of `b t + c` is
//! `(a^b q^c - a^-b q^-c) / (q - q^-1)`, and the loop value is `[t]`.

mod beta;
mod elem;
mod gcd;
mod laurent;
mod serial;

pub use beta::BetaExpansion;
pub use elem::RingElem;
pub use gcd::{laurent_div_exact, laurent_gcd};
pub use laurent::{LaurentPoly, Monomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes under a = {sign} * q^{qpow}")]
    SpecializationPole { sign: i32, qpow: i32 },

    #[error("value is not in Z[q^±1, a^±1, [t]]: {0}")]
    NotInSubring(String),

    #[error("malformed polynomial data: {0}")]
    Malformed(String),
}

/// `[b t + c]`
pub fn quantum_int(b: i32, c: i32) -> RingElem {
    RingElem::quantum_int(b, c)
}

pub fn specialize_d(x: &RingElem, d: i32) -> Result<RingElem, RingError> {
    x.specialize_d(d)
}

pub fn mirror_tau(x: &RingElem) -> RingElem {
    x.mirror_tau()
}

pub fn beta_expand(x: &RingElem) -> Result<BetaExpansion, RingError> {
    BetaExpansion::of(x)
}
