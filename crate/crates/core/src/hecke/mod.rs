//! The Hecke algebra `H_r` in the permutation basis, quantum Young
//! idempotents, and a trace evaluator for braid closures.
//!
//! `T_i` is the positive crossing of strands `i` and `i + 1`, so the skein
//! relation reads `T_i - T_i^-1 = q^-1 - q` and `T_i^2 = 1 + (q^-1 - q) T_i`.
//! The eigenvalues of `T_i` are `q^-1` (symmetrizing) and `-q`
//! (antisymmetrizing).

mod element;
mod idempotent;
mod perm;
mod trace;

pub use element::{hecke_inverse_generator, hecke_mul, HeckeElement};
pub use idempotent::{
    block_idempotent, conjugate_idempotent, young_idempotent, young_idempotent_with_bound,
    Certificate, Check, IdempotentRecord, DEFAULT_BOUND,
};
pub use perm::Perm;
pub use trace::{braid_closure_value, closure_trace, TRACE_MAX_STRANDS};

use thiserror::Error;

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("rank mismatch: H_{left} and H_{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for H_{rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("partition size {size} exceeds the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("normalization scalar of the {0} symmetrizer vanished")]
    ZeroNormalization(String),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("certificate check failed for {shape}: {check}")]
    Certificate { shape: String, check: String },

    #[error("{strands} strands exceed the trace evaluator's limit of {limit}")]
    TooManyStrands { strands: usize, limit: usize },

    #[error("coefficient overflow in the trace evaluator")]
    Overflow,

    #[error(transparent)]
    Ring(#[from] RingError),
}
