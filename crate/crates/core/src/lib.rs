//! Exact evaluation of HOMFLY-PT type invariants of oriented framed links.
//!
//! Diagrams are reduced by the oriented skein relations of the quantized
//! oriented Brauer category to scalars in `Z[q^±1, a^±1]` localized at
//! `q - q^-1`, with `a = q^t`. On top of the framed value the crate builds
//! the d-specializations (Jones at `d = 2`), colored invariants by cabling
//! with Hecke algebra idempotents, reduced invariants (Alexander at `d = 0`)
//! and the `q ↦ -q^-1` mirror symmetry.

pub mod cabling;
pub mod corpus;
pub mod diagram;
pub mod hecke;
pub mod invariants;
pub mod ring;
pub mod skein;

pub use cabling::{colored_trace, colored_value, CablingConfig, ColoredLink, ColoredTangle, Strategy};
pub use diagram::{parse_braid, parse_pd, BraidWord, Labeling, LinkDiagram, Partition, Tangle11};
pub use hecke::{young_idempotent, HeckeElement, Perm};
pub use invariants::{
    alexander, colored_d, colored_homfly, d_polynomial, framing_normalize, homfly, jones,
    mirror_check, mirror_transform, reduced, Framing, InvariantKind, InvariantResult, Link,
};
pub use ring::{beta_expand, mirror_tau, quantum_int, specialize_d, BetaExpansion, LaurentPoly, RingElem};
pub use skein::{evaluate_closed, evaluate_tangle, SkeinEngine};


use thiserror::Error;

use cabling::CablingError;
use diagram::DiagramError;
use hecke::HeckeError;
use ring::RingError;
use skein::SkeinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),

    #[error(transparent)]
    Diagram(#[from] DiagramError),

    #[error(transparent)]
    Skein(#[from] SkeinError),

    #[error(transparent)]
    Hecke(#[from] HeckeError),

    #[error(transparent)]
    Cabling(#[from] CablingError),

    #[error("result is already writhe-normalized")]
    AlreadyNormalized,

    #[error("framing normalization needs one-box labels, got {0}")]
    ColoredFraming(String),

    #[error("component {component} does not exist ({components} components)")]
    NoComponent { component: usize, components: usize },

    #[error("{kind} results have no mirror image in this ring")]
    NotGeneric { kind: String },

    #[error("diagram has {crossings} crossings, the brute-force resolver accepts at most {limit}")]
    TooLarge { crossings: usize, limit: usize },
}

/// Coarse classification used for process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Evaluation,
    BoundExceeded,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Diagram(_) | Error::Cabling(CablingError::Diagram(_)) => ErrorClass::Parse,
            Error::Skein(SkeinError::Diagram(_)) => ErrorClass::Parse,
            Error::Cabling(CablingError::LabelMismatch { .. }) => ErrorClass::Parse,
            Error::NoComponent { .. } => ErrorClass::Parse,
            Error::TooLarge { .. }
            | Error::Skein(SkeinError::DepthExceeded { .. })
            | Error::Cabling(CablingError::Skein(SkeinError::DepthExceeded { .. }))
            | Error::Hecke(HeckeError::BoundExceeded { .. } | HeckeError::TooManyStrands { .. }) => {
                ErrorClass::BoundExceeded
            }
            Error::Cabling(e) if e.is_bound_exceeded() => ErrorClass::BoundExceeded,
            _ => ErrorClass::Evaluation,
        }
    }
}
