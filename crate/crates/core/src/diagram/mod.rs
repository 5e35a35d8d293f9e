//! Diagram data: partitions, braid words, oriented link diagrams, (1,1)-tangles,
//! labelings and cabling.
//!
//! A [`LinkDiagram`] is stored as a signed Gauss code. Every crossing has two
//! incoming slots (over and under); following a strand out of a crossing leads
//! to the next incoming slot. Arcs are named by the slot they run into, so arc
//! `2c` ends at the over slot of crossing `c` and arc `2c + 1` at its under
//! slot. Crossing-free loops get the ids after those.
//!
//! All diagrams carry the blackboard framing.

mod braid;
mod builder;
mod cable;
mod labeling;
mod link;
mod partition;
mod pd;

pub use braid::{parse_braid, BraidWord};
pub use cable::Cable;
pub use labeling::Labeling;
pub use link::{ArcId, Component, Crossing, LinkDiagram, Sign, Slot, Strand, Tangle11};
pub use partition::Partition;
pub use pd::{parse_pd, PdCode, PdCrossing};

pub(crate) use builder::{GaussBuilder, Port};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {reason}")]
    Syntax {
        line: usize,
        column: usize,
        reason: String,
    },

    #[error("generator {letter} out of range for {strands} strands (line {line}, column {column})")]
    GeneratorOutOfRange {
        letter: i64,
        strands: usize,
        line: usize,
        column: usize,
    },

    #[error("inconsistent connectivity: {0}")]
    Connectivity(String),

    #[error("inconsistent orientation: {0}")]
    Orientation(String),

    #[error("bad reference: {0}")]
    BadReference(String),

    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("bad labeling: {0}")]
    Labeling(String),
}
