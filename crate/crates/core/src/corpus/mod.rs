//! Bundled test corpus and independent oracles.
//!
//! * [`brute_force_value`]: exhaustive skein branching with none of the
//!   engine's simplifications or memoization.
//! * [`jones_oracle`]: Kauffman bracket state sum, mapped into the engine's
//!   Jones convention.
//! * [`alexander_oracle`]: reduced Burau determinant, mapped into the
//!   engine's symmetrized Alexander form.
//!
//! Every expected value in the corpus names the oracle or formula it came
//! from in its `source` field.

mod bracket;
mod brute;
mod burau;

pub use bracket::{
    bracket_jones, framed_jones_oracle, jones_in_t, jones_oracle, kauffman_bracket, q_to_a,
    BRACKET_MAX_CROSSINGS,
};
pub use brute::{brute_force_value, BRUTE_FORCE_MAX_CROSSINGS};
pub use burau::{alexander_oracle, burau_alexander, burau_matrix};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{parse_braid, parse_pd, Labeling};
use crate::invariants::{self, Link};
use crate::ring::RingElem;
use crate::skein;
use crate::Error;

/// The corpus shipped with the crate, one JSON object per line.
pub const BUNDLED_CORPUS: &str = include_str!("../../corpus/corpus.jsonl");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputFormat {
    Braid,
    Pd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedKind {
    /// Blackboard-framed generic value.
    Homfly,
    /// Writhe-normalized `d = 2` value, unknot `q + q^-1`.
    Jones,
    /// Symmetrized unit-normal reduced value at `d = 0`.
    Alexander,
    /// Blackboard-framed generic colored value; needs `labels`.
    Colored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedValue {
    pub invariant: ExpectedKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Labeling>,
    pub value: RingElem,
    /// The oracle or formula the value was obtained from.
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub format: InputFormat,
    pub input: String,
    pub components: usize,
    pub writhe: i64,
    #[serde(default)]
    pub expected: Vec<ExpectedValue>,
}

impl CorpusEntry {
    pub fn link(&self) -> Result<Link, Error> {
        Ok(match self.format {
            InputFormat::Braid => parse_braid(&self.input)?.into(),
            InputFormat::Pd => parse_pd(&self.input)?.into(),
        })
    }
}

/// Parses JSON lines, skipping blank lines.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| {
                crate::diagram::DiagramError::Syntax {
                    line: i + 1,
                    column: e.column(),
                    reason: e.to_string(),
                }
                .into()
            })
        })
        .collect()
}

pub fn bundled_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED_CORPUS).expect("the bundled corpus parses")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.checks.iter().all(|c| c.passed))
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().flat_map(|e| &e.checks).filter(|c| !c.passed).count()
    }

    pub fn checks(&self) -> usize {
        self.entries.iter().map(|e| e.checks.len()).sum()
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            for c in &e.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                write!(f, "{tag} {} {}", e.name, c.check)?;
                if let Some(d) = &c.detail {
                    write!(f, ": {d}")?;
                }
                writeln!(f)?;
            }
        }
        write!(f, "{} checks, {} failed", self.checks(), self.failures())
    }
}

fn outcome(check: impl Into<String>, result: Result<(RingElem, RingElem), Error>) -> CheckOutcome {
    let check = check.into();
    match result {
        Ok((got, want)) if got == want => CheckOutcome {
            check,
            passed: true,
            detail: None,
        },
        Ok((got, want)) => CheckOutcome {
            check,
            passed: false,
            detail: Some(format!("got {got}, expected {want}")),
        },
        Err(e) => CheckOutcome {
            check,
            passed: false,
            detail: Some(e.to_string()),
        },
    }
}

fn run_entry(entry: &CorpusEntry) -> EntryReport {
    let mut checks = Vec::new();
    let link = match entry.link() {
        Ok(l) => l,
        Err(e) => {
            checks.push(CheckOutcome {
                check: "parse".into(),
                passed: false,
                detail: Some(e.to_string()),
            });
            return EntryReport {
                name: entry.name.clone(),
                checks,
            };
        }
    };
    let shape = (link.components(), link.writhe());
    checks.push(CheckOutcome {
        check: "shape".into(),
        passed: shape == (entry.components, entry.writhe),
        detail: (shape != (entry.components, entry.writhe)).then(|| {
            format!(
                "{} components, writhe {}; expected {}, {}",
                shape.0, shape.1, entry.components, entry.writhe
            )
        }),
    });
    if link.diagram().crossing_count() <= BRUTE_FORCE_MAX_CROSSINGS {
        checks.push(outcome(
            "engine = brute force",
            skein::evaluate_closed(link.diagram())
                .map_err(Error::from)
                .and_then(|v| Ok((v, brute_force_value(link.diagram())?))),
        ));
    }
    for exp in &entry.expected {
        let got = match exp.invariant {
            ExpectedKind::Homfly => invariants::homfly(&link),
            ExpectedKind::Jones => invariants::jones(&link),
            ExpectedKind::Alexander => invariants::alexander(&link),
            ExpectedKind::Colored => match &exp.labels {
                Some(l) => invariants::colored_homfly(&link, l),
                None => Err(crate::cabling::CablingError::LabelMismatch {
                    expected: entry.components,
                    found: 0,
                }
                .into()),
            },
        };
        let name = match &exp.labels {
            Some(l) => format!("{:?} {l} ({})", exp.invariant, exp.source),
            None => format!("{:?} ({})", exp.invariant, exp.source),
        };
        checks.push(outcome(name, got.map(|r| (r.value, exp.value.clone()))));
    }
    EntryReport {
        name: entry.name.clone(),
        checks,
    }
}

/// Checks every entry against the brute-force resolver and its expected
/// values. Entries are evaluated in parallel.
pub fn run_corpus(entries: &[CorpusEntry]) -> CorpusReport {
    use rayon::prelude::*;
    CorpusReport {
        entries: entries.par_iter().map(run_entry).collect(),
    }
}
