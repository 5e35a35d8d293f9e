use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DiagramError, Partition};

/// A partition for every component. Components left out of the JSON form
/// default to the one-box partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: BTreeMap<usize, Partition>,
}

impl Labeling {
    pub fn all_box(components: usize) -> Self {
        Self::uniform(components, Partition::single_box())
    }

    pub fn uniform(components: usize, lambda: Partition) -> Self {
        Labeling {
            labels: (0..components).map(|c| (c, lambda.clone())).collect(),
        }
    }

    pub fn from_labels(labels: Vec<Partition>) -> Self {
        Labeling {
            labels: labels.into_iter().enumerate().collect(),
        }
    }

    /// Parses `{"<component>": [parts], ...}` for a link with `components`
    /// components.
    pub fn from_json(text: &str, components: usize) -> Result<Self, DiagramError> {
        let raw: BTreeMap<String, Vec<u32>> = serde_json::from_str(text).map_err(|e| {
            DiagramError::Syntax {
                line: e.line(),
                column: e.column(),
                reason: e.to_string(),
            }
        })?;
        let mut out = Self::all_box(components);
        for (key, parts) in raw {
            let c: usize = key
                .trim()
                .parse()
                .map_err(|_| DiagramError::Labeling(format!("{key:?} is not a component index")))?;
            if c >= components {
                return Err(DiagramError::Labeling(format!(
                    "component {c} does not exist ({components} components)"
                )));
            }
            out.labels.insert(c, Partition::new(parts)?);
        }
        Ok(out)
    }

    pub fn components(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, component: usize) -> Option<&Partition> {
        self.labels.get(&component)
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.labels.values()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.labels.values().map(Partition::size).collect()
    }

    pub fn is_all_box(&self) -> bool {
        self.labels.values().all(Partition::is_box)
    }

    pub fn transpose(&self) -> Labeling {
        Labeling {
            labels: self
                .labels
                .iter()
                .map(|(&c, p)| (c, p.transpose()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labelings always serialize")
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (c, p)) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}: {p}")?;
        }
        f.write_str("}")
    }
}
