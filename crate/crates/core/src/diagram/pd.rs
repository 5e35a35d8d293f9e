//! Planar diagram codes in JSON.
//!
//! Each crossing lists its four arc labels counterclockwise, starting at the
//! incoming under-arc: `[in_u, out_o, out_u, in_o]` for a positive crossing and
//! `[in_u, in_o, out_u, out_o]` for a negative one. The optional `orient`
//! object maps an arc label to `[tail, head]` crossing indices and is checked
//! against the orientation implied by the signs. `loops` counts crossing-free
//! components.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{Crossing, DiagramError, LinkDiagram, Sign, Slot, Strand};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdCrossing {
    pub arcs: [i64; 4],
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdCode {
    pub crossings: Vec<PdCrossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orient: Option<BTreeMap<String, [usize; 2]>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub loops: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

/// Positions of (in_under, in_over, out_under, out_over).
fn roles(sign: Sign) -> [usize; 4] {
    match sign {
        Sign::Positive => [0, 3, 2, 1],
        Sign::Negative => [0, 1, 2, 3],
    }
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let code: PdCode = serde_json::from_str(text).map_err(|e| DiagramError::Syntax {
        line: e.line(),
        column: e.column(),
        reason: e.to_string(),
    })?;
    code.to_diagram()
}

impl PdCode {
    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        let mut signs = Vec::with_capacity(self.crossings.len());
        let mut heads: FxHashMap<i64, Slot> = FxHashMap::default();
        let mut tails: FxHashMap<i64, (usize, Strand)> = FxHashMap::default();
        for (c, x) in self.crossings.iter().enumerate() {
            let sign = Sign::from_value(x.sign).ok_or_else(|| DiagramError::Syntax {
                line: 1,
                column: 1,
                reason: format!("crossing {c}: sign must be 1 or -1, found {}", x.sign),
            })?;
            signs.push(sign);
            let [iu, io, ou, oo] = roles(sign).map(|k| x.arcs[k]);
            for (label, strand) in [(iu, Strand::Under), (io, Strand::Over)] {
                if heads.insert(label, Slot::new(c, strand)).is_some() {
                    return Err(orientation_clash(label, "enters", c));
                }
            }
            for (label, strand) in [(ou, Strand::Under), (oo, Strand::Over)] {
                if tails.insert(label, (c, strand)).is_some() {
                    return Err(orientation_clash(label, "leaves", c));
                }
            }
        }
        for label in heads.keys() {
            if !tails.contains_key(label) {
                return Err(dangling(*label, &heads, &tails));
            }
        }
        for label in tails.keys() {
            if !heads.contains_key(label) {
                return Err(dangling(*label, &heads, &tails));
            }
        }
        if let Some(orient) = &self.orient {
            for (key, &[tail, head]) in orient {
                let label: i64 = key.parse().map_err(|_| DiagramError::Syntax {
                    line: 1,
                    column: 1,
                    reason: format!("orient key {key:?} is not an arc label"),
                })?;
                let (Some(h), Some(t)) = (heads.get(&label), tails.get(&label)) else {
                    return Err(DiagramError::BadReference(format!(
                        "orient names unknown arc {label}"
                    )));
                };
                if (t.0, h.crossing) != (tail, head) {
                    return Err(DiagramError::Orientation(format!(
                        "arc {label} runs from crossing {} to {}, but orient says {tail} to {head}",
                        t.0, h.crossing
                    )));
                }
            }
        }
        let mut crossings: Vec<Crossing> = signs
            .iter()
            .map(|&sign| Crossing {
                sign,
                next: [Slot::new(0, Strand::Over); 2],
            })
            .collect();
        for (label, &(c, strand)) in &tails {
            crossings[c].next[strand as usize] = heads[label];
        }
        LinkDiagram::new(crossings, self.loops)
    }

    /// Labels are the diagram's arc ids; `orient` is always written.
    pub fn from_diagram(l: &LinkDiagram) -> PdCode {
        let mut orient = BTreeMap::new();
        let crossings = l
            .crossings()
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let iu = Slot::new(c, Strand::Under).index() as i64;
                let io = Slot::new(c, Strand::Over).index() as i64;
                let ou = x.next(Strand::Under);
                let oo = x.next(Strand::Over);
                orient.insert(ou.index().to_string(), [c, ou.crossing]);
                orient.insert(oo.index().to_string(), [c, oo.crossing]);
                let vals = [iu, io, ou.index() as i64, oo.index() as i64];
                let mut arcs = [0; 4];
                for (k, pos) in roles(x.sign).into_iter().enumerate() {
                    arcs[pos] = vals[k];
                }
                PdCrossing {
                    arcs,
                    sign: x.sign.value() as i64,
                }
            })
            .collect();
        PdCode {
            crossings,
            orient: Some(orient),
            loops: l.free_loops(),
        }
    }
}

impl LinkDiagram {
    pub fn to_pd(&self) -> PdCode {
        PdCode::from_diagram(self)
    }

    pub fn to_pd_json(&self) -> String {
        serde_json::to_string(&self.to_pd()).expect("PD codes always serialize")
    }
}

fn orientation_clash(label: i64, verb: &str, c: usize) -> DiagramError {
    DiagramError::Orientation(format!(
        "arc {label} {verb} a crossing twice (second time at crossing {c})"
    ))
}

fn dangling(
    label: i64,
    heads: &FxHashMap<i64, Slot>,
    tails: &FxHashMap<i64, (usize, Strand)>,
) -> DiagramError {
    let at = heads
        .get(&label)
        .map(|s| s.crossing)
        .or_else(|| tails.get(&label).map(|t| t.0))
        .unwrap_or(0);
    DiagramError::Connectivity(format!(
        "arc {label} at crossing {at} has only one endpoint"
    ))
}
