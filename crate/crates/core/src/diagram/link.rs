use std::fmt;

use serde::{Deserialize, Serialize};

use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strand {
    Over = 0,
    Under = 1,
}

impl Strand {
    pub fn other(self) -> Strand {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }
}

/// Positive: the over-strand runs from lower left to upper right when both
/// strands point up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// An incoming side of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub strand: Strand,
}

impl Slot {
    pub fn new(crossing: usize, strand: Strand) -> Self {
        Slot { crossing, strand }
    }

    pub fn index(self) -> usize {
        2 * self.crossing + self.strand as usize
    }

    pub fn from_index(i: usize) -> Self {
        let strand = if i % 2 == 0 { Strand::Over } else { Strand::Under };
        Slot::new(i / 2, strand)
    }

    /// The arc running into this slot.
    pub fn arc(self) -> ArcId {
        ArcId(self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub usize);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `next[s]` is the slot reached by leaving this crossing along strand `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub next: [Slot; 2],
}

impl Crossing {
    pub fn next(&self, s: Strand) -> Slot {
        self.next[s as usize]
    }
}

/// One component: its arcs in traversal order, starting at the smallest id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub arcs: Vec<ArcId>,
}

impl Component {
    pub fn is_free_loop(&self, diagram: &LinkDiagram) -> bool {
        self.arcs.len() == 1 && self.arcs[0].0 >= 2 * diagram.crossing_count()
    }
}

/// An oriented link diagram with blackboard framing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl LinkDiagram {
    /// Checks that following strands is a bijection on incoming slots.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let n = crossings.len();
        let mut hit = vec![false; 2 * n];
        for (c, x) in crossings.iter().enumerate() {
            for s in x.next {
                if s.crossing >= n {
                    return Err(DiagramError::Connectivity(format!(
                        "crossing {c} points at missing crossing {}",
                        s.crossing
                    )));
                }
                if std::mem::replace(&mut hit[s.index()], true) {
                    return Err(DiagramError::Connectivity(format!(
                        "slot {:?} of crossing {} is entered twice",
                        s.strand, s.crossing
                    )));
                }
            }
        }
        Ok(LinkDiagram {
            crossings,
            free_loops,
        })
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(components: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: components,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len() + self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value() as i64).sum()
    }

    /// The slot reached after passing through `s`.
    pub fn successor(&self, s: Slot) -> Slot {
        self.crossings[s.crossing].next(s.strand)
    }

    /// Components ordered by their smallest arc id; free loops come last.
    pub fn components(&self) -> Vec<Component> {
        let n = self.crossings.len();
        let mut seen = vec![false; 2 * n];
        let mut out = Vec::new();
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            let mut arcs = Vec::new();
            let mut s = Slot::from_index(start);
            while !seen[s.index()] {
                seen[s.index()] = true;
                arcs.push(s.arc());
                s = self.successor(s);
            }
            out.push(Component { arcs });
        }
        for k in 0..self.free_loops {
            out.push(Component {
                arcs: vec![ArcId(2 * n + k)],
            });
        }
        out
    }

    /// Component index of every arc.
    pub fn arc_components(&self) -> Vec<usize> {
        let mut of = vec![0; self.arc_count()];
        for (k, comp) in self.components().iter().enumerate() {
            for a in &comp.arcs {
                of[a.0] = k;
            }
        }
        of
    }

    /// Component of the over and under strand at each crossing.
    pub fn crossing_components(&self) -> Vec<[usize; 2]> {
        let of = self.arc_components();
        (0..self.crossings.len())
            .map(|c| [of[2 * c], of[2 * c + 1]])
            .collect()
    }

    /// Sum of crossing signs between distinct components `i` and `j`, halved.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        let total: i64 = self
            .crossing_components()
            .iter()
            .zip(&self.crossings)
            .filter(|([o, u], _)| (*o == i && *u == j) || (*o == j && *u == i))
            .map(|(_, x)| x.sign.value() as i64)
            .sum();
        total / 2
    }

    /// Crossing-switched diagram.
    pub fn mirror(&self) -> LinkDiagram {
        // Switching a crossing exchanges over and under: the slot names swap too.
        let swap = |s: Slot| Slot::new(s.crossing, s.strand.other());
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                sign: x.sign.flip(),
                next: [swap(x.next[1]), swap(x.next[0])],
            })
            .collect();
        LinkDiagram {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Disjoint union; the crossings of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.crossings.len();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing {
            sign: x.sign,
            next: x.next.map(|s| Slot::new(s.crossing + off, s.strand)),
        }));
        LinkDiagram {
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// Cuts `component` open at `arc`.
    pub fn cut_open(&self, component: usize, arc: ArcId) -> Result<Tangle11, DiagramError> {
        let comps = self.components();
        let comp = comps.get(component).ok_or_else(|| {
            DiagramError::BadReference(format!(
                "component {component} does not exist ({} components)",
                comps.len()
            ))
        })?;
        if !comp.arcs.contains(&arc) {
            return Err(DiagramError::BadReference(format!(
                "arc {arc} is not on component {component}"
            )));
        }
        Ok(Tangle11 {
            diagram: self.clone(),
            cut: arc,
        })
    }

    /// Cuts `component` open at its first arc.
    pub fn cut_component(&self, component: usize) -> Result<Tangle11, DiagramError> {
        let comps = self.components();
        let arc = comps
            .get(component)
            .ok_or_else(|| {
                DiagramError::BadReference(format!(
                    "component {component} does not exist ({} components)",
                    comps.len()
                ))
            })?
            .arcs[0];
        self.cut_open(component, arc)
    }
}

/// A (1,1)-tangle: a closed diagram with one arc severed. The inbound
/// endpoint is the tail of the cut arc, the outbound endpoint its head.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tangle11 {
    diagram: LinkDiagram,
    cut: ArcId,
}

impl Tangle11 {
    pub fn new(diagram: LinkDiagram, cut: ArcId) -> Result<Self, DiagramError> {
        if cut.0 >= diagram.arc_count() {
            return Err(DiagramError::BadReference(format!(
                "arc {cut} does not exist ({} arcs)",
                diagram.arc_count()
            )));
        }
        Ok(Tangle11 { diagram, cut })
    }

    /// The straight strand.
    pub fn identity() -> Self {
        Tangle11 {
            diagram: LinkDiagram::unknot(),
            cut: ArcId(0),
        }
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn cut(&self) -> ArcId {
        self.cut
    }

    pub fn open_component(&self) -> usize {
        self.diagram.arc_components()[self.cut.0]
    }

    pub fn writhe(&self) -> i64 {
        self.diagram.writhe()
    }

    /// Re-joins the endpoints.
    pub fn close(&self) -> LinkDiagram {
        self.diagram.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_braid;
    use super::*;

    #[test]
    fn cut_and_close() {
        let t = LinkDiagram::unknot().cut_open(0, ArcId(0)).unwrap();
        assert_eq!(t, Tangle11::identity());
        assert_eq!(t.diagram().crossing_count(), 0);

        let l = parse_braid("braid 3: 1 -2 1 -2").unwrap().closure();
        let t = l.cut_component(0).unwrap();
        let back = t.close();
        assert_eq!(back.crossing_count(), l.crossing_count());
        assert_eq!(back.writhe(), l.writhe());
        assert_eq!(back.components().len(), l.components().len());
    }

    #[test]
    fn cut_with_bad_ids() {
        let hopf = parse_braid("braid 2: 1 1").unwrap().closure();
        let comps = hopf.components();
        assert!(hopf.cut_open(2, ArcId(0)).is_err());
        let foreign = comps[1].arcs[0];
        assert!(hopf.cut_open(0, foreign).is_err());
        assert!(hopf.cut_open(1, foreign).is_ok());
    }

    #[test]
    fn linking_and_mirror() {
        let hopf = parse_braid("braid 2: 1 1").unwrap().closure();
        assert_eq!(hopf.linking_number(0, 1), 1);
        let m = hopf.mirror();
        assert_eq!(m.writhe(), -2);
        assert_eq!(m.linking_number(0, 1), -1);
        assert_eq!(m.mirror(), hopf);
        let neg = parse_braid("braid 2: -1 -1").unwrap().closure();
        assert_eq!(neg.linking_number(0, 1), -1);
    }

    #[test]
    fn rejects_double_entry() {
        let x = Crossing {
            sign: Sign::Positive,
            next: [Slot::new(0, Strand::Over); 2],
        };
        assert!(LinkDiagram::new(vec![x], 0).is_err());
    }
}
