//! Blackboard-parallel cabling.
//!
//! Copy `k` of a cabled strand is the `k`-th from the left when looking along
//! the strand's orientation, so a braid inserted at the slot acts on positions
//! in copy order. A crossing of an over-strand of width `v` with an
//! under-strand of width `w` becomes a `v x w` grid of crossings of the same
//! sign.

use super::{ArcId, DiagramError, GaussBuilder, LinkDiagram, Port, Sign, Slot, Strand};

#[derive(Clone, Debug)]
pub struct Cable {
    signs: Vec<Sign>,
    widths: Vec<usize>,
    slots: Vec<ArcId>,
    /// `paths[c][k]`: slots met by copy `k` of component `c`, starting at its
    /// insertion slot.
    paths: Vec<Vec<Vec<Slot>>>,
}

impl Cable {
    /// Cables with one slot per component, placed on the component's first arc.
    pub fn new(l: &LinkDiagram, widths: &[usize]) -> Result<Self, DiagramError> {
        let slots: Vec<ArcId> = l.components().iter().map(|c| c.arcs[0]).collect();
        Self::with_slots(l, widths, &slots)
    }

    pub fn with_slots(
        l: &LinkDiagram,
        widths: &[usize],
        slots: &[ArcId],
    ) -> Result<Self, DiagramError> {
        let comps = l.components();
        if widths.len() != comps.len() || slots.len() != comps.len() {
            return Err(DiagramError::BadReference(format!(
                "{} components but {} widths and {} slots",
                comps.len(),
                widths.len(),
                slots.len()
            )));
        }
        for (k, (comp, slot)) in comps.iter().zip(slots).enumerate() {
            if !comp.arcs.contains(slot) {
                return Err(DiagramError::BadReference(format!(
                    "arc {slot} is not on component {k}"
                )));
            }
        }
        let arc_comp = l.arc_components();
        let n = l.crossing_count();

        // grid crossing (c, i, j) for over copy i, under copy j
        let mut offset = Vec::with_capacity(n + 1);
        let mut signs = Vec::new();
        for (c, x) in l.crossings().iter().enumerate() {
            offset.push(signs.len());
            let wo = widths[arc_comp[2 * c]];
            let wu = widths[arc_comp[2 * c + 1]];
            signs.extend(std::iter::repeat(x.sign).take(wo * wu));
        }
        let under_width = |c: usize| widths[arc_comp[2 * c + 1]];
        let over_width = |c: usize| widths[arc_comp[2 * c]];
        let grid = |c: usize, i: usize, j: usize| offset[c] + i * under_width(c) + j;

        let mut paths = Vec::with_capacity(comps.len());
        for (k, slot) in slots.iter().enumerate() {
            let w = widths[k];
            let mut route = Vec::new();
            if slot.0 < 2 * n {
                let start = Slot::from_index(slot.0);
                let mut s = start;
                loop {
                    route.push(s);
                    s = l.successor(s);
                    if s == start {
                        break;
                    }
                }
            }
            let copies = (0..w)
                .map(|m| {
                    let mut visits = Vec::new();
                    for s in &route {
                        let c = s.crossing;
                        let positive = l.crossings()[c].sign == Sign::Positive;
                        match s.strand {
                            Strand::Over => {
                                let wu = under_width(c);
                                let js: Vec<usize> = if positive {
                                    (0..wu).collect()
                                } else {
                                    (0..wu).rev().collect()
                                };
                                visits.extend(
                                    js.into_iter().map(|j| Slot::new(grid(c, m, j), Strand::Over)),
                                );
                            }
                            Strand::Under => {
                                let wo = over_width(c);
                                let is: Vec<usize> = if positive {
                                    (0..wo).rev().collect()
                                } else {
                                    (0..wo).collect()
                                };
                                visits.extend(
                                    is.into_iter().map(|i| Slot::new(grid(c, i, m), Strand::Under)),
                                );
                            }
                        }
                    }
                    visits
                })
                .collect();
            paths.push(copies);
        }
        Ok(Cable {
            signs,
            widths: widths.to_vec(),
            slots: slots.to_vec(),
            paths,
        })
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    /// Arcs of the original diagram carrying the insertion slots.
    pub fn slots(&self) -> &[ArcId] {
        &self.slots
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    /// The cable with nothing inserted.
    pub fn diagram(&self) -> LinkDiagram {
        let empty = vec![Vec::new(); self.widths.len()];
        self.assemble(&empty, None)
            .expect("empty insertions are always valid")
            .0
    }

    /// Inserts braid letters at each component's slot. With `open = Some(c)`
    /// also returns the arc through the slot on copy 0 of component `c`,
    /// ahead of the inserted braid, for cutting open.
    pub fn assemble(
        &self,
        inserts: &[Vec<i32>],
        open: Option<usize>,
    ) -> Result<(LinkDiagram, Option<ArcId>), DiagramError> {
        if inserts.len() != self.widths.len() {
            return Err(DiagramError::BadReference(format!(
                "{} insertions for {} components",
                inserts.len(),
                self.widths.len()
            )));
        }
        if let Some(c) = open {
            if self.widths.get(c).map_or(true, |&w| w == 0) {
                return Err(DiagramError::BadReference(format!(
                    "component {c} cannot be cut: it does not exist or has width 0"
                )));
            }
        }
        let mut b = GaussBuilder::new();
        for &s in &self.signs {
            b.crossing(s);
        }
        let mut cut_node = None;
        for (c, letters) in inserts.iter().enumerate() {
            let w = self.widths[c];
            if let Some(&l) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= w) {
                return Err(DiagramError::GeneratorOutOfRange {
                    letter: l as i64,
                    strands: w,
                    line: 1,
                    column: 1,
                });
            }
            let inputs: Vec<usize> = (0..w).map(|_| b.node()).collect();
            if open == Some(c) {
                cut_node = Some(inputs[0]);
            }
            let mut ends: Vec<Port> = inputs.iter().map(|&n| Port::Node(n)).collect();
            b.braid(&mut ends, 0, letters);
            for (k, end) in ends.into_iter().enumerate() {
                let mut at = end;
                for s in &self.paths[c][k] {
                    b.connect(at, Port::Cross(s.crossing, s.strand));
                    at = Port::Cross(s.crossing, s.strand);
                }
                b.connect(at, Port::Node(inputs[k]));
            }
        }
        let (diagram, node_arcs) = b.build()?;
        Ok((diagram, cut_node.map(|n| node_arcs[n])))
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_braid;
    use super::*;

    #[test]
    fn cabled_unknot() {
        let c = Cable::new(&LinkDiagram::unknot(), &[2]).unwrap();
        let d = c.diagram();
        assert_eq!((d.crossing_count(), d.components().len()), (0, 2));
        let (d, cut) = c.assemble(&[vec![1]], Some(0)).unwrap();
        assert_eq!((d.crossing_count(), d.components().len()), (1, 1));
        assert!(cut.is_some());
    }

    #[test]
    fn cabled_trefoil_has_twelve_crossings() {
        let t = parse_braid("braid 2: 1 1 1").unwrap().closure();
        let c = Cable::new(&t, &[2]).unwrap();
        let d = c.diagram();
        assert_eq!(d.crossing_count(), 12);
        assert_eq!(d.writhe(), 12);
        assert_eq!(d.components().len(), 2);
    }

    #[test]
    fn width_one_is_the_identity() {
        for s in ["braid 3: 1 -2 1 -2", "braid 2: 1 1", "braid 3: 1 1 -2 1 -2"] {
            let l = parse_braid(s).unwrap().closure();
            let d = Cable::new(&l, &vec![1; l.components().len()]).unwrap().diagram();
            assert_eq!(d.crossing_count(), l.crossing_count());
            assert_eq!(d.writhe(), l.writhe());
            assert_eq!(d.components().len(), l.components().len());
        }
    }

    #[test]
    fn writhe_scales_quadratically() {
        let l = parse_braid("braid 3: 1 1 -2 1 -2").unwrap().closure();
        for w in 1..=3 {
            let d = Cable::new(&l, &[w, w]).unwrap().diagram();
            assert_eq!(d.writhe(), (w * w) as i64 * l.writhe());
        }
    }

    #[test]
    fn zero_width_drops_a_component() {
        let hopf = parse_braid("braid 2: 1 1").unwrap().closure();
        let d = Cable::new(&hopf, &[0, 2]).unwrap().diagram();
        assert_eq!((d.crossing_count(), d.components().len()), (0, 2));
    }
}
