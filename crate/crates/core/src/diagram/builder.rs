//! Assembles Gauss codes from crossings joined by pass-through nodes.

use rustc_hash::FxHashMap;

use super::{ArcId, Crossing, DiagramError, LinkDiagram, Sign, Slot, Strand};

/// An attachment point. Connections always run from the outgoing side of one
/// port to the incoming side of another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Port {
    Cross(usize, Strand),
    Node(usize),
}

#[derive(Default)]
pub(crate) struct GaussBuilder {
    signs: Vec<Sign>,
    nodes: usize,
    edges: FxHashMap<Port, Port>,
}

impl GaussBuilder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn crossing(&mut self, sign: Sign) -> usize {
        self.signs.push(sign);
        self.signs.len() - 1
    }

    pub(crate) fn node(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }

    pub(crate) fn connect(&mut self, from: Port, to: Port) {
        let old = self.edges.insert(from, to);
        debug_assert!(old.is_none(), "port {from:?} connected twice");
    }

    /// Returns the diagram and, for every node, the arc it lies on.
    pub(crate) fn build(self) -> Result<(LinkDiagram, Vec<ArcId>), DiagramError> {
        let n = self.signs.len();
        let mut node_arc: Vec<Option<ArcId>> = vec![None; self.nodes];
        let mut crossings = Vec::with_capacity(n);
        let missing = |p: Port| DiagramError::Connectivity(format!("port {p:?} is not connected"));
        for (c, &sign) in self.signs.iter().enumerate() {
            let mut next = [Slot::new(0, Strand::Over); 2];
            for strand in [Strand::Over, Strand::Under] {
                let start = Port::Cross(c, strand);
                let mut p = *self.edges.get(&start).ok_or_else(|| missing(start))?;
                let mut passed = Vec::new();
                while let Port::Node(k) = p {
                    if passed.len() > self.nodes {
                        return Err(DiagramError::Connectivity("node cycle".into()));
                    }
                    passed.push(k);
                    p = *self.edges.get(&p).ok_or_else(|| missing(p))?;
                }
                let Port::Cross(c2, s2) = p else { unreachable!() };
                let slot = Slot::new(c2, s2);
                for k in passed {
                    if node_arc[k].replace(slot.arc()).is_some() {
                        return Err(DiagramError::Connectivity(format!("node {k} reached twice")));
                    }
                }
                next[strand as usize] = slot;
            }
            crossings.push(Crossing { sign, next });
        }
        let mut loops = 0;
        for k in 0..self.nodes {
            if node_arc[k].is_some() {
                continue;
            }
            let id = ArcId(2 * n + loops);
            loops += 1;
            let mut p = k;
            loop {
                if node_arc[p].replace(id).is_some() {
                    return Err(DiagramError::Connectivity(format!("node {p} reached twice")));
                }
                match self.edges.get(&Port::Node(p)) {
                    Some(Port::Node(q)) if *q == k => break,
                    Some(Port::Node(q)) => p = *q,
                    _ => return Err(missing(Port::Node(p))),
                }
            }
        }
        let diagram = LinkDiagram::new(crossings, loops)?;
        Ok((diagram, node_arc.into_iter().map(Option::unwrap).collect()))
    }
}
