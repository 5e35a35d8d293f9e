//! Colored evaluation by cabling.
//!
//! Every component labeled `λ` is replaced by `|λ|` blackboard-parallel
//! copies with the idempotent `p_λ` inserted once on the cable. Expanding the
//! idempotents multilinearly gives a combination of cabled diagrams, each
//! evaluated by the skein engine.
//!
//! Links given as braid closures can instead be evaluated through the Markov
//! trace on the cabled braid, with the idempotents placed at its bottom. Both
//! routes compute the same value; [`Strategy::Auto`] picks the trace for
//! large cables.

use std::collections::HashMap;
use std::sync::OnceLock;

use parking_lot::Mutex;
use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::{
    BraidWord, Cable, DiagramError, Labeling, LinkDiagram, Partition, Tangle11,
};
use crate::hecke::{self, HeckeElement, HeckeError, DEFAULT_BOUND, TRACE_MAX_STRANDS};
use crate::ring::{RingElem, RingError};
use crate::skein::{Evaluand, SkeinEngine, SkeinError};

/// Cables with more crossings than this go through the trace under
/// [`Strategy::Auto`] when a braid is known.
pub const AUTO_TRACE_MIN_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CablingError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),

    #[error(transparent)]
    Skein(#[from] SkeinError),

    #[error(transparent)]
    Diagram(#[from] DiagramError),

    #[error(transparent)]
    Ring(#[from] RingError),

    #[error("labeling covers {found} components, the link has {expected}")]
    LabelMismatch { expected: usize, found: usize },

    #[error("the trace route needs a braid presentation")]
    NoBraid,

    #[error("idempotent for component {component} lives in H_{rank}, expected H_{expected}")]
    IdempotentRank {
        component: usize,
        rank: usize,
        expected: usize,
    },

    #[error("the open component must carry a nonempty label")]
    EmptyOpenLabel,
}

impl CablingError {
    /// True when a label or strand count exceeded a configured bound.
    pub fn is_bound_exceeded(&self) -> bool {
        matches!(
            self,
            CablingError::Hecke(HeckeError::BoundExceeded { .. } | HeckeError::TooManyStrands { .. })
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Expand the idempotents and run the skein engine on every term.
    Skein,
    /// Markov trace of the cabled braid; needs a braid presentation.
    Trace,
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CablingConfig {
    /// Largest `|λ|` accepted.
    pub bound: usize,
    pub strategy: Strategy,
}

impl Default for CablingConfig {
    fn default() -> Self {
        CablingConfig {
            bound: DEFAULT_BOUND,
            strategy: Strategy::Auto,
        }
    }
}

/// A link with a partition on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLink {
    diagram: LinkDiagram,
    labeling: Labeling,
    braid: Option<BraidWord>,
}

impl ColoredLink {
    pub fn new(diagram: LinkDiagram, labeling: Labeling) -> Result<Self, CablingError> {
        let expected = diagram.components().len();
        if labeling.components() != expected {
            return Err(CablingError::LabelMismatch {
                expected,
                found: labeling.components(),
            });
        }
        Ok(ColoredLink {
            diagram,
            labeling,
            braid: None,
        })
    }

    /// The closure of `braid`, remembering the braid for the trace route.
    pub fn from_braid(braid: &BraidWord, labeling: Labeling) -> Result<Self, CablingError> {
        let mut cl = Self::new(braid.closure(), labeling)?;
        cl.braid = Some(braid.clone());
        Ok(cl)
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    pub fn with_labeling(&self, labeling: Labeling) -> Result<Self, CablingError> {
        let mut cl = Self::new(self.diagram.clone(), labeling)?;
        cl.braid = self.braid.clone();
        Ok(cl)
    }

    fn labels(&self) -> Vec<Partition> {
        self.labeling.labels().cloned().collect()
    }
}

/// The multilinear expansion of a cabled link: `Σ c_i · D_i`.
#[derive(Clone, Debug)]
pub struct CabledExpansion {
    terms: Vec<(RingElem, LinkDiagram)>,
}

impl CabledExpansion {
    /// Inserts `p_λ` for every component.
    pub fn new(cl: &ColoredLink, bound: usize) -> Result<Self, CablingError> {
        let ps = young_elements(&cl.labels(), bound)?;
        Self::with_idempotents(cl, &ps)
    }

    /// Inserts the given element on each component's cable.
    pub fn with_idempotents(cl: &ColoredLink, elements: &[HeckeElement]) -> Result<Self, CablingError> {
        let widths = check_elements(cl, elements)?;
        let cable = Cable::new(&cl.diagram, &widths)?;
        let terms = expand(elements)
            .into_iter()
            .map(|(c, inserts)| Ok((c, cable.assemble(&inserts, None)?.0)))
            .collect::<Result<_, CablingError>>()?;
        Ok(CabledExpansion { terms })
    }

    pub fn terms(&self) -> &[(RingElem, LinkDiagram)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, engine: &SkeinEngine) -> Result<RingElem, CablingError> {
        let values: Vec<Result<RingElem, SkeinError>> = self
            .terms
            .par_iter()
            .map(|(c, d)| {
                engine.evaluate_linear_combination(&[(c.clone(), Evaluand::Closed(d.clone()))])
            })
            .collect();
        let mut acc = RingElem::zero();
        for v in values {
            acc = &acc + &v?;
        }
        Ok(acc)
    }
}

fn young_elements(labels: &[Partition], bound: usize) -> Result<Vec<HeckeElement>, CablingError> {
    labels
        .iter()
        .map(|l| Ok(hecke::young_idempotent_with_bound(l, bound)?.element.clone()))
        .collect()
}

fn check_elements(cl: &ColoredLink, elements: &[HeckeElement]) -> Result<Vec<usize>, CablingError> {
    let widths = cl.labeling.widths();
    if elements.len() != widths.len() {
        return Err(CablingError::LabelMismatch {
            expected: widths.len(),
            found: elements.len(),
        });
    }
    for (c, (e, &w)) in elements.iter().zip(&widths).enumerate() {
        if e.rank() != w {
            return Err(CablingError::IdempotentRank {
                component: c,
                rank: e.rank(),
                expected: w,
            });
        }
    }
    Ok(widths)
}

/// All products of one braid term per component, with the product of their
/// coefficients.
fn expand(elements: &[HeckeElement]) -> Vec<(RingElem, Vec<Vec<i32>>)> {
    let mut out = vec![(RingElem::one(), Vec::new())];
    for e in elements {
        let words = e.expand_to_words();
        out = out
            .into_iter()
            .flat_map(|(c, inserts)| {
                words.iter().map(move |(d, w)| {
                    let mut next = inserts.clone();
                    next.push(w.clone());
                    (&c * d, next)
                })
            })
            .collect();
    }
    out
}

/// `Q(L, ℓ)` with the default configuration.
pub fn colored_value(cl: &ColoredLink) -> Result<RingElem, CablingError> {
    colored_value_with(cl, &CablingConfig::default())
}

pub fn colored_value_with(cl: &ColoredLink, config: &CablingConfig) -> Result<RingElem, CablingError> {
    let ps = young_elements(&cl.labels(), config.bound)?;
    colored_value_with_idempotents(cl, &ps, config.strategy)
}

/// The colored value with arbitrary idempotents (for instance conjugates of
/// `p_λ`) inserted on the cables.
pub fn colored_value_with_idempotents(
    cl: &ColoredLink,
    elements: &[HeckeElement],
    strategy: Strategy,
) -> Result<RingElem, CablingError> {
    let widths = check_elements(cl, elements)?;
    let use_trace = match strategy {
        Strategy::Skein => false,
        Strategy::Trace => true,
        Strategy::Auto => cl.braid.as_ref().is_some_and(|b| {
            let strand_widths = strand_widths(b, &widths);
            strand_widths.iter().sum::<usize>() <= TRACE_MAX_STRANDS
                && cable_crossings(b, &strand_widths) > AUTO_TRACE_MIN_CROSSINGS
        }),
    };
    if use_trace {
        let b = cl.braid.as_ref().ok_or(CablingError::NoBraid)?;
        trace_value(b, elements)
    } else {
        CabledExpansion::with_idempotents(cl, elements)?.evaluate(SkeinEngine::global())
    }
}

fn strand_widths(b: &BraidWord, widths: &[usize]) -> Vec<usize> {
    b.strand_components().iter().map(|&c| widths[c]).collect()
}

fn cable_crossings(b: &BraidWord, strand_widths: &[usize]) -> usize {
    let mut at: Vec<usize> = (0..b.strands()).collect();
    let mut n = 0;
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        n += strand_widths[at[i - 1]] * strand_widths[at[i]];
        at.swap(i - 1, i);
    }
    n
}

fn trace_value(b: &BraidWord, elements: &[HeckeElement]) -> Result<RingElem, CablingError> {
    let comps = b.strand_components();
    let widths: Vec<usize> = elements.iter().map(HeckeElement::rank).collect();
    let sw: Vec<usize> = comps.iter().map(|&c| widths[c]).collect();
    let total: usize = sw.iter().sum();
    if total > TRACE_MAX_STRANDS {
        return Err(HeckeError::TooManyStrands {
            strands: total,
            limit: TRACE_MAX_STRANDS,
        }
        .into());
    }
    let Some(cabled) = b.cable(&sw)? else {
        return Ok(RingElem::one());
    };
    let mut placed = vec![false; elements.len()];
    let mut x = HeckeElement::identity(0);
    for (&c, &w) in comps.iter().zip(&sw) {
        if std::mem::replace(&mut placed[c], true) {
            x = x.juxtapose(&HeckeElement::identity(w));
        } else {
            x = x.juxtapose(&elements[c]);
        }
    }
    Ok(hecke::closure_trace(&x, cabled.letters())?)
}

/// `tr p_λ`: the unknot labeled `λ`.
pub fn colored_trace(lambda: &Partition) -> Result<RingElem, CablingError> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, RingElem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().get(lambda) {
        return Ok(v.clone());
    }
    let cl = ColoredLink::new(LinkDiagram::unknot(), Labeling::from_labels(vec![lambda.clone()]))?;
    let v = colored_value(&cl)?;
    cache.lock().insert(lambda.clone(), v.clone());
    Ok(v)
}

/// A (1,1)-tangle with a label on every component, the open one included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTangle {
    tangle: Tangle11,
    labeling: Labeling,
}

impl ColoredTangle {
    pub fn new(tangle: Tangle11, labeling: Labeling) -> Result<Self, CablingError> {
        let expected = tangle.diagram().components().len();
        if labeling.components() != expected {
            return Err(CablingError::LabelMismatch {
                expected,
                found: labeling.components(),
            });
        }
        let open = labeling.get(tangle.open_component()).map_or(0, Partition::size);
        if open == 0 {
            return Err(CablingError::EmptyOpenLabel);
        }
        Ok(ColoredTangle { tangle, labeling })
    }

    pub fn tangle(&self) -> &Tangle11 {
        &self.tangle
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }
}

/// The scalar `α` with `Q(T, ℓ) = α · p_λ`.
///
/// The open cable is cut on copy 0 only, ahead of its idempotent, so the
/// skein engine sees a (1,1)-tangle whose value is `α` times the partial
/// trace of `p_λ` over the remaining copies, that is `α · tr p_λ / [t]`.
pub fn colored_tangle_value(ct: &ColoredTangle) -> Result<RingElem, CablingError> {
    colored_tangle_value_with(ct, DEFAULT_BOUND)
}

pub fn colored_tangle_value_with(ct: &ColoredTangle, bound: usize) -> Result<RingElem, CablingError> {
    let d = ct.tangle.diagram();
    let open = ct.tangle.open_component();
    let labels: Vec<Partition> = ct.labeling.labels().cloned().collect();
    let elements = young_elements(&labels, bound)?;
    let widths = ct.labeling.widths();
    let mut slots: Vec<_> = d.components().iter().map(|c| c.arcs[0]).collect();
    slots[open] = ct.tangle.cut();
    let cable = Cable::with_slots(d, &widths, &slots)?;
    let mut terms = Vec::new();
    for (c, inserts) in expand(&elements) {
        let (diagram, cut) = cable.assemble(&inserts, Some(open))?;
        let cut = cut.expect("the open component has a cut arc");
        terms.push((c, Evaluand::Tangle(Tangle11::new(diagram, cut)?)));
    }
    let beta = SkeinEngine::global().evaluate_linear_combination(&terms)?;
    let lambda = &labels[open];
    let tr = colored_trace(lambda)?;
    Ok((&beta * &RingElem::loop_value()).checked_div(&tr)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;
    use crate::hecke::conjugate_idempotent;
    use crate::skein::evaluate_closed;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn t() -> RingElem {
        RingElem::loop_value()
    }

    fn colored(s: &str, labels: &[&[u32]]) -> ColoredLink {
        let b = parse_braid(s).unwrap();
        ColoredLink::from_braid(&b, Labeling::from_labels(labels.iter().map(|p| part(p)).collect())).unwrap()
    }

    #[test]
    fn colored_unknots() {
        let two = RingElem::quantum_int(0, 2);
        let sym = &(&t() * &RingElem::quantum_int(1, 1)).checked_div(&two).unwrap();
        assert_eq!(&colored_trace(&part(&[2])).unwrap(), sym);
        let anti = (&t() * &RingElem::quantum_int(1, -1)).checked_div(&two).unwrap();
        assert_eq!(colored_trace(&part(&[1, 1])).unwrap(), anti);
        assert_eq!(colored_trace(&Partition::single_box()).unwrap(), t());
        assert_eq!(colored_trace(&Partition::empty()).unwrap(), RingElem::one());
    }

    #[test]
    fn box_labels_reduce_to_the_engine() {
        for s in ["braid 2: 1 1", "braid 3: 1 -2 1 -2", "braid 3: 1 1 -2 1 -2"] {
            let b = parse_braid(s).unwrap();
            let cl = ColoredLink::from_braid(&b, Labeling::all_box(b.closure_components())).unwrap();
            assert_eq!(colored_value(&cl).unwrap(), evaluate_closed(&b.closure()).unwrap());
        }
    }

    #[test]
    fn strategies_agree() {
        let skein = CablingConfig {
            strategy: Strategy::Skein,
            ..Default::default()
        };
        let trace = CablingConfig {
            strategy: Strategy::Trace,
            ..Default::default()
        };
        for (s, labels) in [
            ("braid 2: 1 1 1", &[&[2u32][..]][..]),
            ("braid 2: 1 1 1", &[&[1, 1][..]][..]),
            ("braid 2: 1 1", &[&[2][..], &[1, 1][..]][..]),
            ("braid 2: -1 -1", &[&[2, 1][..], &[1][..]][..]),
            ("braid 3: 1 -2 1 -2", &[&[2][..]][..]),
            ("braid 2: 1 1 1", &[&[2, 1][..]][..]),
        ] {
            let cl = colored(s, labels);
            let a = colored_value_with(&cl, &skein).unwrap();
            let b = colored_value_with(&cl, &trace).unwrap();
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn expansion_term_counts() {
        let cl = colored("braid 2: 1 1", &[&[2], &[2]]);
        let e = CabledExpansion::new(&cl, DEFAULT_BOUND).unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.terms().iter().all(|(_, d)| d.crossing_count() >= 8));
        let trefoil = colored("braid 2: 1 1 1", &[&[2]]);
        let e = CabledExpansion::new(&trefoil, DEFAULT_BOUND).unwrap();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn conjugated_idempotents_give_the_same_value() {
        let p21 = hecke::young_idempotent(&part(&[2, 1])).unwrap();
        let x = HeckeElement::from_word(3, &[1, -2]).unwrap();
        let q = conjugate_idempotent(&p21, &x).unwrap();
        let cl = colored("braid 2: 1 1", &[&[2, 1], &[1]]);
        for strategy in [Strategy::Skein, Strategy::Trace] {
            let a = colored_value_with_idempotents(
                &cl,
                &[p21.element.clone(), HeckeElement::identity(1)],
                strategy,
            )
            .unwrap();
            let b = colored_value_with_idempotents(&cl, &[q.element.clone(), HeckeElement::identity(1)], strategy)
                .unwrap();
            assert_eq!(a, b);
        }
        // unknot trace of the conjugate
        let u = ColoredLink::new(LinkDiagram::unknot(), Labeling::from_labels(vec![part(&[2, 1])])).unwrap();
        let v = colored_value_with_idempotents(&u, &[q.element], Strategy::Skein).unwrap();
        assert_eq!(v, colored_trace(&part(&[2, 1])).unwrap());
    }

    #[test]
    fn tangle_values() {
        let u = Tangle11::identity();
        for l in [&[1u32][..], &[2], &[1, 1]] {
            let ct = ColoredTangle::new(u.clone(), Labeling::from_labels(vec![part(l)])).unwrap();
            assert_eq!(colored_tangle_value(&ct).unwrap(), RingElem::one());
        }
        let curl = parse_braid("braid 2: 1").unwrap().closure().cut_component(0).unwrap();
        let ct = ColoredTangle::new(curl, Labeling::all_box(1)).unwrap();
        assert_eq!(colored_tangle_value(&ct).unwrap(), RingElem::monomial(1, 0, -1));
        let hopf = parse_braid("braid 2: 1 1").unwrap().closure();
        let ct = ColoredTangle::new(hopf.cut_component(0).unwrap(), Labeling::all_box(2)).unwrap();
        let z = RingElem::skein_coefficient();
        assert_eq!(colored_tangle_value(&ct).unwrap(), &(&z * &RingElem::monomial(1, 0, -1)) + &t());
        assert_eq!(
            ColoredTangle::new(Tangle11::identity(), Labeling::from_labels(vec![Partition::empty()])),
            Err(CablingError::EmptyOpenLabel)
        );
    }

    #[test]
    fn factorization_through_the_tangle() {
        let b = parse_braid("braid 2: 1 1 1").unwrap();
        let l = b.closure();
        let lab = Labeling::from_labels(vec![part(&[2])]);
        let closed = colored_value(&ColoredLink::new(l.clone(), lab.clone()).unwrap()).unwrap();
        let comp = &l.components()[0];
        for &arc in &comp.arcs {
            let ct = ColoredTangle::new(l.cut_open(0, arc).unwrap(), lab.clone()).unwrap();
            let alpha = colored_tangle_value(&ct).unwrap();
            assert_eq!(&alpha * &colored_trace(&part(&[2])).unwrap(), closed);
        }
    }

    #[test]
    fn label_errors() {
        let hopf = parse_braid("braid 2: 1 1").unwrap();
        assert_eq!(
            ColoredLink::from_braid(&hopf, Labeling::all_box(1)),
            Err(CablingError::LabelMismatch { expected: 2, found: 1 })
        );
        let cl = colored("braid 2: 1 1 1", &[&[3, 2]]);
        assert!(colored_value(&cl).unwrap_err().is_bound_exceeded());
        let pd = ColoredLink::new(hopf.closure(), Labeling::all_box(2)).unwrap();
        let trace = CablingConfig {
            strategy: Strategy::Trace,
            ..Default::default()
        };
        assert_eq!(colored_value_with(&pd, &trace), Err(CablingError::NoBraid));
    }
}
