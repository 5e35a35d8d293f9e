//! Named invariants assembled from the skein engine and cabling.
//!
//! Framed values use the blackboard framing: a positive curl is `a^-1`.
//! Writhe normalization multiplies by `a^w`. Generic results are rational
//! functions in `q` and `a`; `d`-results substitute `a = q^d`.
//!
//! Realized conventions, with `P` the writhe-normalized generic value:
//!
//! * Jones: `jones(L) / [2]` is `V_L` under `q = -A^-2`, where `V_L(A)` is
//!   the writhe-normalized Kauffman bracket with `<O> = 1`; equivalently
//!   `q = -t^{1/2}`.
//! * Alexander: `P / [t]` at `a = 1` is the Conway polynomial in
//!   `z = q^-1 - q`, so `q = t^{-1/2}` gives `Δ(t)`.

use log::info;
use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use crate::cabling::{self, CablingConfig, ColoredLink, ColoredTangle};
use crate::diagram::{ArcId, BraidWord, Labeling, LinkDiagram};
use crate::ring::{BetaExpansion, LaurentPoly, RingElem, RingError};
use crate::skein;
use crate::Error;

/// A link diagram, with the braid it closes when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    diagram: LinkDiagram,
    braid: Option<BraidWord>,
}

impl Link {
    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    pub fn components(&self) -> usize {
        self.diagram.components().len()
    }

    pub fn writhe(&self) -> i64 {
        self.diagram.writhe()
    }

    fn colored(&self, labeling: &Labeling) -> Result<ColoredLink, Error> {
        Ok(match &self.braid {
            Some(b) => ColoredLink::from_braid(b, labeling.clone())?,
            None => ColoredLink::new(self.diagram.clone(), labeling.clone())?,
        })
    }

    fn check_component(&self, component: usize) -> Result<(), Error> {
        let components = self.components();
        if component >= components {
            return Err(Error::NoComponent {
                component,
                components,
            });
        }
        Ok(())
    }
}

impl From<LinkDiagram> for Link {
    fn from(diagram: LinkDiagram) -> Self {
        Link { diagram, braid: None }
    }
}

impl From<BraidWord> for Link {
    fn from(b: BraidWord) -> Self {
        Link {
            diagram: b.closure(),
            braid: Some(b),
        }
    }
}

impl From<&BraidWord> for Link {
    fn from(b: &BraidWord) -> Self {
        b.clone().into()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Homfly,
    DPoly(i32),
    Jones,
    Alexander,
    /// Colored HOMFLY-PT, specialized at `a = q^d` when `Some(d)`.
    Colored(Option<i32>),
    /// Reduced colored invariant, specialized at `a = q^d` when `Some(d)`.
    Reduced(Option<i32>),
}

impl InvariantKind {
    /// The `d` the value is specialized at, if any.
    pub fn specialization(&self) -> Option<i32> {
        match *self {
            InvariantKind::Homfly | InvariantKind::Colored(None) | InvariantKind::Reduced(None) => None,
            InvariantKind::DPoly(d) | InvariantKind::Colored(Some(d)) | InvariantKind::Reduced(Some(d)) => Some(d),
            InvariantKind::Jones => Some(2),
            InvariantKind::Alexander => Some(0),
        }
    }

    pub fn is_generic(&self) -> bool {
        self.specialization().is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Framing {
    Blackboard,
    WritheNormalized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: RingElem,
    pub kind: InvariantKind,
    pub labeling: Option<Labeling>,
    pub framing: Framing,
    pub cut: Option<usize>,
}

impl InvariantResult {
    fn new(value: RingElem, kind: InvariantKind) -> Self {
        InvariantResult {
            value,
            kind,
            labeling: None,
            framing: Framing::Blackboard,
            cut: None,
        }
    }

    /// The `[t]`-power expansion of a generic value.
    pub fn beta_expansion(&self) -> Option<Result<BetaExpansion, RingError>> {
        self.kind.is_generic().then(|| BetaExpansion::of(&self.value))
    }
}

fn check_laurent(value: &RingElem, what: &str) -> Result<(), Error> {
    if value.is_laurent() && value.is_q_only() {
        Ok(())
    } else {
        Err(RingError::NotInSubring(format!("{what} is not a Laurent polynomial in q: {value}")).into())
    }
}

/// Framed HOMFLY-PT value; unknot `[t]`.
pub fn homfly(l: &Link) -> Result<InvariantResult, Error> {
    let value = skein::evaluate_closed(&l.diagram)?;
    BetaExpansion::of(&value)?;
    Ok(InvariantResult::new(value, InvariantKind::Homfly))
}

/// `homfly` at `a = q^d`.
pub fn d_polynomial(l: &Link, d: i32) -> Result<InvariantResult, Error> {
    let value = homfly(l)?.value.specialize_d(d)?;
    check_laurent(&value, "d-polynomial")?;
    Ok(InvariantResult::new(value, InvariantKind::DPoly(d)))
}

/// Writhe-normalized `d = 2` polynomial; unknot `q + q^-1`.
pub fn jones(l: &Link) -> Result<InvariantResult, Error> {
    let r = framing_normalize(&d_polynomial(l, 2)?, l.writhe())?;
    Ok(InvariantResult {
        kind: InvariantKind::Jones,
        ..r
    })
}

pub fn colored_homfly(l: &Link, labeling: &Labeling) -> Result<InvariantResult, Error> {
    colored_homfly_with(l, labeling, &CablingConfig::default())
}

pub fn colored_homfly_with(
    l: &Link,
    labeling: &Labeling,
    config: &CablingConfig,
) -> Result<InvariantResult, Error> {
    let value = cabling::colored_value_with(&l.colored(labeling)?, config)?;
    if let Err(e) = BetaExpansion::of(&value) {
        info!("colored value for {labeling} has no [t]-expansion: {e}");
    }
    Ok(InvariantResult {
        labeling: Some(labeling.clone()),
        ..InvariantResult::new(value, InvariantKind::Colored(None))
    })
}

pub fn colored_d(l: &Link, labeling: &Labeling, d: i32) -> Result<InvariantResult, Error> {
    let r = colored_homfly(l, labeling)?;
    let value = r.value.specialize_d(d)?;
    if !(value.is_laurent() && value.is_q_only()) {
        info!("colored d-polynomial for {labeling} at d = {d} is not Laurent: {value}");
    }
    Ok(InvariantResult {
        value,
        kind: InvariantKind::Colored(Some(d)),
        ..r
    })
}

/// `colored_homfly / tr p_λ` with `λ` the label of `component`, then
/// specialized at `a = q^d` when `d` is given.
pub fn reduced(
    l: &Link,
    labeling: &Labeling,
    component: usize,
    d: Option<i32>,
) -> Result<InvariantResult, Error> {
    l.check_component(component)?;
    let lambda = labeling.get(component).cloned().unwrap_or_default();
    if lambda.is_empty() {
        return Err(cabling::CablingError::EmptyOpenLabel.into());
    }
    let closed = colored_homfly(l, labeling)?;
    let generic = closed.value.checked_div(&cabling::colored_trace(&lambda)?)?;
    let value = match d {
        Some(d) => generic.specialize_d(d)?,
        None => generic,
    };
    Ok(InvariantResult {
        value,
        kind: InvariantKind::Reduced(d),
        cut: Some(component),
        ..closed
    })
}

/// The reduced value computed directly on the (1,1)-tangle obtained by
/// cutting `component` at `arc` (its first arc when `None`).
pub fn reduced_by_cutting(
    l: &Link,
    labeling: &Labeling,
    component: usize,
    arc: Option<ArcId>,
) -> Result<InvariantResult, Error> {
    l.check_component(component)?;
    let arc = arc.unwrap_or_else(|| l.diagram.components()[component].arcs[0]);
    let tangle = l.diagram.cut_open(component, arc)?;
    let value = cabling::colored_tangle_value(&ColoredTangle::new(tangle, labeling.clone())?)?;
    Ok(InvariantResult {
        labeling: Some(labeling.clone()),
        cut: Some(component),
        ..InvariantResult::new(value, InvariantKind::Reduced(None))
    })
}

/// Reduced uncolored value at `d = 0`, writhe-normalized, in the
/// symmetrized unit-normal form of [`alexander_normal_form`].
pub fn alexander(l: &Link) -> Result<InvariantResult, Error> {
    let r = reduced(l, &Labeling::all_box(l.components()), 0, Some(0))?;
    check_laurent(&r.value, "reduced value at d = 0")?;
    let value = RingElem::from_laurent(alexander_normal_form(r.value.num()));
    Ok(InvariantResult {
        value,
        kind: InvariantKind::Alexander,
        labeling: None,
        framing: Framing::WritheNormalized,
        cut: Some(0),
    })
}

/// Canonical representative of `±q^k · p` for a Laurent polynomial in `q`:
/// the exponent range is centered on zero, and the sign makes the value at
/// `q = 1` positive, or the top coefficient positive when that value is zero.
///
/// Odd exponent spans are centered as `[-k, k+1]`.
pub fn alexander_normal_form(p: &LaurentPoly) -> LaurentPoly {
    let (Some((lo, _)), Some((hi, _))) = (p.min_exponents(), p.max_exponents()) else {
        return LaurentPoly::zero();
    };
    let shift = -((lo + hi).div_euclid(2));
    let centered = p.shift(shift, 0);
    let at_one: BigInt = centered.terms().map(|(_, c)| c.clone()).sum();
    let sign = match at_one.sign() {
        Sign::Minus => -1,
        Sign::Plus => 1,
        Sign::NoSign => {
            let top = centered.terms().max_by_key(|(m, _)| m.qexp).map(|(_, c)| c.sign());
            if top == Some(Sign::Minus) {
                -1
            } else {
                1
            }
        }
    };
    if sign < 0 {
        -centered
    } else {
        centered
    }
}

/// Multiplies by `a^w`, or `q^{dw}` for a result specialized at `a = q^d`.
pub fn framing_normalize(r: &InvariantResult, w: i64) -> Result<InvariantResult, Error> {
    if r.framing == Framing::WritheNormalized {
        return Err(Error::AlreadyNormalized);
    }
    if let Some(l) = &r.labeling {
        if !l.is_all_box() {
            return Err(Error::ColoredFraming(l.to_string()));
        }
    }
    let w = i32::try_from(w).map_err(|_| RingError::Malformed(format!("writhe {w} out of range")))?;
    let value = match r.kind.specialization() {
        None => r.value.scale_monomial(0, w),
        Some(d) => r.value.scale_monomial(d * w, 0),
    };
    Ok(InvariantResult {
        value,
        framing: Framing::WritheNormalized,
        ..r.clone()
    })
}

/// Applies `q ↦ -q^-1` and transposes the labeling.
pub fn mirror_transform(r: &InvariantResult) -> Result<InvariantResult, Error> {
    if !r.kind.is_generic() {
        return Err(Error::NotGeneric {
            kind: format!("{:?}", r.kind),
        });
    }
    Ok(InvariantResult {
        value: r.value.mirror_tau(),
        labeling: r.labeling.as_ref().map(Labeling::transpose),
        ..r.clone()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MirrorReport {
    pub labeling: Labeling,
    pub transformed: RingElem,
    pub transposed: RingElem,
    pub passed: bool,
}

/// Compares `τ(Q(L, ℓ))` with `Q(L, ℓᵀ)`.
pub fn mirror_check(l: &Link, labeling: &Labeling) -> Result<MirrorReport, Error> {
    let lhs = mirror_transform(&colored_homfly(l, labeling)?)?.value;
    let rhs = colored_homfly(l, &labeling.transpose())?.value;
    Ok(MirrorReport {
        labeling: labeling.clone(),
        passed: lhs == rhs,
        transformed: lhs,
        transposed: rhs,
    })
}
