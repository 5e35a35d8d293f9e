//! Quantum Young symmetrizers.
//!
//! For the row-reading tableau of `λ`, `x_λ` symmetrizes the rows (blocks of
//! consecutive strands) and `y_λ` antisymmetrizes the columns of the
//! column-reading tableau. With `d` the permutation taking column-reading
//! positions to row-reading positions, `E = x_λ T_d y_λ T_d^-1` satisfies
//! `E^2 = c E` for a nonzero `c`, and `p_λ = E / c`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;

use crate::diagram::Partition;
use crate::ring::RingElem;

use super::{HeckeElement, HeckeError, Perm};

pub const DEFAULT_BOUND: usize = 4;

/// Largest size for which block idempotents are built in certificates.
const BLOCK_CHECK_MAX: usize = 3;

/// A single check performed on an idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `c` with `E^2 = c E` before normalization; `1` for conjugates.
    pub normalization: RingElem,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentRecord {
    pub lambda: Partition,
    pub element: HeckeElement,
    pub certificate: Certificate,
}

impl IdempotentRecord {
    fn verified(self) -> Result<Self, HeckeError> {
        match self.certificate.checks.iter().find(|c| !c.passed) {
            None => Ok(self),
            Some(c) => Err(HeckeError::Certificate {
                shape: self.lambda.to_string(),
                check: c.name.clone(),
            }),
        }
    }
}

/// `Σ_w e^ℓ(w) T_w` on `r` strands: `T_i x = x T_i = e x` when `e` is a
/// root of `e^2 = 1 + (q^-1 - q) e`.
fn symmetrizer(r: usize, e: &RingElem) -> HeckeElement {
    let terms = Perm::all(r).into_iter().map(|w| {
        let c = e.pow(w.length() as i32).expect("nonzero base");
        (w, c)
    });
    HeckeElement::from_terms(r, terms).expect("rank r")
}

fn blocks(sizes: &[u32], e: &RingElem) -> HeckeElement {
    sizes
        .iter()
        .fold(HeckeElement::identity(0), |acc, &k| acc.juxtapose(&symmetrizer(k as usize, e)))
}

/// Positions `i` (generator indices) joining two boxes of one block.
fn block_generators(sizes: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 0;
    for &k in sizes {
        out.extend(start + 1..start + k as usize);
        start += k as usize;
    }
    out
}

/// Column-reading position of each box mapped to its row-reading position.
fn column_to_row(lambda: &Partition) -> Perm {
    let mut row_start = Vec::with_capacity(lambda.len());
    let mut k = 0u8;
    for &p in lambda.parts() {
        row_start.push(k);
        k += p as u8;
    }
    let mut images = Vec::with_capacity(lambda.size());
    for (j, &height) in lambda.transpose().parts().iter().enumerate() {
        for start in row_start.iter().take(height as usize) {
            images.push(start + j as u8);
        }
    }
    Perm::from_images(images).expect("every box is read once")
}

fn inverse_basis(w: &Perm) -> HeckeElement {
    let letters: Vec<i32> = w.reduced_word().into_iter().rev().map(|i| -(i as i32)).collect();
    HeckeElement::from_word(w.size(), &letters).expect("reduced word letters are in range")
}

fn q_inv() -> RingElem {
    RingElem::monomial(1, -1, 0)
}

fn minus_q() -> RingElem {
    RingElem::monomial(-1, 1, 0)
}

/// `(c, E)` with `E^2 = c E`.
fn quasi_idempotent(lambda: &Partition) -> Result<(RingElem, HeckeElement), HeckeError> {
    let r = lambda.size();
    let x = blocks(lambda.parts(), &q_inv());
    let y = blocks(lambda.transpose().parts(), &minus_q());
    let d = column_to_row(lambda);
    let td = HeckeElement::basis(d.clone());
    let e = x.checked_mul(&td)?.checked_mul(&y)?.checked_mul(&inverse_basis(&d))?;
    let sq = e.checked_mul(&e)?;
    let (w, c0) = e
        .terms()
        .next()
        .ok_or_else(|| HeckeError::ZeroNormalization(lambda.to_string()))?;
    let c = sq.coefficient(w).checked_div(c0)?;
    if c.is_zero() || sq != e.scale(&c) {
        return Err(HeckeError::ZeroNormalization(lambda.to_string()));
    }
    debug_assert_eq!(e.rank(), r);
    Ok((c, e))
}

fn cache() -> &'static Mutex<HashMap<Partition, Arc<IdempotentRecord>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<IdempotentRecord>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn block_cache() -> &'static Mutex<HashMap<Partition, HeckeElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, HeckeElement>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `p_λ` with `|λ|` at most [`DEFAULT_BOUND`].
pub fn young_idempotent(lambda: &Partition) -> Result<Arc<IdempotentRecord>, HeckeError> {
    young_idempotent_with_bound(lambda, DEFAULT_BOUND)
}

pub fn young_idempotent_with_bound(
    lambda: &Partition,
    bound: usize,
) -> Result<Arc<IdempotentRecord>, HeckeError> {
    if lambda.size() > bound {
        return Err(HeckeError::BoundExceeded {
            size: lambda.size(),
            bound,
        });
    }
    if let Some(rec) = cache().lock().get(lambda) {
        return Ok(rec.clone());
    }
    let rec = Arc::new(build(lambda)?);
    cache().lock().insert(lambda.clone(), rec.clone());
    Ok(rec)
}

fn build(lambda: &Partition) -> Result<IdempotentRecord, HeckeError> {
    let r = lambda.size();
    let (c, e) = quasi_idempotent(lambda)?;
    let p = e.scale(&c.inverse()?);
    let mut cert = Certificate {
        normalization: c,
        checks: Vec::new(),
    };
    cert.record("p^2 = p", p.checked_mul(&p)? == p);
    for i in block_generators(lambda.parts()) {
        let tp = HeckeElement::generator(i, r)?.checked_mul(&p)?;
        cert.record(format!("T_{i} p = q^-1 p"), tp == p.scale(&q_inv()));
    }
    let d = column_to_row(lambda);
    for j in block_generators(lambda.transpose().parts()) {
        let g = HeckeElement::basis(d.clone())
            .checked_mul(&HeckeElement::generator(j, r)?)?
            .checked_mul(&inverse_basis(&d))?;
        cert.record(format!("p T_d T_{j} T_d^-1 = -q p"), p.checked_mul(&g)? == p.scale(&minus_q()));
    }
    let rec = IdempotentRecord {
        lambda: lambda.clone(),
        element: p,
        certificate: cert,
    };
    let mut rec = rec;
    if (2..=BLOCK_CHECK_MAX).contains(&r) {
        block_checks(&mut rec)?;
    }
    rec.verified()
}

/// `e_μ p = δ_{λμ} p` for every `μ ⊢ |λ|`.
fn block_checks(rec: &mut IdempotentRecord) -> Result<(), HeckeError> {
    let r = rec.lambda.size();
    for mu in Partition::all_of(r as u32) {
        let e = if mu == rec.lambda {
            central_from(&rec.lambda, &rec.element)?
        } else {
            block_idempotent(&mu)?
        };
        let ep = e.checked_mul(&rec.element)?;
        let expect = if mu == rec.lambda {
            rec.element.clone()
        } else {
            HeckeElement::zero(r)
        };
        rec.certificate.record(format!("e_{mu} p = {}", if mu == rec.lambda { "p" } else { "0" }), ep == expect);
    }
    Ok(())
}

fn central_from(lambda: &Partition, p: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    if let Some(e) = block_cache().lock().get(lambda) {
        return Ok(e.clone());
    }
    let c = p.centralize();
    let sq = c.checked_mul(&c)?;
    let (w, c0) = c
        .terms()
        .next()
        .ok_or_else(|| HeckeError::ZeroNormalization(lambda.to_string()))?;
    let k = sq.coefficient(w).checked_div(c0)?;
    if k.is_zero() || sq != c.scale(&k) {
        return Err(HeckeError::ZeroNormalization(lambda.to_string()));
    }
    let e = c.scale(&k.inverse()?);
    block_cache().lock().insert(lambda.clone(), e.clone());
    Ok(e)
}

/// The central idempotent of the `λ` block, obtained by centralizing `p_λ`
/// and normalizing.
pub fn block_idempotent(lambda: &Partition) -> Result<HeckeElement, HeckeError> {
    if let Some(e) = block_cache().lock().get(lambda) {
        return Ok(e.clone());
    }
    let (c, e) = quasi_idempotent(lambda)?;
    central_from(lambda, &e.scale(&c.inverse()?))
}

/// `x p x^-1`, re-certified.
pub fn conjugate_idempotent(
    p: &IdempotentRecord,
    x: &HeckeElement,
) -> Result<IdempotentRecord, HeckeError> {
    let inv = x.inverse()?;
    let element = x.checked_mul(&p.element)?.checked_mul(&inv)?;
    let mut cert = Certificate {
        normalization: RingElem::one(),
        checks: Vec::new(),
    };
    cert.record("p^2 = p", element.checked_mul(&element)? == element);
    let mut rec = IdempotentRecord {
        lambda: p.lambda.clone(),
        element,
        certificate: cert,
    };
    let r = rec.lambda.size();
    if (2..=BLOCK_CHECK_MAX).contains(&r) {
        block_checks(&mut rec)?;
    }
    rec.verified()
}
