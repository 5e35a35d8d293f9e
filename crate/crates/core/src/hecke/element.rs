use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::BraidWord;
use crate::ring::RingElem;

use super::{HeckeError, Perm};

/// `Σ c_w T_w` in `H_r`, with `T_w` the positive lift of a reduced word of
/// `w`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    terms: BTreeMap<Perm, RingElem>,
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        HeckeElement {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(r: usize) -> Self {
        Self::basis(Perm::identity(r))
    }

    /// `T_w`.
    pub fn basis(w: Perm) -> Self {
        let r = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, RingElem::one());
        HeckeElement { r, terms }
    }

    /// `T_i` in `H_r`.
    pub fn generator(i: usize, r: usize) -> Result<Self, HeckeError> {
        check_index(i, r)?;
        Ok(Self::basis(Perm::identity(r).times_generator(i)))
    }

    /// `T_i^-1 = T_i - (q^-1 - q)`.
    pub fn inverse_generator(i: usize, r: usize) -> Result<Self, HeckeError> {
        check_index(i, r)?;
        Ok(Self::identity(r).times_generator(i, true))
    }

    /// The product of `T_i^±1` over braid letters `±i`.
    pub fn from_word(r: usize, letters: &[i32]) -> Result<Self, HeckeError> {
        let mut x = Self::identity(r);
        for &l in letters {
            check_index(l.unsigned_abs() as usize, r)?;
            x = x.times_generator(l.unsigned_abs() as usize, l < 0);
        }
        Ok(x)
    }

    pub fn from_terms(
        r: usize,
        terms: impl IntoIterator<Item = (Perm, RingElem)>,
    ) -> Result<Self, HeckeError> {
        let mut x = Self::zero(r);
        for (w, c) in terms {
            if w.size() != r {
                return Err(HeckeError::RankMismatch {
                    left: r,
                    right: w.size(),
                });
            }
            x.add_term(w, &c);
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RingElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Perm) -> RingElem {
        self.terms.get(w).cloned().unwrap_or_else(RingElem::zero)
    }

    fn add_term(&mut self, w: Perm, c: &RingElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_rank(&self, other: &Self) -> Result<(), HeckeError> {
        if self.r != other.r {
            return Err(HeckeError::RankMismatch {
                left: self.r,
                right: other.r,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.same_rank(other)?;
        let mut x = self.clone();
        for (w, c) in &other.terms {
            x.add_term(w.clone(), c);
        }
        Ok(x)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.checked_add(&other.scale(&RingElem::from_int(-1)))
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        let mut x = Self::zero(self.r);
        for (w, d) in &self.terms {
            x.add_term(w.clone(), &(d * c));
        }
        x
    }

    pub fn map_coefficients(&self, f: impl Fn(&RingElem) -> RingElem) -> Self {
        let mut x = Self::zero(self.r);
        for (w, c) in &self.terms {
            x.add_term(w.clone(), &f(c));
        }
        x
    }

    /// `self · T_i`, or `self · T_i^-1` when `inverse`.
    fn times_generator(&self, i: usize, inverse: bool) -> Self {
        let z = RingElem::skein_coefficient();
        let mut x = Self::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.times_generator(i);
            if w.ascends(i) {
                x.add_term(ws, c);
                if inverse {
                    x.add_term(w.clone(), &-&(c * &z));
                }
            } else {
                // T_w T_i = T_ws + z T_w and T_w T_i^-1 = T_ws
                x.add_term(ws, c);
                if !inverse {
                    x.add_term(w.clone(), &(c * &z));
                }
            }
        }
        x
    }

    /// `self · T_v` along a reduced word of `v`.
    fn times_basis(&self, v: &Perm) -> Self {
        v.reduced_word()
            .into_iter()
            .fold(self.clone(), |x, i| x.times_generator(i, false))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, HeckeError> {
        self.same_rank(other)?;
        let mut x = Self::zero(self.r);
        for (v, c) in &other.terms {
            for (w, d) in &self.times_basis(v).terms {
                x.add_term(w.clone(), &(d * c));
            }
        }
        Ok(x)
    }

    /// `self ⊗ other` in `H_{r+s}`: `other` acts on the strands after ours.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let mut x = Self::zero(self.r + other.r);
        for (w, c) in &self.terms {
            for (v, d) in &other.terms {
                x.add_term(w.juxtapose(v), &(c * d));
            }
        }
        x
    }

    /// `Σ_w T_w · self · T_{w^-1}`, a central element.
    pub fn centralize(&self) -> Self {
        let mut acc = Self::zero(self.r);
        for w in Perm::all(self.r) {
            let left = Self::basis(w.clone())
                .checked_mul(self)
                .expect("same rank")
                .times_basis(&w.inverse());
            acc = acc.checked_add(&left).expect("same rank");
        }
        acc
    }

    /// Two-sided inverse found by solving `self · y = 1` in the `T_w` basis.
    pub fn inverse(&self) -> Result<Self, HeckeError> {
        let basis = Perm::all(self.r);
        let index: BTreeMap<&Perm, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let n = basis.len();
        // augmented matrix: column j is self · T_{basis[j]}
        let mut m = vec![vec![RingElem::zero(); n + 1]; n];
        for (j, v) in basis.iter().enumerate() {
            for (w, c) in &self.times_basis(v).terms {
                m[index[w]][j] = c.clone();
            }
        }
        m[index[&Perm::identity(self.r)]][n] = RingElem::one();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&row| !m[row][col].is_zero())
                .ok_or(HeckeError::NotInvertible)?;
            m.swap(col, pivot);
            let inv = m[col][col].inverse()?;
            for k in col..=n {
                m[col][k] = &m[col][k] * &inv;
            }
            for row in 0..n {
                if row == col || m[row][col].is_zero() {
                    continue;
                }
                let f = m[row][col].clone();
                for k in col..=n {
                    let t = &f * &m[col][k];
                    m[row][k] = &m[row][k] - &t;
                }
            }
        }
        let y = Self::from_terms(
            self.r,
            basis.into_iter().zip(m).map(|(w, row)| (w, row[n].clone())),
        )?;
        debug_assert!(y.checked_mul(self).map(|p| p == Self::identity(self.r)).unwrap_or(false));
        Ok(y)
    }

    /// `(coefficient, letters)` with the letters a reduced word of each `w`.
    pub(crate) fn expand_to_words(&self) -> Vec<(RingElem, Vec<i32>)> {
        self.terms
            .iter()
            .map(|(w, c)| (c.clone(), w.reduced_word().into_iter().map(|i| i as i32).collect()))
            .collect()
    }

    /// Each `T_w` replaced by the positive braid of a reduced word of `w`.
    /// Elements of `H_0` are scalars and come back as one-strand braids.
    pub fn expand_to_braids(&self) -> Vec<(RingElem, BraidWord)> {
        self.expand_to_words()
            .into_iter()
            .map(|(c, letters)| {
                let b = BraidWord::new(self.r.max(1), letters)
                    .expect("reduced words only use generators of H_r");
                (c, b)
            })
            .collect()
    }
}

fn check_index(i: usize, r: usize) -> Result<(), HeckeError> {
    if i == 0 || i >= r {
        return Err(HeckeError::IndexOutOfRange { index: i, rank: r });
    }
    Ok(())
}

pub fn hecke_mul(x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    x.checked_mul(y)
}

pub fn hecke_inverse_generator(i: usize, r: usize) -> Result<HeckeElement, HeckeError> {
    HeckeElement::inverse_generator(i, r)
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) · T{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}[{self}]", self.r)
    }
}
