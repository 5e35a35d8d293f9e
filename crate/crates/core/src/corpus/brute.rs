//! Plain resolver on a crossing list: every crossing met from below is
//! switched and smoothed, with no simplification and no memo table.
//!
//! Base points are the smallest slot index of each component, and components
//! are walked in order of that index. A diagram with no crossing met from
//! below is a stacked unlink.

use std::collections::BTreeMap;

use crate::diagram::{LinkDiagram, Strand};
use crate::ring::{LaurentPoly, RingElem};
use crate::Error;

pub const BRUTE_FORCE_MAX_CROSSINGS: usize = 10;

#[derive(Clone)]
struct State {
    /// Slot index reached when leaving crossing `c` through incoming slot `s`.
    next: Vec<[usize; 2]>,
    /// Which incoming slot currently runs over.
    over: Vec<usize>,
    sign: Vec<i32>,
    smoothed: Vec<bool>,
    loops: usize,
}

impl State {
    fn exit(&self, slot: usize) -> usize {
        let (c, s) = (slot / 2, slot % 2);
        if self.smoothed[c] {
            self.next[c][1 - s]
        } else {
            self.next[c][s]
        }
    }

    /// The first crossing met from below, or the number of closed curves.
    fn scan(&self) -> Result<usize, usize> {
        let n = self.next.len();
        let mut seen = vec![false; 2 * n];
        let mut crossed = vec![false; n];
        let mut curves = self.loops;
        for start in 0..2 * n {
            if seen[start] || self.smoothed[start / 2] {
                continue;
            }
            curves += 1;
            let mut slot = start;
            while !seen[slot] {
                seen[slot] = true;
                let c = slot / 2;
                if !self.smoothed[c] && !std::mem::replace(&mut crossed[c], true) && slot % 2 != self.over[c] {
                    return Err(c);
                }
                slot = self.exit(slot);
            }
        }
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            curves += 1;
            let mut slot = start;
            while !seen[slot] {
                seen[slot] = true;
                slot = self.exit(slot);
            }
        }
        Ok(curves)
    }

    fn resolve(&self, coeff: LaurentPoly, out: &mut BTreeMap<(usize, i32), LaurentPoly>, z: &LaurentPoly) {
        match self.scan() {
            Ok(curves) => {
                let w: i32 = (0..self.sign.len())
                    .filter(|&c| !self.smoothed[c])
                    .map(|c| self.sign[c])
                    .sum();
                *out.entry((curves, -w)).or_default() += &coeff;
            }
            Err(c) => {
                let mut switched = self.clone();
                switched.over[c] = 1 - switched.over[c];
                switched.sign[c] = -switched.sign[c];
                let mut smooth = self.clone();
                smooth.smoothed[c] = true;
                let zc = &coeff * z;
                let zc = if self.sign[c] > 0 { zc } else { -zc };
                switched.resolve(coeff, out, z);
                smooth.resolve(zc, out, z);
            }
        }
    }
}

/// Framed value by exhaustive branching; at most
/// [`BRUTE_FORCE_MAX_CROSSINGS`] crossings.
pub fn brute_force_value(l: &LinkDiagram) -> Result<RingElem, Error> {
    let n = l.crossing_count();
    if n > BRUTE_FORCE_MAX_CROSSINGS {
        return Err(Error::TooLarge {
            crossings: n,
            limit: BRUTE_FORCE_MAX_CROSSINGS,
        });
    }
    let state = State {
        next: l
            .crossings()
            .iter()
            .map(|x| [x.next(Strand::Over).index(), x.next(Strand::Under).index()])
            .collect(),
        over: vec![Strand::Over as usize; n],
        sign: l.crossings().iter().map(|x| x.sign.value()).collect(),
        smoothed: vec![false; n],
        loops: l.free_loops(),
    };
    let z = &LaurentPoly::monomial(1, -1, 0) - &LaurentPoly::q();
    let mut sums = BTreeMap::new();
    state.resolve(LaurentPoly::one(), &mut sums, &z);
    let loop_value = RingElem::loop_value();
    let mut total = RingElem::zero();
    for ((curves, aexp), coeff) in sums {
        let term = RingElem::from_laurent(coeff.shift(0, aexp));
        total = &total + &(&term * &loop_value.pow(curves as i32)?);
    }
    Ok(total)
}
