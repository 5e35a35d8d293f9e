//! The Markov trace on `H_n` normalized like the skein engine: the closure
//! of `x ∈ H_n` has value `tr(x)` with `tr(1_n) = [t]^n` and
//! `tr(y T_{n-1} y') = a^-1 tr(y y')` for `y, y' ∈ H_{n-1}`.
//!
//! Elements live in a dense vector indexed by permutations with exact
//! `i128` Laurent coefficients in `q`. Right multiplication by `T_i` mixes the
//! pairs `{w, w s_i}` in place. The trace is taken one strand at a time: a
//! permutation of `n` letters is `u s_{n-1} ⋯ s_k` with `u` fixing `n` and
//! `k` the position of `n`, and the conditional expectation sends `T_w` to
//! `a^-1 T_u T_{n-2} ⋯ T_k` for `k < n` and to `[t] T_u` for `k = n`. After
//! `n - m` steps a coefficient is `Σ_j c_j a^-j [t]^(n-m-j)`, stored as the
//! list of `c_j`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::diagram::BraidWord;
use crate::ring::{laurent_div_exact, laurent_gcd, LaurentPoly, RingElem, RingError};

use super::{HeckeElement, HeckeError};

/// Braids on more strands are refused; `10!` coefficients is the ceiling.
pub const TRACE_MAX_STRANDS: usize = 10;

/// Dense Laurent polynomial in `q`; empty means zero.
#[derive(Clone, Debug, Default)]
struct QPoly {
    lo: i32,
    c: Vec<i128>,
}

impl QPoly {
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `self += factor · q^shift · other`
    fn add_scaled(&mut self, other: &QPoly, shift: i32, factor: i128) -> Result<(), HeckeError> {
        if other.is_zero() {
            return Ok(());
        }
        let olo = other.lo + shift;
        if self.is_zero() {
            self.lo = olo;
            self.c = other
                .c
                .iter()
                .map(|&x| x.checked_mul(factor).ok_or(HeckeError::Overflow))
                .collect::<Result<_, _>>()?;
            return Ok(());
        }
        let ohi = olo + other.c.len() as i32;
        if olo < self.lo {
            let pad = (self.lo - olo) as usize;
            let mut c = vec![0; pad];
            c.append(&mut self.c);
            self.c = c;
            self.lo = olo;
        }
        if ohi > self.lo + self.c.len() as i32 {
            self.c.resize((ohi - self.lo) as usize, 0);
        }
        let base = (olo - self.lo) as usize;
        for (k, &x) in other.c.iter().enumerate() {
            let t = x.checked_mul(factor).ok_or(HeckeError::Overflow)?;
            let slot = &mut self.c[base + k];
            *slot = slot.checked_add(t).ok_or(HeckeError::Overflow)?;
        }
        self.trim();
        Ok(())
    }

    /// `self += sign · (q^-1 - q) · other`
    fn add_z(&mut self, other: &QPoly, sign: i128) -> Result<(), HeckeError> {
        self.add_scaled(other, -1, sign)?;
        self.add_scaled(other, 1, -sign)
    }

    fn trim(&mut self) {
        let end = self.c.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        self.c.truncate(end);
        let start = self.c.iter().position(|&x| x != 0).unwrap_or(0);
        if start > 0 {
            self.c.drain(..start);
            self.lo += start as i32;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_triples(
            self.c
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| (BigInt::from(x), self.lo + k as i32, 0)),
        )
    }

    fn from_laurent(p: &LaurentPoly) -> Result<QPoly, HeckeError> {
        let mut out = QPoly::default();
        for (m, c) in p.terms() {
            debug_assert_eq!(m.aexp, 0);
            let c = c.to_i128().ok_or(HeckeError::Overflow)?;
            out.add_scaled(&QPoly { lo: 0, c: vec![c] }, m.qexp, 1)?;
        }
        Ok(out)
    }
}

/// Rank of a permutation of `m` letters: `d_m + m · rank(u)` where `u` drops
/// the largest letter and `d_m = m - 1 - position(largest)`.
fn rank(w: &[u8]) -> u32 {
    let mut v = w.to_vec();
    let mut digits = Vec::with_capacity(v.len());
    for m in (1..=v.len()).rev() {
        let p = v.iter().position(|&x| x as usize == m - 1).expect("a permutation");
        digits.push((m - 1 - p) as u32);
        v.remove(p);
    }
    // digits[0] belongs to size m, the last to size 1
    digits
        .iter()
        .rev()
        .enumerate()
        .fold(0, |acc, (k, &d)| d + (k as u32 + 1) * acc)
}

fn unrank(mut r: u32, m: usize) -> Vec<u8> {
    let mut digits = vec![0u32; m + 1];
    for k in (1..=m).rev() {
        digits[k] = r % k as u32;
        r /= k as u32;
    }
    let mut v = Vec::with_capacity(m);
    for k in 1..=m {
        v.insert(k - 1 - digits[k] as usize, (k - 1) as u8);
    }
    v
}

/// For each generator `s_i` of `S_m`, the pairs `(w, w s_i)` with `w`
/// ascending at `i`.
struct Table {
    pairs: Vec<Vec<(u32, u32)>>,
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

fn table(m: usize) -> &'static Table {
    static TABLES: [OnceLock<Table>; TRACE_MAX_STRANDS + 1] =
        [const { OnceLock::new() }; TRACE_MAX_STRANDS + 1];
    TABLES[m].get_or_init(|| {
        let size = factorial(m);
        let mut pairs = vec![Vec::with_capacity(size / 2); m.saturating_sub(1)];
        for r in 0..size as u32 {
            let mut w = unrank(r, m);
            for i in 1..m {
                if w[i - 1] < w[i] {
                    w.swap(i - 1, i);
                    pairs[i - 1].push((r, rank(&w)));
                    w.swap(i - 1, i);
                }
            }
        }
        Table { pairs }
    })
}

/// A vector of `H_m` with `width` coefficient slots per basis element.
struct State {
    m: usize,
    width: usize,
    v: Vec<QPoly>,
}

impl State {
    fn zero(m: usize, width: usize) -> Self {
        State {
            m,
            width,
            v: vec![QPoly::default(); factorial(m) * width],
        }
    }

    /// Right multiplication by `T_i` or `T_i^-1`.
    fn times_generator(&mut self, i: usize, inverse: bool) -> Result<(), HeckeError> {
        let wd = self.width;
        for &(lo, hi) in &table(self.m).pairs[i - 1] {
            for j in 0..wd {
                let a = lo as usize * wd + j;
                let b = hi as usize * wd + j;
                if self.v[a].is_zero() && self.v[b].is_zero() {
                    continue;
                }
                let alpha = std::mem::take(&mut self.v[a]);
                let beta = std::mem::take(&mut self.v[b]);
                if inverse {
                    // (α T_w + β T_ws) T_i^-1 = (β - zα) T_w + α T_ws
                    let mut na = beta;
                    na.add_z(&alpha, -1)?;
                    self.v[a] = na;
                    self.v[b] = alpha;
                } else {
                    // (α T_w + β T_ws) T_i = β T_w + (α + zβ) T_ws
                    let mut nb = alpha;
                    nb.add_z(&beta, 1)?;
                    self.v[a] = beta;
                    self.v[b] = nb;
                }
            }
        }
        Ok(())
    }

    fn add_assign(&mut self, other: &State) -> Result<(), HeckeError> {
        for (x, y) in self.v.iter_mut().zip(&other.v) {
            x.add_scaled(y, 0, 1)?;
        }
        Ok(())
    }

    /// Conditional expectation `H_m → H_{m-1}`.
    fn expect(&self) -> Result<State, HeckeError> {
        let m = self.m;
        let wd = self.width;
        let mut out = State::zero(m - 1, wd + 1);
        let inner = factorial(m - 1);
        for u in 0..inner {
            for j in 0..wd {
                let src = &self.v[u * m * wd + j];
                out.v[u * (wd + 1) + j].add_scaled(src, 0, 1)?;
            }
        }
        for digit in 1..m {
            let mut y = State::zero(m - 1, wd + 1);
            let mut any = false;
            for u in 0..inner {
                for j in 0..wd {
                    let src = &self.v[(digit + m * u) * wd + j];
                    if !src.is_zero() {
                        y.v[u * (wd + 1) + j + 1] = src.clone();
                        any = true;
                    }
                }
            }
            if !any {
                continue;
            }
            let k = m - digit;
            for g in (k..=m - 2).rev() {
                y.times_generator(g, false)?;
            }
            out.add_assign(&y)?;
        }
        Ok(out)
    }
}

/// Multiplies out denominators: `x = x' / den` with `x'` over `Z[q^±1]`.
fn clear_denominators(x: &HeckeElement) -> Result<(Vec<(u32, QPoly)>, LaurentPoly), HeckeError> {
    let mut den = LaurentPoly::one();
    for (_, c) in x.terms() {
        if !c.is_q_only() {
            return Err(HeckeError::Ring(RingError::NotInSubring(
                "trace coefficients must not involve a".into(),
            )));
        }
        let g = laurent_gcd(&den, c.den());
        let part = laurent_div_exact(c.den(), &g).expect("gcd divides");
        den = &den * &part;
    }
    let scale = RingElem::from_laurent(den.clone());
    let mut out = Vec::with_capacity(x.len());
    for (w, c) in x.terms() {
        let y = c * &scale;
        let p = y.as_laurent().expect("denominator cleared");
        out.push((rank(w.images()), QPoly::from_laurent(p)?));
    }
    Ok((out, den))
}

/// `tr(x · T_β)` for `x ∈ H_n` and braid letters `β` on the same strands:
/// the closure of the braid with `x` inserted at its bottom.
pub fn closure_trace(x: &HeckeElement, letters: &[i32]) -> Result<RingElem, HeckeError> {
    let n = x.rank();
    if n > TRACE_MAX_STRANDS {
        return Err(HeckeError::TooManyStrands {
            strands: n,
            limit: TRACE_MAX_STRANDS,
        });
    }
    if let Some(&l) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= n) {
        return Err(HeckeError::IndexOutOfRange {
            index: l.unsigned_abs() as usize,
            rank: n,
        });
    }
    if n == 0 {
        return Ok(x.coefficient(&super::Perm::identity(0)));
    }
    let (init, den) = clear_denominators(x)?;
    let mut s = State::zero(n, 1);
    for (r, c) in init {
        s.v[r as usize] = c;
    }
    for &l in letters {
        s.times_generator(l.unsigned_abs() as usize, l < 0)?;
    }
    while s.m > 0 {
        s = s.expect()?;
    }
    // Σ_j c_j a^-j [t]^(n-j) over (q - q^-1)^n
    let qq = LaurentPoly::from_triples([(1, 1, 0), (-1, -1, 0)]);
    let aa = LaurentPoly::from_triples([(1, 0, 1), (-1, 0, -1)]);
    let mut num = LaurentPoly::zero();
    for (j, c) in s.v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = c.to_laurent().shift(0, -(j as i32));
        let t = &(&t * &aa.pow((n - j) as u32)) * &qq.pow(j as u32);
        num = &num + &t;
    }
    let den = &qq.pow(n as u32) * &den;
    Ok(RingElem::from_fraction(num, den)?)
}

/// Closure value of a braid, evaluated through the trace.
pub fn braid_closure_value(b: &BraidWord) -> Result<RingElem, HeckeError> {
    closure_trace(&HeckeElement::identity(b.strands()), b.letters())
}
