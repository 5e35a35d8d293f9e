//! Reduced Burau representation, the Alexander oracle.
//!
//! `Δ(t) ≐ det(I - B(β)) (1 - t) / (1 - t^n)` for the reduced Burau matrix
//! `B(β)` of an `n`-strand braid, up to units `±t^k`. Polynomials in `t` are
//! stored with `t` in the `q` slot.

use crate::diagram::BraidWord;
use crate::invariants::alexander_normal_form;
use crate::ring::{LaurentPoly, RingElem};
use crate::Error;

type Matrix = Vec<Vec<RingElem>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { RingElem::one() } else { RingElem::zero() }).collect())
        .collect()
}

fn t(e: i32) -> RingElem {
    RingElem::monomial(1, e, 0)
}

/// Matrix of `σ_i^{±1}` acting on `n - 1` coordinates.
fn generator(n: usize, letter: i32) -> Matrix {
    let m = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut g = identity(m);
    if letter > 0 {
        // row i becomes (.., t, -t, 1, ..) around the diagonal
        if i > 0 {
            g[i][i - 1] = t(1);
        }
        g[i][i] = -&t(1);
        if i + 1 < m {
            g[i][i + 1] = RingElem::one();
        }
    } else {
        if i > 0 {
            g[i][i - 1] = RingElem::one();
        }
        g[i][i] = -&t(-1);
        if i + 1 < m {
            g[i][i + 1] = t(-1);
        }
    }
    g
}

fn multiply(x: &Matrix, y: &Matrix) -> Matrix {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = RingElem::zero();
                    for k in 0..n {
                        if !x[i][k].is_zero() && !y[k][j].is_zero() {
                            acc = &acc + &(&x[i][k] * &y[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn determinant(mut m: Matrix) -> Result<RingElem, Error> {
    let n = m.len();
    let mut det = RingElem::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(RingElem::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -&det;
        }
        det = &det * &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].checked_div(&m[col][col])?;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    Ok(det)
}

/// The reduced Burau matrix of `b`.
pub fn burau_matrix(b: &BraidWord) -> Vec<Vec<RingElem>> {
    let n = b.strands();
    let mut m = identity(n.saturating_sub(1));
    for &l in b.letters() {
        m = multiply(&m, &generator(n, l));
    }
    m
}

/// `Δ(t)` of the closure of `b`, up to units.
pub fn burau_alexander(b: &BraidWord) -> Result<LaurentPoly, Error> {
    let n = b.strands();
    let m = burau_matrix(b);
    let size = m.len();
    let mut i_minus = identity(size);
    for (r, row) in i_minus.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = &*x - &m[r][c];
        }
    }
    let det = determinant(i_minus)?;
    let num = &RingElem::one() - &t(1);
    let den = &RingElem::one() - &t(n as i32);
    let value = (&det * &num).checked_div(&den)?;
    value.as_laurent().cloned().ok_or_else(|| {
        crate::ring::RingError::NotInSubring(format!("Burau quotient {value} is not a polynomial")).into()
    })
}

/// The oracle in the engine's symmetrized Alexander form: `t = q^-2`.
pub fn alexander_oracle(b: &BraidWord) -> Result<RingElem, Error> {
    let delta = burau_alexander(b)?;
    let in_q = LaurentPoly::from_triples(delta.terms().map(|(m, c)| (c.clone(), -2 * m.qexp, 0)));
    Ok(RingElem::from_laurent(alexander_normal_form(&in_q)))
}
