//! Polynomial gcd and exact division over `Z[q][a]`.
//!
//! Polynomials are handled densely: a `UPoly` is a coefficient vector in `q`
//! (ascending degree) and a `BPoly` is a vector of `UPoly` indexed by the
//! degree in `a`. Gcds use the primitive polynomial remainder sequence, first
//! over `Z` in `q` and then over `Z[q]` in `a`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BPoly = Vec<UPoly>;

fn u_trim(mut p: UPoly) -> UPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_deg(p: &UPoly) -> usize {
    p.len() - 1
}

fn u_one() -> UPoly {
    vec![BigInt::one()]
}

fn u_is_unit(p: &UPoly) -> bool {
    p.len() == 1 && p[0].abs().is_one()
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale_div(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

fn u_pp(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    u_scale_div(p, &c)
}

fn u_mul(f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, x) in f.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in g.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_sub(f: &UPoly, g: &UPoly) -> UPoly {
    let n = f.len().max(g.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = f.get(i).cloned().unwrap_or_default();
        let y = g.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(out)
}

fn u_scalar_mul(f: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    f.iter().map(|x| x * c).collect()
}

/// `f * x^s`
fn u_shift(f: &UPoly, s: usize) -> UPoly {
    if f.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); s];
    out.extend(f.iter().cloned());
    out
}

/// Pseudo-remainder of `f` by `g` (not scaled by the final power of `lc(g)`).
fn u_prem(f: &UPoly, g: &UPoly) -> UPoly {
    let dg = u_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r = f.clone();
    while !r.is_empty() && u_deg(&r) >= dg {
        let lr = r.last().unwrap().clone();
        let s = u_deg(&r) - dg;
        let lhs = u_scalar_mul(&r, &lg);
        let rhs = u_shift(&u_scalar_mul(g, &lr), s);
        r = u_sub(&lhs, &rhs);
    }
    r
}

/// Exact division in `Z[q]`; `None` if `g` does not divide `f`.
fn u_div_exact(f: &UPoly, g: &UPoly) -> Option<UPoly> {
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let dg = u_deg(g);
    let lg = g.last().unwrap();
    let mut r = f.clone();
    let mut quo = vec![BigInt::zero(); f.len() - g.len() + 1];
    while !r.is_empty() {
        if r.len() < g.len() {
            return None;
        }
        let (c, rem) = r.last().unwrap().div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        let s = u_deg(&r) - dg;
        let sub = u_shift(&u_scalar_mul(g, &c), s);
        quo[s] = c;
        r = u_sub(&r, &sub);
    }
    Some(u_trim(quo))
}

/// Gcd in `Z[q]` with positive leading coefficient.
fn u_gcd(f: &UPoly, g: &UPoly) -> UPoly {
    if u_is_zero(f) {
        return u_pp(g).iter().map(|c| c * u_content(g)).collect();
    }
    if u_is_zero(g) {
        return u_pp(f).iter().map(|c| c * u_content(f)).collect();
    }
    let c = u_content(f).gcd(&u_content(g));
    let (mut f, mut g) = (u_pp(f), u_pp(g));
    if u_deg(&f) < u_deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if u_deg(&g) == 0 {
            g = u_one();
            break;
        }
        let r = u_prem(&f, &g);
        if r.is_empty() {
            break;
        }
        f = g;
        g = u_pp(&r);
    }
    u_scalar_mul(&u_pp(&g), &c)
}

fn b_trim(mut p: BPoly) -> BPoly {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
    p
}

fn b_deg(p: &BPoly) -> usize {
    p.len() - 1
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if u_is_unit(&g) {
            break;
        }
    }
    g
}

fn b_div_upoly(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn b_pp(p: &BPoly) -> BPoly {
    let c = b_content(p);
    b_div_upoly(p, &c)
}

fn b_sub(f: &BPoly, g: &BPoly) -> BPoly {
    let n = f.len().max(g.len());
    let empty = Vec::new();
    let out = (0..n)
        .map(|i| u_sub(f.get(i).unwrap_or(&empty), g.get(i).unwrap_or(&empty)))
        .collect();
    b_trim(out)
}

fn b_mul_upoly(f: &BPoly, c: &UPoly) -> BPoly {
    b_trim(f.iter().map(|x| u_mul(x, c)).collect())
}

fn b_shift(f: &BPoly, s: usize) -> BPoly {
    let mut out = vec![Vec::new(); s];
    out.extend(f.iter().cloned());
    out
}

fn b_prem(f: &BPoly, g: &BPoly) -> BPoly {
    let dg = b_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r = f.clone();
    while !r.is_empty() && b_deg(&r) >= dg {
        let lr = r.last().unwrap().clone();
        let s = b_deg(&r) - dg;
        let lhs = b_mul_upoly(&r, &lg);
        let rhs = b_shift(&b_mul_upoly(g, &lr), s);
        r = b_sub(&lhs, &rhs);
    }
    r
}

/// Gcd in `Z[q][a]`, up to sign.
pub(crate) fn b_gcd(f: &BPoly, g: &BPoly) -> BPoly {
    if f.is_empty() {
        return g.clone();
    }
    if g.is_empty() {
        return f.clone();
    }
    let cf = b_content(f);
    let cg = b_content(g);
    let c = u_gcd(&cf, &cg);
    let (mut f, mut g) = (b_div_upoly(f, &cf), b_div_upoly(g, &cg));
    if b_deg(&f) < b_deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if b_deg(&g) == 0 {
            g = vec![u_one()];
            break;
        }
        let r = b_prem(&f, &g);
        if r.is_empty() {
            break;
        }
        f = g;
        g = b_pp(&r);
    }
    b_mul_upoly(&b_pp(&g), &c)
}

/// Exact division in `Z[q][a]`; `None` if `g` does not divide `f`.
pub(crate) fn b_div_exact(f: &BPoly, g: &BPoly) -> Option<BPoly> {
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let dg = b_deg(g);
    let lg = g.last().unwrap();
    let mut r = f.clone();
    let mut quo: BPoly = vec![Vec::new(); f.len() - g.len() + 1];
    while !r.is_empty() {
        if r.len() < g.len() {
            return None;
        }
        let c = u_div_exact(r.last().unwrap(), lg)?;
        let s = b_deg(&r) - dg;
        let sub = b_shift(&b_trim(g.iter().map(|x| u_mul(x, &c)).collect()), s);
        quo[s] = c;
        r = b_sub(&r, &sub);
    }
    Some(b_trim(quo))
}

pub(crate) fn b_is_one(p: &BPoly) -> bool {
    p.len() == 1 && p[0].len() == 1 && p[0][0].is_one()
}

/// Splits a Laurent polynomial into a monomial shift and a polynomial whose
/// minimal exponents are zero.
pub(crate) fn to_dense(p: &LaurentPoly) -> (Monomial, BPoly) {
    let Some((mq, ma)) = p.min_exponents() else {
        return (Monomial::ONE, Vec::new());
    };
    let (xq, xa) = p.max_exponents().unwrap();
    let mut out: BPoly = vec![vec![BigInt::zero(); (xq - mq + 1) as usize]; (xa - ma + 1) as usize];
    for (m, c) in p.terms() {
        out[(m.aexp - ma) as usize][(m.qexp - mq) as usize] = c.clone();
    }
    let out = out.into_iter().map(u_trim).collect();
    (Monomial::new(mq, ma), b_trim(out))
}

pub(crate) fn from_dense(shift: Monomial, p: &BPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (j, row) in p.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            out.add_term(
                Monomial::new(shift.qexp + i as i32, shift.aexp + j as i32),
                c.clone(),
            );
        }
    }
    out
}

/// Exact quotient of Laurent polynomials, `None` when it is not a Laurent
/// polynomial.
pub fn laurent_div_exact(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    let (sf, df) = to_dense(f);
    let (sg, dg) = to_dense(g);
    if dg.is_empty() {
        return None;
    }
    let quo = b_div_exact(&df, &dg)?;
    Some(from_dense(
        Monomial::new(sf.qexp - sg.qexp, sf.aexp - sg.aexp),
        &quo,
    ))
}

/// Gcd of two Laurent polynomials, normalized to have minimal exponents zero
/// and a positive leading coefficient.
pub fn laurent_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let (_, df) = to_dense(f);
    let (_, dg) = to_dense(g);
    let g = from_dense(Monomial::ONE, &b_gcd(&df, &dg));
    if g.leading_sign_negative() {
        -g
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_triples(t.iter().map(|&(c, i, j)| (c, i, j)))
    }

    #[test]
    fn univariate_gcd() {
        // (q-1)(q+2) and (q-1)(q-3)
        let f = lp(&[(1, 2, 0), (1, 1, 0), (-2, 0, 0)]);
        let g = lp(&[(1, 2, 0), (-4, 1, 0), (3, 0, 0)]);
        assert_eq!(laurent_gcd(&f, &g), lp(&[(1, 1, 0), (-1, 0, 0)]));
    }

    #[test]
    fn bivariate_gcd_and_division() {
        // common factor (a q - 1), cofactors (a + q^2) and (a^2 - q)
        let h = lp(&[(1, 1, 1), (-1, 0, 0)]);
        let u = lp(&[(1, 0, 1), (1, 2, 0)]);
        let v = lp(&[(1, 0, 2), (-1, 1, 0)]);
        let f = &h * &u;
        let g = &(&h * &v).shift(-3, 5) * &LaurentPoly::constant(6);
        assert_eq!(laurent_gcd(&f, &g), h);
        assert_eq!(laurent_div_exact(&f, &h), Some(u.clone()));
        assert_eq!(laurent_div_exact(&f, &v), None);
    }

    #[test]
    fn integer_content_is_part_of_the_gcd() {
        let f = lp(&[(4, 1, 1), (6, 0, 0)]);
        let g = lp(&[(2, 0, 0)]);
        assert_eq!(laurent_gcd(&f, &g), lp(&[(2, 0, 0)]));
    }
}
