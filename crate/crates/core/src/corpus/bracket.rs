//! Kauffman bracket state sum, the Jones oracle.
//!
//! Polynomials in `A` are stored with `A` in the `q` slot. Each crossing of
//! the PD code `[a, b, c, d]` resolves as `A <a b | c d> + A^-1 <a d | b c>`,
//! which makes a positive curl `-A^3`, and a closed curve is
//! `δ = -A^2 - A^-2`.

use crate::diagram::LinkDiagram;
use crate::ring::{LaurentPoly, RingElem};

/// States are enumerated exhaustively; beyond this many crossings the oracle
/// refuses.
pub const BRACKET_MAX_CROSSINGS: usize = 20;

fn delta() -> LaurentPoly {
    -(&LaurentPoly::monomial(1, 2, 0) + &LaurentPoly::monomial(1, -2, 0))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `<D>` with `<O> = 1`.
pub fn kauffman_bracket(l: &LinkDiagram) -> Option<LaurentPoly> {
    let pd = l.to_pd();
    let n = pd.crossings.len();
    if n > BRACKET_MAX_CROSSINGS {
        return None;
    }
    let labels = 2 * n;
    // sum over states of A^(#A - #B) δ^(curves - 1), grouped by exponent
    let mut by_state: std::collections::BTreeMap<(i32, usize), i64> = Default::default();
    for state in 0u64..(1 << n) {
        let mut parent: Vec<usize> = (0..labels).collect();
        let mut aexp = 0;
        for (k, x) in pd.crossings.iter().enumerate() {
            let [a, b, c, d] = x.arcs.map(|v| v as usize);
            let pairs = if state >> k & 1 == 0 {
                aexp += 1;
                [(a, b), (c, d)]
            } else {
                aexp -= 1;
                [(a, d), (b, c)]
            };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let curves = (0..labels).filter(|&x| find(&mut parent, x) == x).count() + pd.loops;
        *by_state.entry((aexp, curves)).or_default() += 1;
    }
    let delta = delta();
    let mut total = LaurentPoly::zero();
    for ((aexp, curves), count) in by_state {
        let term = LaurentPoly::monomial(count, aexp, 0);
        total += &(&term * &delta.pow(curves as u32 - 1));
    }
    Some(total)
}

/// `(-A^3)^-w <D>`, the Jones polynomial in `A` with `t = A^-4`.
pub fn bracket_jones(l: &LinkDiagram) -> Option<LaurentPoly> {
    let w = l.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Some(kauffman_bracket(l)?.shift(-3 * w, 0).scale(&sign.into()))
}

/// The Jones polynomial as a Laurent polynomial in `s = t^{1/2}`.
pub fn jones_in_t(l: &LinkDiagram) -> Option<LaurentPoly> {
    let f = bracket_jones(l)?;
    let terms = f.terms().map(|(m, c)| {
        debug_assert!(m.qexp % 2 == 0);
        (c.clone(), -m.qexp / 2, 0)
    });
    Some(LaurentPoly::from_triples(terms))
}

/// The engine's unnormalized, writhe-normalized `d = 2` value predicted by
/// the bracket: `δ f(A)` under `A^2 = -q^-1`.
pub fn jones_oracle(l: &LinkDiagram) -> Option<RingElem> {
    Some(RingElem::from_laurent(a_to_q(&(&delta() * &bracket_jones(l)?))))
}

/// The engine's blackboard-framed `d = 2` value predicted by the bracket:
/// a positive curl contributes `q^-2 = A^4` instead of `-A^3`.
pub fn framed_jones_oracle(l: &LinkDiagram) -> Option<RingElem> {
    let w = l.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let framed = (&delta() * &kauffman_bracket(l)?).shift(w, 0).scale(&sign.into());
    Some(RingElem::from_laurent(a_to_q(&framed)))
}

/// `A^{2k} ↦ (-q)^{-k}`; every exponent occurring here is even.
fn a_to_q(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_triples(p.terms().map(|(m, c)| {
        assert!(m.qexp % 2 == 0, "odd power of A in a Jones value");
        let k = m.qexp / 2;
        let c = if k % 2 == 0 { c.clone() } else { -c.clone() };
        (c, -k, 0)
    }))
}

/// `q ↦ -A^-2` on a value free of `a`, with `A` in the `q` slot.
pub fn q_to_a(x: &RingElem) -> RingElem {
    let map = |p: &LaurentPoly| {
        LaurentPoly::from_triples(p.terms().map(|(m, c)| {
            assert!(m.aexp == 0, "value still depends on a");
            let c = if m.qexp % 2 == 0 { c.clone() } else { -c.clone() };
            (c, -2 * m.qexp, 0)
        }))
    };
    RingElem::from_fraction(map(x.num()), map(x.den())).expect("the substitution is injective")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    fn a(c: i64, e: i32) -> LaurentPoly {
        LaurentPoly::monomial(c, e, 0)
    }

    #[test]
    fn kinks_and_loops() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(2)).unwrap(), delta());
        let kink = parse_braid("braid 2: 1").unwrap().closure();
        assert_eq!(kauffman_bracket(&kink).unwrap(), a(-1, 3));
        let neg = parse_braid("braid 2: -1").unwrap().closure();
        assert_eq!(kauffman_bracket(&neg).unwrap(), a(-1, -3));
        assert_eq!(bracket_jones(&kink).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn published_trefoil() {
        // right-handed trefoil: V(t) = t + t^3 - t^4, here in s = t^{1/2}
        let tref = parse_braid("braid 2: 1 1 1").unwrap().closure();
        let expected = &(&a(1, 2) + &a(1, 6)) - &a(1, 8);
        assert_eq!(jones_in_t(&tref).unwrap(), expected);
        let fig8 = parse_braid("braid 3: 1 -2 1 -2").unwrap().closure();
        let expected = LaurentPoly::from_triples([(1, -4, 0), (-1, -2, 0), (1, 0, 0), (-1, 2, 0), (1, 4, 0)]);
        assert_eq!(jones_in_t(&fig8).unwrap(), expected);
    }

    #[test]
    fn substitutions_invert() {
        let tref = parse_braid("braid 2: 1 1 1").unwrap().closure();
        let j = jones_oracle(&tref).unwrap();
        let back = q_to_a(&j);
        let f = bracket_jones(&tref).unwrap();
        assert_eq!(back, RingElem::from_laurent(&delta() * &f));
    }
}
