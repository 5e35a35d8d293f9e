//! Acceptance suite: one PASS/FAIL line per criterion, with pinned runtime
//! limits. All comparisons are exact equalities of canonical fractions.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use brauerlink::cabling::{
    colored_value_with, colored_value_with_idempotents, CablingConfig, CabledExpansion, ColoredLink, Strategy,
};
use brauerlink::corpus::{
    alexander_oracle, brute_force_value, bundled_corpus, framed_jones_oracle, jones_in_t, jones_oracle,
    CorpusEntry, BRUTE_FORCE_MAX_CROSSINGS,
};
use brauerlink::hecke::{conjugate_idempotent, young_idempotent, HeckeElement};
use brauerlink::invariants::{
    self, alexander, colored_d, colored_homfly, d_polynomial, framing_normalize, homfly, jones, reduced,
    reduced_by_cutting, Link,
};
use brauerlink::{
    beta_expand, colored_trace, evaluate_closed, parse_braid, BraidWord, Labeling, LaurentPoly, Partition,
    RingElem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn z() -> RingElem {
    RingElem::skein_coefficient()
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn value(b: &BraidWord) -> RingElem {
    evaluate_closed(&b.closure()).unwrap()
}

fn random_braid(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

fn random_closure(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_len);
    random_braid(rng, strands, len)
}

fn with_letters(b: &BraidWord, letters: Vec<i32>) -> BraidWord {
    BraidWord::new(b.strands(), letters).unwrap()
}

fn corpus_links() -> Vec<(CorpusEntry, Link)> {
    bundled_corpus()
        .into_iter()
        .map(|e| {
            let l = e.link().unwrap();
            (e, l)
        })
        .collect()
}

/// Colored values shared between criteria.
struct ColoredCache(Mutex<HashMap<(String, Labeling), RingElem>>);

impl ColoredCache {
    fn get(&self, name: &str, link: &Link, labeling: &Labeling) -> RingElem {
        let key = (name.to_string(), labeling.clone());
        if let Some(v) = self.0.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = colored_homfly(link, labeling).unwrap().value;
        self.0.lock().unwrap().insert(key, v.clone());
        v
    }
}

/// Every labeling of `n` components by the given partitions.
fn labelings(n: usize, labels: &[Partition]) -> Vec<Labeling> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Partition>| {
                labels.iter().map(move |l| {
                    let mut w = v.clone();
                    w.push(l.clone());
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Labeling::from_labels).collect()
}

fn c1_unknot() -> Outcome {
    let unknot: Link = parse_braid("braid 1:").unwrap().into();
    ensure!(homfly(&unknot).unwrap().value == RingElem::loop_value(), "unknot is not [t]");
    let kink: Link = parse_braid("braid 2: 1").unwrap().into();
    let expected = &RingElem::loop_value() * &RingElem::monomial(1, 0, -1);
    ensure!(homfly(&kink).unwrap().value == expected, "positive kink is not [t] q^-t");
    let pd_unknot: Link = brauerlink::LinkDiagram::unknot().into();
    ensure!(homfly(&pd_unknot).unwrap().value == RingElem::loop_value(), "crossing-free unknot");
    Ok("unknot = [t], positive kink = [t] q^-t".into())
}

fn c2_skein() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 0..50 {
        let b = random_closure(&mut rng, 8);
        let k = rng.gen_range(0..b.len());
        let i = b.letters()[k].abs();
        let mut plus = b.letters().to_vec();
        plus[k] = i;
        let mut minus = plus.clone();
        minus[k] = -i;
        let mut zero = plus.clone();
        zero.remove(k);
        let (p, m, o) = (
            value(&with_letters(&b, plus)),
            value(&with_letters(&b, minus)),
            value(&with_letters(&b, zero)),
        );
        ensure!(&p - &m == &z() * &o, "triple {n} from {b} at letter {k}");
    }
    Ok("50 triples, up to 8 crossings".into())
}

fn c3_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..50 {
        let strands = rng.gen_range(3..=4);
        let len = rng.gen_range(1..=6);
        let b = random_braid(&mut rng, strands, len);
        let v = value(&b);
        let letters = b.letters().to_vec();
        let k = rng.gen_range(0..=letters.len());
        let i = rng.gen_range(1..strands as i32 - 1);
        let insert = |w: &[i32]| {
            let mut l = letters.clone();
            l.splice(k..k, w.iter().copied());
            with_letters(&b, l)
        };
        ensure!(
            value(&insert(&[i, i + 1, i])) == value(&insert(&[i + 1, i, i + 1])),
            "braid relation, word {n}: {b}"
        );
        let far = (1..strands as i32).find(|&j| (j - i).abs() >= 2);
        if let Some(j) = far {
            ensure!(value(&insert(&[i, j])) == value(&insert(&[j, i])), "far commutation, word {n}");
        }
        ensure!(value(&insert(&[i, -i])) == v, "σσ⁻¹ cancellation, word {n}: {b}");
        ensure!(value(&insert(&[-i, i])) == v, "σ⁻¹σ cancellation, word {n}: {b}");
        let mut rotated = letters.clone();
        rotated.rotate_left(1);
        ensure!(value(&with_letters(&b, rotated)) == v, "rotation, word {n}: {b}");
        let g = if rng.gen_bool(0.5) { i } else { -i };
        let mut conj = vec![g];
        conj.extend(&letters);
        conj.push(-g);
        ensure!(value(&with_letters(&b, conj)) == v, "conjugation, word {n}: {b}");
        for positive in [true, false] {
            let s = b.stabilize(positive);
            let vs = value(&s);
            let shift = if positive { -1 } else { 1 };
            ensure!(vs == v.scale_monomial(0, shift), "stabilization {positive}, word {n}: {b}");
            let lb: Link = b.clone().into();
            let ls: Link = s.clone().into();
            let nb = framing_normalize(&homfly(&lb).unwrap(), lb.writhe()).unwrap();
            let ns = framing_normalize(&homfly(&ls).unwrap(), ls.writhe()).unwrap();
            ensure!(nb.value == ns.value, "normalized stabilization {positive}, word {n}: {b}");
        }
    }
    Ok("50 words: braid relations, cancellation, conjugation, stabilization".into())
}

fn c4_oracle() -> Outcome {
    let mut checked = 0;
    for (e, l) in corpus_links() {
        if l.diagram().crossing_count() <= BRUTE_FORCE_MAX_CROSSINGS {
            let b = brute_force_value(l.diagram()).unwrap();
            ensure!(b == evaluate_closed(l.diagram()).unwrap(), "corpus entry {}", e.name);
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 0..50 {
        let b = random_closure(&mut rng, 10);
        let l = b.closure();
        ensure!(brute_force_value(&l).unwrap() == value(&b), "random closure {n}: {b}");
    }
    Ok(format!("{checked} corpus diagrams, 50 random closures"))
}

fn c5_specialization() -> Outcome {
    let mut links: Vec<Link> = corpus_links().into_iter().map(|(_, l)| l).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    links.extend((0..20).map(|_| random_closure(&mut rng, 8).into()));
    for (n, l) in links.iter().enumerate() {
        let h = homfly(l).unwrap().value;
        beta_expand(&h).map_err(|e| format!("link {n}: {e}"))?;
        for d in -2..=3 {
            let p = d_polynomial(l, d).unwrap().value;
            ensure!(p == h.specialize_d(d).unwrap(), "link {n}, d = {d}");
            ensure!(p.is_laurent() && p.is_q_only(), "link {n}, d = {d} not Laurent");
        }
    }
    Ok(format!("{} links, d in -2..=3", links.len()))
}

fn c6_vanishing(cache: &ColoredCache) -> Outcome {
    let labels = [Partition::single_box(), part(&[2]), part(&[1, 1])];
    let mut count = 0;
    for (e, l) in corpus_links() {
        for lab in labelings(l.components(), &labels) {
            let v = cache.get(&e.name, &l, &lab);
            ensure!(v.specialize_d(0).unwrap().is_zero(), "{} labeled {lab}", e.name);
            ensure!(colored_d(&l, &lab, 0).unwrap().value.is_zero(), "{} labeled {lab}", e.name);
            count += 1;
        }
    }
    Ok(format!("{count} labeled links vanish at d = 0"))
}

fn c7_idempotents() -> Outcome {
    for n in 1..=4 {
        for lambda in Partition::all_of(n) {
            let p = &young_idempotent(&lambda).unwrap().element;
            ensure!(p.checked_mul(p).unwrap() == *p, "p_{lambda} is not idempotent");
        }
    }
    let sum = young_idempotent(&part(&[2]))
        .unwrap()
        .element
        .checked_add(&young_idempotent(&part(&[1, 1])).unwrap().element)
        .unwrap();
    ensure!(sum == HeckeElement::identity(2), "p_(2) + p_(1,1) = {sum}");

    let mut count = 0;
    for (e, l) in corpus_links() {
        for lambda in [part(&[2]), part(&[1, 1]), part(&[3]), part(&[2, 1]), part(&[1, 1, 1])] {
            let r = lambda.size();
            let x = if r == 2 {
                HeckeElement::from_word(2, &[1]).unwrap()
            } else {
                HeckeElement::from_word(3, &[1, -2]).unwrap()
            };
            let p = young_idempotent(&lambda).unwrap();
            let conj = conjugate_idempotent(&p, &x).unwrap();
            if lambda == part(&[2, 1]) {
                ensure!(conj.element != p.element, "conjugate of p_{lambda} coincides with it");
            }
            let lab = Labeling::uniform(l.components(), lambda.clone());
            let cl = match l.braid() {
                Some(b) => ColoredLink::from_braid(b, lab.clone()).unwrap(),
                None => ColoredLink::new(l.diagram().clone(), lab.clone()).unwrap(),
            };
            let plain = vec![p.element.clone(); l.components()];
            let conjugated = vec![conj.element.clone(); l.components()];
            let a = colored_value_with_idempotents(&cl, &plain, Strategy::Auto).unwrap();
            let b = colored_value_with_idempotents(&cl, &conjugated, Strategy::Auto).unwrap();
            ensure!(a == b, "{} labeled {lambda}: conjugation changes the value", e.name);
            count += 1;
        }
    }
    Ok(format!("p^2 = p for |λ| <= 4, p_(2) + p_(1,1) = 1, {count} conjugation checks"))
}

fn c8_factorization(cache: &ColoredCache) -> Outcome {
    let labels = [Partition::single_box(), part(&[2]), part(&[1, 1])];
    let mut cuts = 0;
    for (e, l) in corpus_links() {
        for lambda in &labels {
            let lab = Labeling::uniform(l.components(), lambda.clone());
            let closed = cache.get(&e.name, &l, &lab);
            let red = reduced(&l, &lab, 0, None).unwrap().value;
            ensure!(
                closed == &colored_trace(lambda).unwrap() * &red,
                "{} labeled {lab}: closed value is not trace times reduced",
                e.name
            );
            for arc in &l.diagram().components()[0].arcs {
                let direct = reduced_by_cutting(&l, &lab, 0, Some(*arc)).unwrap().value;
                ensure!(direct == red, "{} labeled {lab}: cut at arc {arc} differs", e.name);
                cuts += 1;
            }
        }
    }
    Ok(format!("{cuts} cut points agree with the closed value"))
}

fn c9_mirror(cache: &ColoredCache) -> Outcome {
    let labels = [Partition::single_box(), part(&[2]), part(&[1, 1]), part(&[2, 1])];
    let mut count = 0;
    for (e, l) in corpus_links() {
        let h = homfly(&l).unwrap().value;
        ensure!(h.mirror_tau() == h, "{}: uncolored value not fixed by q -> -1/q", e.name);
        let mut labs: Vec<Labeling> = labels
            .iter()
            .map(|p| Labeling::uniform(l.components(), p.clone()))
            .collect();
        if l.components() == 2 {
            labs.push(Labeling::from_labels(vec![part(&[2]), part(&[1, 1])]));
            labs.push(Labeling::from_labels(vec![part(&[2, 1]), Partition::single_box()]));
        }
        for lab in labs {
            let lhs = cache.get(&e.name, &l, &lab).mirror_tau();
            let rhs = cache.get(&e.name, &l, &lab.transpose());
            ensure!(lhs == rhs, "{} labeled {lab}", e.name);
            count += 1;
        }
    }
    Ok(format!("{count} labeled links satisfy the mirror identity"))
}

fn c10_named() -> Outcome {
    let tref = parse_braid("braid 2: 1 1 1").unwrap();
    let fig8 = parse_braid("braid 3: 1 -2 1 -2").unwrap();
    // published: right trefoil t + t^3 - t^4, figure-eight t^-2 - t^-1 + 1 - t + t^2, in s = t^{1/2}
    let pub_tref = LaurentPoly::from_triples([(1, 2, 0), (1, 6, 0), (-1, 8, 0)]);
    let pub_fig8 = LaurentPoly::from_triples([(1, -4, 0), (-1, -2, 0), (1, 0, 0), (-1, 2, 0), (1, 4, 0)]);
    ensure!(jones_in_t(&tref.closure()).unwrap() == pub_tref, "bracket oracle vs table, trefoil");
    ensure!(jones_in_t(&fig8.closure()).unwrap() == pub_fig8, "bracket oracle vs table, figure-eight");
    for (name, b) in [("trefoil", &tref), ("figure-eight", &fig8)] {
        let l: Link = b.into();
        ensure!(
            jones(&l).unwrap().value == jones_oracle(&b.closure()).unwrap(),
            "{name}: Jones differs from the bracket under q = -A^-2"
        );
        ensure!(
            alexander(&l).unwrap().value == alexander_oracle(b).unwrap(),
            "{name}: Alexander differs from the Burau oracle under t = q^-2"
        );
    }
    // published Alexander: trefoil t - 1 + t^-1, figure-eight -t + 3 - t^-1
    let a_tref = alexander(&(&tref).into()).unwrap().value;
    let a_fig8 = alexander(&(&fig8).into()).unwrap().value;
    ensure!(
        a_tref == RingElem::from_laurent(LaurentPoly::from_triples([(1, -2, 0), (-1, 0, 0), (1, 2, 0)])),
        "trefoil Alexander {a_tref}"
    );
    ensure!(
        a_fig8 == RingElem::from_laurent(LaurentPoly::from_triples([(-1, -2, 0), (3, 0, 0), (-1, 2, 0)])),
        "figure-eight Alexander {a_fig8}"
    );
    Ok("Jones vs Kauffman bracket, Alexander vs Burau, both anchored to tables".into())
}

fn c11_colored_trefoil() -> Outcome {
    let tref = parse_braid("braid 2: 1 1 1").unwrap();
    let lab = Labeling::from_labels(vec![part(&[2])]);
    let cl = ColoredLink::new(tref.closure(), lab.clone()).unwrap();
    let skein = CablingConfig {
        strategy: Strategy::Skein,
        ..Default::default()
    };
    let expansion = CabledExpansion::new(&cl, skein.bound).unwrap();
    let cable_crossings = expansion.terms()[0].1.crossing_count();
    ensure!(cable_crossings == 12, "cable has {cable_crossings} crossings");
    let generic = colored_value_with(&cl, &skein).unwrap();
    let at_two = generic.specialize_d(2).unwrap();
    let mut oracle = RingElem::zero();
    for (c, d) in expansion.terms() {
        let c = c.specialize_d(2).unwrap();
        oracle = &oracle + &(&c * &framed_jones_oracle(d).unwrap());
    }
    ensure!(at_two == oracle, "d = 2 value {at_two} differs from the cabled bracket {oracle}");
    let via_trace = invariants::colored_homfly_with(
        &(&tref).into(),
        &lab,
        &CablingConfig {
            strategy: Strategy::Trace,
            ..Default::default()
        },
    )
    .unwrap();
    ensure!(via_trace.value == generic, "trace route disagrees");
    Ok(format!(
        "12-crossing cable, {} expansion terms, d = 2 matches the cabled bracket",
        expansion.len()
    ))
}

fn main() -> ExitCode {
    let cache = ColoredCache(Mutex::new(HashMap::new()));
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("unknot values", Duration::from_secs(1), Box::new(c1_unknot)),
        ("skein relation suite", Duration::from_secs(60), Box::new(c2_skein)),
        ("invariance suite", Duration::from_secs(60), Box::new(c3_invariance)),
        ("oracle equivalence", Duration::from_secs(120), Box::new(c4_oracle)),
        ("specialization", Duration::from_secs(60), Box::new(c5_specialization)),
        ("vanishing at d = 0", Duration::from_secs(300), Box::new(|| c6_vanishing(&cache))),
        ("idempotent suite", Duration::from_secs(300), Box::new(c7_idempotents)),
        ("closed = trace x reduced", Duration::from_secs(300), Box::new(|| c8_factorization(&cache))),
        ("mirror symmetry", Duration::from_secs(300), Box::new(|| c9_mirror(&cache))),
        ("named polynomial oracles", Duration::from_secs(60), Box::new(c10_named)),
        ("colored trefoil", Duration::from_secs(300), Box::new(c11_colored_trefoil)),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {:<26} {:>9.3}s (limit {}s)  {}",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            elapsed.as_secs_f64(),
            limit.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
