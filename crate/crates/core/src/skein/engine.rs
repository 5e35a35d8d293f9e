use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use lru::LruCache;
use parking_lot::Mutex;
use rustc_hash::FxBuildHasher;
use serde::Serialize;

use crate::diagram::{LinkDiagram, Tangle11};
use crate::ring::RingElem;

use super::diag::{Descent, Diag};
use super::{SkeinError, SkeinPoly};

/// Below this many crossings both branches run on the current thread.
const PARALLEL_MIN_CROSSINGS: usize = 14;
/// Diagrams this small are cheaper to recompute than to look up.
const MEMO_MIN_CROSSINGS: usize = 3;
/// Whole diagrams passed to the engine are remembered separately, so that
/// repeated top-level evaluations survive eviction from the main memo.
const ROOT_CAPACITY: usize = 4096;

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Maximum memo entries; 0 disables the memo.
    pub memo_capacity: usize,
    /// Evaluate sibling branches on the rayon pool.
    pub parallel: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            memo_capacity: 1 << 20,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub branches: u64,
    pub descending_leaves: u64,
    pub memo_hits: u64,
    pub memo_misses: u64,
    pub curls_removed: u64,
    pub bigons_removed: u64,
    pub splits: u64,
}

#[derive(Default)]
struct Counters {
    branches: AtomicU64,
    leaves: AtomicU64,
    hits: AtomicU64,
    misses: AtomicU64,
    curls: AtomicU64,
    bigons: AtomicU64,
    splits: AtomicU64,
}

type Memo = LruCache<Box<[u32]>, SkeinPoly, FxBuildHasher>;

/// Either kind of diagram the engine evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluand {
    Closed(LinkDiagram),
    Tangle(Tangle11),
}

/// The skein evaluator with its memo.
pub struct SkeinEngine {
    config: EngineConfig,
    memo: Option<Mutex<Memo>>,
    roots: Option<Mutex<Memo>>,
    counters: Counters,
}

impl SkeinEngine {
    pub fn new(config: EngineConfig) -> Self {
        let memo = NonZeroUsize::new(config.memo_capacity)
            .map(|cap| Mutex::new(LruCache::with_hasher(cap, FxBuildHasher)));
        let roots = memo.as_ref().map(|_| {
            let cap = NonZeroUsize::new(ROOT_CAPACITY).expect("nonzero");
            Mutex::new(LruCache::with_hasher(cap, FxBuildHasher))
        });
        SkeinEngine {
            config,
            memo,
            roots,
            counters: Counters::default(),
        }
    }

    /// A process-wide engine with the default configuration.
    pub fn global() -> &'static SkeinEngine {
        static ENGINE: OnceLock<SkeinEngine> = OnceLock::new();
        ENGINE.get_or_init(|| SkeinEngine::new(EngineConfig::default()))
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn stats(&self) -> EngineStats {
        let c = &self.counters;
        let get = |a: &AtomicU64| a.load(Ordering::Relaxed);
        EngineStats {
            branches: get(&c.branches),
            descending_leaves: get(&c.leaves),
            memo_hits: get(&c.hits),
            memo_misses: get(&c.misses),
            curls_removed: get(&c.curls),
            bigons_removed: get(&c.bigons),
            splits: get(&c.splits),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.lock().len())
    }

    pub fn clear_memo(&self) {
        for m in [&self.memo, &self.roots].into_iter().flatten() {
            m.lock().clear();
        }
    }

    /// Framed value of a closed diagram.
    pub fn evaluate_closed(&self, l: &LinkDiagram) -> Result<RingElem, SkeinError> {
        Ok(self.closed_poly(l)?.to_ring_elem())
    }

    /// The scalar `α` with `T = α · id`.
    pub fn evaluate_tangle(&self, t: &Tangle11) -> Result<RingElem, SkeinError> {
        Ok(self.tangle_poly(t)?.to_ring_elem())
    }

    pub fn closed_poly(&self, l: &LinkDiagram) -> Result<SkeinPoly, SkeinError> {
        self.run(Diag::from_link(l))
    }

    pub fn tangle_poly(&self, t: &Tangle11) -> Result<SkeinPoly, SkeinError> {
        self.run(Diag::from_tangle(t))
    }

    pub fn evaluand_poly(&self, e: &Evaluand) -> Result<SkeinPoly, SkeinError> {
        match e {
            Evaluand::Closed(l) => self.closed_poly(l),
            Evaluand::Tangle(t) => self.tangle_poly(t),
        }
    }

    /// `Σ c_i · value(d_i)`; all diagrams must be of the same kind.
    pub fn evaluate_linear_combination(
        &self,
        terms: &[(RingElem, Evaluand)],
    ) -> Result<RingElem, SkeinError> {
        if let Some((_, first)) = terms.first() {
            let open = matches!(first, Evaluand::Tangle(_));
            if terms
                .iter()
                .any(|(_, e)| matches!(e, Evaluand::Tangle(_)) != open)
            {
                return Err(SkeinError::MixedBoundary);
            }
        }
        let mut acc = RingElem::zero();
        for (c, e) in terms {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(c * &self.evaluand_poly(e)?.to_ring_elem());
        }
        Ok(acc)
    }

    fn run(&self, d: Diag) -> Result<SkeinPoly, SkeinError> {
        let n = d.n();
        let limit = n * (n + 1) / 2 + 2 * n + 10;
        let key: Option<Box<[u32]>> = self.roots.as_ref().map(|_| {
            let head = [d.open as u32, d.loops];
            let signs = d.sign.iter().map(|&s| s as u32);
            head.into_iter().chain(signs).chain(d.next.iter().copied()).collect()
        });
        if let (Some(roots), Some(key)) = (&self.roots, &key) {
            if let Some(v) = roots.lock().get(key) {
                self.counters.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(v.clone());
            }
        }
        let before = self.stats();
        let v = self.eval(d, 0, limit)?;
        if let (Some(roots), Some(key)) = (&self.roots, key) {
            roots.lock().put(key, v.clone());
        }
        if log::log_enabled!(log::Level::Debug) {
            let after = self.stats();
            log::debug!(
                "evaluated {n} crossings: {} branches, {} leaves, memo {} hits / {} misses, \
                 {} curls, {} bigons, {} splits",
                after.branches - before.branches,
                after.descending_leaves - before.descending_leaves,
                after.memo_hits - before.memo_hits,
                after.memo_misses - before.memo_misses,
                after.curls_removed - before.curls_removed,
                after.bigons_removed - before.bigons_removed,
                after.splits - before.splits,
            );
        }
        Ok(v)
    }

    /// Removes curls and bigons. Returns the diagram and the accumulated
    /// power of `a`.
    fn simplify(&self, mut d: Diag) -> Result<(Diag, i32), SkeinError> {
        let mut aexp = 0;
        let limit = 2 * d.n() + 10;
        for _ in 0..limit {
            let curls = d.curls();
            if !curls.is_empty() {
                let mut removed = vec![false; d.n()];
                for &c in &curls {
                    removed[c] = true;
                    aexp -= d.sign[c] as i32;
                }
                self.counters.curls.fetch_add(curls.len() as u64, Ordering::Relaxed);
                d = d.splice(&removed, None);
                continue;
            }
            if let Some((c1, c2)) = d.bigon() {
                let mut removed = vec![false; d.n()];
                removed[c1] = true;
                removed[c2] = true;
                self.counters.bigons.fetch_add(1, Ordering::Relaxed);
                d = d.splice(&removed, None);
                continue;
            }
            return Ok((d, aexp));
        }
        Err(SkeinError::DepthExceeded { depth: limit, limit })
    }

    fn eval(&self, d: Diag, depth: usize, limit: usize) -> Result<SkeinPoly, SkeinError> {
        if depth > limit {
            return Err(SkeinError::DepthExceeded { depth, limit });
        }
        let (mut d, aexp) = self.simplify(d)?;
        let mut acc = SkeinPoly::monomial(1, 0, aexp, d.loops);
        d.loops = 0;
        if d.n() == 0 {
            return Ok(acc);
        }
        match d.pieces() {
            None => acc = acc.checked_mul(&self.eval_connected(d, depth, limit)?)?,
            Some(pieces) => {
                self.counters.splits.fetch_add(1, Ordering::Relaxed);
                for p in pieces {
                    acc = acc.checked_mul(&self.eval_connected(p, depth, limit)?)?;
                }
            }
        }
        Ok(acc)
    }

    fn eval_connected(&self, d: Diag, depth: usize, limit: usize) -> Result<SkeinPoly, SkeinError> {
        let key = match &self.memo {
            Some(m) if d.n() >= MEMO_MIN_CROSSINGS => {
                let key: Box<[u32]> = d.key().into_boxed_slice();
                if let Some(v) = m.lock().get(&key) {
                    self.counters.hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(v.clone());
                }
                self.counters.misses.fetch_add(1, Ordering::Relaxed);
                Some(key)
            }
            _ => None,
        };
        let value = match d.descend() {
            Descent::Descending { closed_components } => {
                self.counters.leaves.fetch_add(1, Ordering::Relaxed);
                SkeinPoly::monomial(1, 0, -(d.writhe() as i32), closed_components)
            }
            Descent::Violation(c) => {
                self.counters.branches.fetch_add(1, Ordering::Relaxed);
                let sign = d.sign[c];
                let switched = d.switch(c);
                let smoothed = d.smooth(c);
                let (v_switch, v_smooth) = if self.config.parallel && d.n() >= PARALLEL_MIN_CROSSINGS {
                    rayon::join(
                        || self.eval(switched, depth + 1, limit),
                        || self.eval(smoothed, depth + 1, limit),
                    )
                } else {
                    (
                        self.eval(switched, depth + 1, limit),
                        self.eval(smoothed, depth + 1, limit),
                    )
                };
                // X+ - X- = z X0, z = q^-1 - q
                v_switch?.checked_add(&v_smooth?.times(sign as i128, 1, 0, 0)?)?
            }
        };
        if let (Some(m), Some(key)) = (&self.memo, key) {
            m.lock().put(key, value.clone());
        }
        Ok(value)
    }
}
