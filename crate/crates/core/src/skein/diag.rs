//! Compact diagrams for the recursion, with the moves it needs.
//!
//! Slot `2c` is the over-strand entry of crossing `c` and `2c + 1` the
//! under-strand entry. `next[s]` is the slot reached after leaving crossing
//! `s / 2` along the strand that entered at `s`. An open diagram has one more
//! entry, `next[2n]`, the first slot after the inbound endpoint; [`END`] marks
//! the outbound endpoint.

use std::cmp::Ordering;

use crate::diagram::{LinkDiagram, Strand, Tangle11};

pub(crate) const END: u32 = u32::MAX;
const SEP: u32 = u32::MAX;

/// Above this size the memo key is computed from one start instead of all.
const FULL_CANONICAL_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Diag {
    pub sign: Vec<i8>,
    pub next: Vec<u32>,
    pub open: bool,
    pub loops: u32,
}

pub(crate) enum Descent {
    Violation(usize),
    Descending { closed_components: u32 },
}

impl Diag {
    pub fn from_link(l: &LinkDiagram) -> Self {
        let mut sign = Vec::with_capacity(l.crossing_count());
        let mut next = Vec::with_capacity(2 * l.crossing_count());
        for x in l.crossings() {
            sign.push(x.sign.value() as i8);
            next.push(x.next(Strand::Over).index() as u32);
            next.push(x.next(Strand::Under).index() as u32);
        }
        Diag {
            sign,
            next,
            open: false,
            loops: l.free_loops() as u32,
        }
    }

    pub fn from_tangle(t: &Tangle11) -> Self {
        let mut d = Self::from_link(t.diagram());
        let n = d.n();
        let cut = t.cut().0;
        d.open = true;
        if cut >= 2 * n {
            d.loops -= 1;
            d.next.push(END);
        } else {
            let pred = d.next.iter().position(|&s| s as usize == cut).expect("every slot has a predecessor");
            d.next[pred] = END;
            d.next.push(cut as u32);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.sign.len()
    }

    pub fn writhe(&self) -> i64 {
        self.sign.iter().map(|&s| s as i64).sum()
    }

    fn start(&self) -> Option<u32> {
        self.open.then(|| self.next[2 * self.n()])
    }

    /// Switches crossing `c`; the strands keep their routes.
    pub fn switch(&self, c: usize) -> Diag {
        let mut d = self.clone();
        let (o, u) = (2 * c as u32, 2 * c as u32 + 1);
        for t in d.next.iter_mut() {
            if *t == o {
                *t = u;
            } else if *t == u {
                *t = o;
            }
        }
        d.next.swap(2 * c, 2 * c + 1);
        d.sign[c] = -d.sign[c];
        d
    }

    /// Oriented smoothing at `c`.
    pub fn smooth(&self, c: usize) -> Diag {
        let mut removed = vec![false; self.n()];
        removed[c] = true;
        self.splice(&removed, Some(c))
    }

    /// Deletes the marked crossings. Strands pass straight through each deleted
    /// crossing, except at `smoothed` where entries are exchanged.
    pub fn splice(&self, removed: &[bool], smoothed: Option<usize>) -> Diag {
        let n = self.n();
        let through = |s: u32| -> u32 {
            if Some(s as usize / 2) == smoothed {
                s ^ 1
            } else {
                s
            }
        };
        let mut consumed = vec![false; 2 * n];
        let mut resolve = |mut t: u32| -> u32 {
            while t != END && removed[t as usize / 2] {
                consumed[t as usize] = true;
                t = self.next[through(t) as usize];
            }
            t
        };
        let mut index = vec![u32::MAX; n];
        let mut kept = 0u32;
        for c in 0..n {
            if !removed[c] {
                index[c] = kept;
                kept += 1;
            }
        }
        let mut sign = Vec::with_capacity(kept as usize);
        let mut raw_next = Vec::with_capacity(2 * kept as usize + 1);
        for c in 0..n {
            if !removed[c] {
                sign.push(self.sign[c]);
                raw_next.push(resolve(self.next[2 * c]));
                raw_next.push(resolve(self.next[2 * c + 1]));
            }
        }
        if self.open {
            raw_next.push(resolve(self.next[2 * n]));
        }
        let mut loops = self.loops;
        for s in 0..2 * n {
            if removed[s / 2] && !consumed[s] {
                loops += 1;
                let mut t = s as u32;
                loop {
                    consumed[t as usize] = true;
                    t = self.next[through(t) as usize];
                    if t as usize == s {
                        break;
                    }
                }
            }
        }
        let next = raw_next
            .into_iter()
            .map(|t| {
                if t == END {
                    END
                } else {
                    2 * index[t as usize / 2] + (t & 1)
                }
            })
            .collect();
        Diag {
            sign,
            next,
            open: self.open,
            loops,
        }
    }

    /// Crossings whose strand leaves and comes straight back.
    pub fn curls(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&c| {
                self.next[2 * c] == 2 * c as u32 + 1 || self.next[2 * c + 1] == 2 * c as u32
            })
            .collect()
    }

    /// A bigon of opposite-sign crossings where one strand is over at both.
    pub fn bigon(&self) -> Option<(usize, usize)> {
        for c1 in 0..self.n() {
            let t = self.next[2 * c1];
            if t == END || t & 1 == 1 {
                continue;
            }
            let c2 = t as usize / 2;
            if c2 == c1 || self.sign[c1] == self.sign[c2] {
                continue;
            }
            let parallel = self.next[2 * c1 + 1] == 2 * c2 as u32 + 1;
            let antiparallel = self.next[2 * c2 + 1] == 2 * c1 as u32 + 1;
            if parallel || antiparallel {
                return Some((c1, c2));
            }
        }
        None
    }

    /// Component index of every slot, plus the component count. On an open
    /// diagram the open component is number 0 whenever it meets a crossing.
    fn slot_components(&self) -> (Vec<u32>, u32) {
        let mut comp = vec![u32::MAX; 2 * self.n()];
        let mut count = 0;
        if let Some(mut t) = self.start() {
            if t != END {
                while t != END {
                    comp[t as usize] = 0;
                    t = self.next[t as usize];
                }
                count = 1;
            }
        }
        for s in 0..comp.len() {
            if comp[s] != u32::MAX {
                continue;
            }
            let mut t = s;
            while comp[t] == u32::MAX {
                comp[t] = count;
                t = self.next[t] as usize;
            }
            count += 1;
        }
        (comp, count)
    }

    /// Splits into crossing-disjoint pieces, or `None` when connected. Free
    /// loops and a crossing-free open strand are dropped.
    pub fn pieces(&self) -> Option<Vec<Diag>> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let (comp, count) = self.slot_components();
        let mut parent: Vec<u32> = (0..count).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for c in 0..n {
            let a = find(&mut parent, comp[2 * c]);
            let b = find(&mut parent, comp[2 * c + 1]);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
        let mut group_of_crossing = Vec::with_capacity(n);
        let mut groups: Vec<u32> = Vec::new();
        for c in 0..n {
            let g = find(&mut parent, comp[2 * c]);
            group_of_crossing.push(g);
            if !groups.contains(&g) {
                groups.push(g);
            }
        }
        if groups.len() == 1 {
            return None;
        }
        let open_group = match self.start() {
            Some(t) if t != END => Some(group_of_crossing[t as usize / 2]),
            _ => None,
        };
        let pieces = groups
            .into_iter()
            .map(|g| {
                let removed: Vec<bool> = group_of_crossing.iter().map(|&h| h != g).collect();
                let mut p = self.splice(&removed, None);
                p.loops = 0;
                if p.open && open_group != Some(g) {
                    p.open = false;
                    p.next.pop();
                }
                p
            })
            .collect();
        Some(pieces)
    }

    /// Slot met first at geometric position `g`: `2c` is the entry coming
    /// from the lower left, `2c + 1` the one from the lower right. Switching a
    /// crossing does not move these positions.
    fn geometric_slot(&self, g: usize) -> u32 {
        let c = g / 2;
        let left = g % 2 == 0;
        let over_from_left = self.sign[c] > 0;
        (2 * c + usize::from(left != over_from_left)) as u32
    }

    /// Walks the open strand from its inbound end, then each closed component
    /// from its base point, its first geometric position. Reports the first
    /// crossing met first on its under-strand.
    pub fn descend(&self) -> Descent {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut meet = |t: u32| -> Option<usize> {
            let c = t as usize / 2;
            if !std::mem::replace(&mut seen[c], true) && t & 1 == 1 {
                return Some(c);
            }
            None
        };
        if let Some(mut t) = self.start() {
            while t != END {
                if let Some(c) = meet(t) {
                    return Descent::Violation(c);
                }
                t = self.next[t as usize];
            }
        }
        let mut visited = vec![false; 2 * n];
        if let Some(mut t) = self.start() {
            while t != END {
                visited[t as usize] = true;
                t = self.next[t as usize];
            }
        }
        let mut closed = 0;
        for g in 0..2 * n {
            let s = self.geometric_slot(g);
            if visited[s as usize] {
                continue;
            }
            closed += 1;
            let mut t = s;
            loop {
                visited[t as usize] = true;
                if let Some(c) = meet(t) {
                    return Descent::Violation(c);
                }
                t = self.next[t as usize];
                if t == s {
                    break;
                }
            }
        }
        Descent::Descending {
            closed_components: closed,
        }
    }

    /// An encoding that determines the diagram up to renaming crossings.
    /// Small closed diagrams get the minimum over all starting slots, which
    /// makes the key a complete isomorphism invariant.
    pub fn key(&self) -> Vec<u32> {
        let n = self.n();
        if self.open {
            return self.encode(self.next[2 * n], None).expect("no bound given");
        }
        if n > FULL_CANONICAL_LIMIT {
            return self.encode(self.geometric_slot(0), None).expect("no bound given");
        }
        let mut best: Option<Vec<u32>> = None;
        for s in 0..2 * n as u32 {
            if let Some(e) = self.encode(s, best.as_deref()) {
                best = Some(e);
            }
        }
        best.expect("a diagram with crossings has slots")
    }

    /// Relabels crossings in order of first visit, starting at `start`, and
    /// writes one token per visit. Returns `None` as soon as the result is
    /// known not to be smaller than `bound`.
    fn encode(&self, start: u32, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let n = self.n();
        let mut label = vec![u32::MAX; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut visited = vec![false; 2 * n];
        let mut out: Vec<u32> = Vec::with_capacity(2 * n + 8);
        let mut state = Ordering::Equal;
        let mut push = |tok: u32, out: &mut Vec<u32>| -> bool {
            out.push(tok);
            if let (Ordering::Equal, Some(b)) = (state, bound) {
                match b.get(out.len() - 1) {
                    Some(&x) if tok > x => return false,
                    Some(&x) if tok < x => state = Ordering::Less,
                    Some(_) => {}
                    None => return false,
                }
            }
            true
        };
        if !push(u32::from(self.open), &mut out) || !push(n as u32, &mut out) {
            return None;
        }
        let mut first = Some(start);
        let mut scan = 0;
        let mut remaining = 2 * n;
        while remaining > 0 || first.is_some() {
            let s = match first.take() {
                Some(s) => s,
                None => {
                    // next component: an unvisited slot of the earliest labelled crossing
                    let mut found = None;
                    while scan < order.len() {
                        let c = order[scan];
                        if !visited[2 * c] {
                            found = Some(2 * c as u32);
                            break;
                        }
                        if !visited[2 * c + 1] {
                            found = Some(2 * c as u32 + 1);
                            break;
                        }
                        scan += 1;
                    }
                    match found {
                        Some(s) => s,
                        None => (0..2 * n).find(|&s| !visited[s]).map(|s| s as u32)?,
                    }
                }
            };
            let mut t = s;
            while t != END && !visited[t as usize] {
                visited[t as usize] = true;
                remaining -= 1;
                let c = t as usize / 2;
                if label[c] == u32::MAX {
                    label[c] = order.len() as u32;
                    order.push(c);
                }
                let tok = label[c] << 2 | (t & 1) << 1 | u32::from(self.sign[c] < 0);
                if !push(tok, &mut out) {
                    return None;
                }
                t = self.next[t as usize];
            }
            if !push(SEP, &mut out) {
                return None;
            }
        }
        if let (Ordering::Equal, Some(b)) = (state, bound) {
            if out.len() >= b.len() {
                return None;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    fn closure(s: &str) -> Diag {
        Diag::from_link(&parse_braid(s).unwrap().closure())
    }

    #[test]
    fn smoothing_a_curl_leaves_two_loops() {
        let d = closure("braid 1:");
        assert_eq!((d.n(), d.loops), (0, 1));
        let d = closure("braid 2: 1");
        assert_eq!(d.curls(), vec![0]);
        let s = d.smooth(0);
        assert_eq!((s.n(), s.loops), (0, 2));
        let k = d.splice(&[true], None);
        assert_eq!((k.n(), k.loops), (0, 1));
    }

    #[test]
    fn bigons_are_found() {
        let d = closure("braid 2: 1 -1");
        assert!(d.bigon().is_some());
        let d = closure("braid 2: 1 1");
        assert!(d.bigon().is_none());
        // the σ2 and σ2^-1 strands bound a bigon through the closure
        assert!(closure("braid 3: 1 2 -1 -2").bigon().is_some());
        // reduced alternating: every bigon face alternates
        assert!(closure("braid 3: 1 -2 1 -2").bigon().is_none());
    }

    #[test]
    fn switching_twice_is_the_identity() {
        let d = closure("braid 3: 1 -2 1 -2");
        for c in 0..d.n() {
            assert_eq!(d.switch(c).switch(c), d);
        }
    }

    #[test]
    fn keys_ignore_crossing_order() {
        // conjugate braids give relabelled closures
        let a = closure("braid 2: 1 1 1");
        let b = closure("braid 2: 1 1 1");
        assert_eq!(a.key(), b.key());
        let c = closure("braid 3: 1 -2 1 -2");
        let d = closure("braid 3: -2 1 -2 1");
        assert_eq!(c.key(), d.key());
        assert_ne!(a.key(), c.key());
        assert_ne!(closure("braid 2: 1 1").key(), closure("braid 2: -1 -1").key());
    }

    #[test]
    fn split_pieces() {
        let d = closure("braid 4: 1 1 3 3 3");
        let p = d.pieces().unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.iter().map(Diag::n).sum::<usize>(), 5);
        assert!(closure("braid 2: 1 1 1").pieces().is_none());
    }

    #[test]
    fn tangle_conversion() {
        let l = parse_braid("braid 2: 1 1 1").unwrap().closure();
        let t = Diag::from_tangle(&l.cut_component(0).unwrap());
        assert!(t.open);
        assert_eq!(t.next.iter().filter(|&&x| x == END).count(), 1);
        let id = Diag::from_tangle(&Tangle11::identity());
        assert_eq!((id.n(), id.loops, id.next.clone()), (0, 0, vec![END]));
    }
}
