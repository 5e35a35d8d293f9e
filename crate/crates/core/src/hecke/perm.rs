use std::fmt;

/// A permutation of `{0, .., r-1}` in one-line notation: entry `p` is the
/// image of position `p`. Right multiplication by `s_i` swaps positions
/// `i - 1` and `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm((0..r as u8).collect())
    }

    /// Checks that `images` is a permutation of `0..len`.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let slot = seen.get_mut(v as usize)?;
            if std::mem::replace(slot, true) {
                return None;
            }
        }
        Some(Perm(images.into_boxed_slice()))
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &v)| p == v as usize)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `ℓ(w s_i) > ℓ(w)` for the generator `s_i`, `1 ≤ i < r`.
    pub fn ascends(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// `w s_i`.
    pub fn times_generator(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Perm(w)
    }

    /// A reduced word `[i_1, .., i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.to_vec();
        let mut word = Vec::with_capacity(self.length());
        'peel: loop {
            for i in 1..w.len() {
                if w[i - 1] > w[i] {
                    w.swap(i - 1, i);
                    word.push(i);
                    continue 'peel;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (p, &v) in self.0.iter().enumerate() {
            inv[v as usize] = p as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `self` on the first strands, `other` on the following ones.
    pub fn juxtapose(&self, other: &Perm) -> Perm {
        let shift = self.0.len() as u8;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|v| v + shift)).collect())
    }

    /// All permutations of `0..r`.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut out = vec![Vec::new()];
        for m in 0..r as u8 {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u8>| {
                    (0..=w.len()).map(move |p| {
                        let mut v = w.clone();
                        v.insert(p, m);
                        v
                    })
                })
                .collect();
        }
        let mut perms: Vec<Perm> = out.into_iter().map(|v| Perm(v.into_boxed_slice())).collect();
        perms.sort();
        perms
    }
}

impl fmt::Display for Perm {
    /// One-line notation on `1..=r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut x = Perm::identity(4);
            for &i in &word {
                assert!(x.ascends(i));
                x = x.times_generator(i);
            }
            assert_eq!(x, w);
        }
    }

    #[test]
    fn counts_and_display() {
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(0), vec![Perm::identity(0)]);
        let w = Perm::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(w.to_string(), "[2 1 3]");
        assert_eq!(w.inverse(), w);
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![2, 0]).is_none());
        let longest = Perm::from_images(vec![2, 1, 0]).unwrap();
        assert_eq!(longest.length(), 3);
        assert_eq!(w.juxtapose(&w).images(), &[1, 0, 2, 4, 3, 5]);
    }
}
