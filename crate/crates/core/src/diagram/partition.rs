use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::DiagramError;

/// An integer partition, stored as its nonzero parts in non-increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates and strips trailing zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self, DiagramError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(DiagramError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-box partition.
    pub fn single_box() -> Self {
        Partition { parts: vec![1] }
    }

    pub fn row(n: u32) -> Self {
        if n == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![n] }
    }

    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_box(&self) -> bool {
        self.parts == [1]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `transpose[i] = #{h : parts[h] > i}`.
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Membership in the hook set of type `m|n`: the `(m+1)`-th part is at most `n`.
    pub fn is_hook(&self, m: usize, n: u32) -> bool {
        self.parts.get(m).map_or(true, |&p| p <= n)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).transpose(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn hooks() {
        // gl(2|1): a single extra column is allowed below two rows
        assert!(p(&[3, 3, 1]).is_hook(2, 1));
        assert!(!p(&[3, 3, 2]).is_hook(2, 1));
        assert!(!p(&[1, 1]).is_hook(1, 0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn transpose_is_a_size_preserving_involution(n in 0u32..=12, pick in any::<prop::sample::Index>()) {
            let all = Partition::all_of(n);
            let lam = pick.get(&all);
            let t = lam.transpose();
            prop_assert_eq!(t.size(), lam.size());
            prop_assert_eq!(&t.transpose(), lam);
        }
    }
}
