//! Integer partitions and the strip combinatorics used by Pieri rules.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// The total order is by size first, then reverse-lexicographic, so that
/// within one degree `(n)` comes first and `(1^n)` last. This order is a
/// linear extension of dominance (more dominant partitions come first).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and strips trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    /// Builds a partition from parts known to be valid. Trailing zeros are
    /// dropped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The staircase `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Self {
        Self((1..=m).rev().collect())
    }

    /// The rectangle `cols^rows`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self(vec![cols; rows])
    }

    /// `2^twos 1^ones`.
    pub fn two_one(twos: usize, ones: usize) -> Self {
        let mut v = vec![2; twos];
        v.extend(std::iter::repeat_n(1, ones));
        Self(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.first();
        Self((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Main hook length `λ_1 + ℓ(λ) - 1` (zero for the empty partition).
    pub fn main_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.first() + self.len() - 1
        }
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_rectangle(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// `λ ⊆ (n-1, n-2, ..., 1)`.
    pub fn in_staircase(&self, n: usize) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i + p < n)
    }

    /// Dominance `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    /// Replaces the 1-based part `i` by `value`, failing if the result is not
    /// a partition.
    pub fn with_part(&self, i: usize, value: usize) -> Result<Self> {
        let mut v = self.0.clone();
        if v.len() < i {
            v.resize(i, 0);
        }
        v[i - 1] = value;
        Self::new(v)
    }

    /// All `λ ⊇ self` with `λ/self` a horizontal strip of size `r`.
    pub fn add_horizontal_strips(&self, r: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len() + 1);
        self.add_hstrip_rec(0, r, &mut cur, &mut out);
        out
    }

    fn add_hstrip_rec(&self, i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let len = self.len();
        if i == len + 1 {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = self.0.get(i).copied().unwrap_or(0);
        let hi = if i == 0 { lo + rem } else { self.0[i - 1] };
        if i == len {
            // the new row takes whatever remains
            if rem <= hi {
                cur.push(rem);
                self.add_hstrip_rec(i + 1, 0, cur, out);
                cur.pop();
            }
            return;
        }
        for v in lo..=hi.min(lo + rem) {
            cur.push(v);
            self.add_hstrip_rec(i + 1, rem - (v - lo), cur, out);
            cur.pop();
        }
    }

    /// All `μ ⊆ self` with `self/μ` a horizontal strip of size `r`.
    pub fn remove_horizontal_strips(&self, r: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.remove_hstrip_rec(0, r, &mut cur, &mut out);
        out
    }

    fn remove_hstrip_rec(&self, i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == self.len() {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let top = self.0[i];
        let lo = self.0.get(i + 1).copied().unwrap_or(0).max(top.saturating_sub(rem));
        for v in lo..=top {
            cur.push(v);
            self.remove_hstrip_rec(i + 1, rem - (top - v), cur, out);
            cur.pop();
        }
    }

    pub fn add_vertical_strips(&self, r: usize) -> Vec<Partition> {
        self.conjugate().add_horizontal_strips(r).into_iter().map(|p| p.conjugate()).collect()
    }

    pub fn remove_vertical_strips(&self, r: usize) -> Vec<Partition> {
        self.conjugate().remove_horizontal_strips(r).into_iter().map(|p| p.conjugate()).collect()
    }

    /// All partitions of `n`, in the canonical order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, usize::MAX)
    }

    /// Partitions of `n` with largest part at most `max_part` and at most
    /// `max_len` parts, canonical order.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if len_left == 0 {
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, len_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition inside the `rows × cols` rectangle (any size).
    pub fn in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=rows * cols).flat_map(|s| Self::bounded(s, cols, rows)).collect();
        out.sort();
        out
    }

    /// Every partition inside the staircase `(n-1, ..., 1)`.
    pub fn in_staircase_all(n: usize) -> Vec<Partition> {
        let max = n * n.saturating_sub(1) / 2;
        (0..=max)
            .flat_map(|s| Self::bounded(s, n.saturating_sub(1), n.saturating_sub(1)))
            .filter(|p| p.in_staircase(n))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; empty string, `0`, or `∅` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{s}: {e}")))?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn parse_strips_zeros() {
        assert_eq!("3,1,0".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn canonical_order_is_reverse_lex() {
        let all = Partition::all(4);
        assert_eq!(all, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
        // order extends dominance
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!b.dominates(a) || a == b);
            }
        }
    }

    #[test]
    fn horizontal_strips_of_11() {
        let mut v = p(&[1, 1]).add_horizontal_strips(1);
        v.sort();
        assert_eq!(v, vec![p(&[2, 1]), p(&[1, 1, 1])]);
        let mut w = p(&[2, 1]).remove_horizontal_strips(1);
        w.sort();
        assert_eq!(w, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[2]).remove_horizontal_strips(2), vec![Partition::empty()]);
    }

    #[test]
    fn strip_counts_match_pieri_dimensions() {
        // h_1^n expands into f^λ s_λ; Σ f^λ over λ ⊢ 4 with multiplicity is 4! / ... check count of chains
        let mut chains = vec![Partition::empty()];
        for _ in 0..4 {
            chains = chains.iter().flat_map(|c| c.add_horizontal_strips(1)).collect();
        }
        // number of SYT of all shapes of size 4 = 10
        assert_eq!(chains.len(), 10);
    }

    #[test]
    fn staircase_containment() {
        assert!(p(&[1, 1]).in_staircase(6));
        assert!(!p(&[2]).in_staircase(2));
        assert_eq!(Partition::in_staircase_all(3).len(), 5);
        assert_eq!(Partition::in_staircase_all(4).len(), 14);
    }

    #[test]
    fn rectangle_enumeration() {
        assert_eq!(Partition::in_rectangle(2, 2).len(), 6);
        assert_eq!(Partition::in_rectangle(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn hook_and_union() {
        assert_eq!(p(&[2, 1, 1]).main_hook(), 4);
        assert_eq!(p(&[1, 1]).union(&p(&[2, 1])), p(&[2, 1, 1, 1]));
    }
}
