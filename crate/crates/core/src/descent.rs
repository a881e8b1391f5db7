//! Descent sets, the index set of the fundamental quasisymmetric basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{1..n-1}` stored as a bitmask (bit `i` is element `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

impl DescentSet {
    pub const MAX_N: usize = 64;

    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in elements {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange(format!("descent {i} for n = {n}")));
            }
            mask |= 1 << i;
        }
        Ok(Self { n, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(mask & 1 == 0 && (n >= 64 || mask >> n.max(1) == 0));
        Self { n, mask }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, mask: 0 }
    }

    /// `{i : v_i > v_{i+1}}`.
    pub fn of_word(word: &[usize]) -> Self {
        let mut mask = 0u64;
        for i in 1..word.len() {
            if word[i - 1] > word[i] {
                mask |= 1 << i;
            }
        }
        Self { n: word.len(), mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask >> i & 1 == 1
    }

    pub fn is_subset_of(&self, other: &DescentSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    /// The set of partial sums of a composition (excluding the total).
    pub fn of_composition(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut mask = 0u64;
        let mut acc = 0;
        for &p in &parts[..parts.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << acc;
        }
        Self { n, mask }
    }

    /// The composition of `n` whose partial sums are this set.
    pub fn composition(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut last = 0;
        for i in self.elements() {
            out.push(i - last);
            last = i;
        }
        if self.n > 0 {
            out.push(self.n - last);
        }
        out
    }

    /// Every subset of `{1..n-1}`.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        let bits = n.saturating_sub(1);
        (0u64..1 << bits).map(move |m| Self { n, mask: m << 1 })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}_{}", self, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_check() {
        assert!(DescentSet::new(3, &[1, 2]).is_ok());
        assert!(DescentSet::new(3, &[3]).is_err());
        assert!(DescentSet::new(3, &[0]).is_err());
    }

    #[test]
    fn composition_roundtrip() {
        for d in DescentSet::all(6) {
            assert_eq!(DescentSet::of_composition(&d.composition()), d);
        }
        assert_eq!(DescentSet::all(4).count(), 8);
    }

    #[test]
    fn word_descents() {
        assert_eq!(DescentSet::of_word(&[3, 1, 2]).elements(), vec![1]);
    }
}
