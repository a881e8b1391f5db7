//! Permutations in one-line notation and their inversion statistics.

use std::collections::BTreeSet;
use std::fmt;

use crate::descent::DescentSet;
use crate::error::{Error, Result};

/// A permutation of `{1..n}` stored as its one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[x] = true;
        }
        Ok(Self(word))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self(inv)
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `w · s_x`: swaps positions `x` and `x+1` (1-based).
    pub fn times_simple(&self, x: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(x - 1, x);
        Self(w)
    }

    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        i < j && self.0[i - 1] > self.0[j - 1]
    }

    /// `{(i,j) : i < j, w(i) > w(j)}`.
    pub fn inversion_set(&self) -> BTreeSet<(usize, usize)> {
        let n = self.len();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.is_inversion(i, j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet::of_word(&self.0)
    }

    /// Descent set of the inverse, `iD(w) = D(w^{-1})`.
    pub fn inverse_descent_set(&self) -> DescentSet {
        self.inverse().descent_set()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Self::identity(n).0;
        loop {
            out.push(Self(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

/// Advances to the lexicographically next arrangement; false after the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        if self.0.iter().all(|&x| x < 10) {
            write!(f, "{}", s.concat())
        } else {
            write!(f, "[{}]", s.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inversion_set_examples() {
        assert!(Permutation::identity(3).inversion_set().is_empty());
        assert_eq!(w(&[3, 2, 1]).inversion_set().into_iter().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(w(&[2, 1, 4, 3]).inversion_set().into_iter().collect::<Vec<_>>(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn reversal_complements_inversions() {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                assert_eq!(p.inversion_set().len() + p.reverse().inversion_set().len(), n * n.saturating_sub(1) / 2);
            }
        }
    }

    #[test]
    fn all_counts() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn inverse_descents() {
        // 231: inverse is 312, descents {1}
        assert_eq!(w(&[2, 3, 1]).inverse_descent_set().elements(), vec![1]);
        assert_eq!(w(&[2, 3, 1]).descent_set().elements(), vec![2]);
    }
}
