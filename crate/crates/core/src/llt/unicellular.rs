use std::collections::HashMap;
use std::fmt;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::symfunc::{FundVector, SchurVector};

use super::shape::{Cell, ShapeTuple};

/// The statistics attached to a tuple: cells sorted by shifted content,
/// the counting function `f` and the partition `λ_r = f(n - r + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicellularProfile {
    pub n: usize,
    /// contents of the components, in component order
    pub contents: Vec<i32>,
    /// `w(i + 1)` is the rank of component `i` by shifted content
    pub w: Permutation,
    /// `f(1), ..., f(n)`
    pub f: Vec<usize>,
    pub lambda: Partition,
}

/// Shifted contents of every cell of `t`, sorted increasingly, paired with
/// (component, cell).
pub(crate) fn sorted_cells(t: &ShapeTuple) -> Vec<(i64, usize, Cell)> {
    let mut cells: Vec<(i64, usize, Cell)> = t
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, comp)| comp.cells().iter().map(move |c| (t.shifted_content(i, c), i, *c)))
        .collect();
    cells.sort();
    cells
}

fn counting_function(t: &ShapeTuple, weak: bool) -> Vec<usize> {
    let d = t.d() as i64;
    let sc: Vec<i64> = sorted_cells(t).iter().map(|c| c.0).collect();
    sc.iter().map(|&x| sc.iter().filter(|&&y| if weak { y <= x - d } else { y < x - d }).count()).collect()
}

fn partition_from_counts(f: &[usize], rows: usize) -> Partition {
    let n = f.len();
    Partition::new((1..=rows).map(|r| f[n - r]).collect()).expect("counting function is weakly increasing")
}

/// Profile of a tuple of single cells.
pub fn profile(t: &ShapeTuple) -> Result<UnicellularProfile> {
    let contents =
        t.single_contents().ok_or_else(|| Error::Precondition("profile needs a tuple of single cells".into()))?;
    let n = t.n();
    let sc: Vec<i64> = (0..n).map(|i| t.shifted_content(i, &Cell::new(0, 0))).collect();
    let w = Permutation::new((0..n).map(|i| sc.iter().filter(|&&y| y < sc[i]).count() + 1).collect())?;
    let f = counting_function(t, false);
    let lambda = partition_from_counts(&f, n);
    Ok(UnicellularProfile { n, contents, w, f, lambda })
}

/// The partition `λ_i = f'(n - i + 1)`, `1 ≤ i ≤ rows`, where `f'` counts
/// cells with `c̃ ≤ c̃_i - d`. Works for any tuple; the cells of the tuple
/// are ranked by shifted content.
pub fn profile_prime(t: &ShapeTuple, rows: usize) -> Partition {
    partition_from_counts(&counting_function(t, true), rows.min(t.n()))
}

/// Contents of single cells whose profile partition is `lam`.
pub fn contents_from_partition(n: usize, lam: &Partition) -> Result<Vec<i32>> {
    if !lam.in_staircase(n) {
        return Err(Error::OutsideStaircase(lam.clone(), n));
    }
    let m = lam.len();
    if m + lam.first() <= n {
        return Ok(two_diagonal_word(n, lam));
    }
    let f: Vec<usize> = (1..=n).map(|b| lam.part(n - b + 1)).collect();
    let mut x = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if !place(&f, n, &mut x, &mut used) {
        // every staircase partition is realizable; reaching here is a bug
        return Err(Error::Precondition(format!("no tuple realizes {lam}")));
    }
    let mut contents = vec![0; n];
    for &v in &x {
        contents[v % n] = (v / n) as i32;
    }
    Ok(contents)
}

fn two_diagonal_word(n: usize, lam: &Partition) -> Vec<i32> {
    let m = lam.len();
    let mut word = Vec::with_capacity(n);
    let mut prev = 0;
    for r in (1..=m).rev() {
        word.extend(std::iter::repeat_n(0, lam.part(r) - prev));
        word.push(1);
        prev = lam.part(r);
    }
    word.extend(std::iter::repeat_n(0, n - m - prev));
    word
}

// Chooses increasing shifted contents x_1 < x_2 < ... with distinct residues
// mod n so that exactly f(b) earlier values lie below x_b - n.
fn place(f: &[usize], n: usize, x: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let b = x.len();
    if b == n {
        return true;
    }
    let fb = f[b];
    let mut lo = if b == 0 { 0 } else { x[b - 1] + 1 };
    if fb >= 1 {
        lo = lo.max(x[fb - 1] + n + 1);
    }
    let hi = if fb < b { x[fb] + n - 1 } else { lo + n - 1 };
    for v in lo..=hi {
        if used[v % n] {
            continue;
        }
        used[v % n] = true;
        x.push(v);
        if place(f, n, x, used) {
            return true;
        }
        x.pop();
        used[v % n] = false;
    }
    false
}

/// A tuple of single cells realizing `lam`; uses contents 0 and 1 only when
/// `lam` fits in an `ℓ(λ) × (n − ℓ(λ))` rectangle.
pub fn tuple_from_partition(n: usize, lam: &Partition) -> Result<ShapeTuple> {
    Ok(ShapeTuple::singles(&contents_from_partition(n, lam)?))
}

/// Strictly upper triangular weights `m_ij`, `1 ≤ i < j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionMatrix {
    n: usize,
    entries: Vec<Vec<u32>>,
}

impl InversionMatrix {
    /// `entries[i][j]` for 0-based `i < j` is `m_{i+1, j+1}`; the lower part
    /// is ignored.
    pub fn new(n: usize, entries: Vec<Vec<u32>>) -> Result<Self> {
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition(format!("inversion matrix must be {n}x{n}")));
        }
        let mut entries = entries;
        for (i, row) in entries.iter_mut().enumerate() {
            row[..=i].fill(0);
        }
        let m = Self { n, entries };
        m.check_star()?;
        Ok(m)
    }

    /// All ones except zeros on `{(j, n + 1 − r) : j ≤ λ_r}`.
    pub fn from_partition(n: usize, lam: &Partition) -> Result<Self> {
        if !lam.in_staircase(n) {
            return Err(Error::OutsideStaircase(lam.clone(), n));
        }
        let mut entries = vec![vec![0; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for v in row.iter_mut().skip(i + 1) {
                *v = 1;
            }
        }
        for r in 1..=lam.len() {
            for j in 1..=lam.part(r) {
                entries[j - 1][n - r] = 0;
            }
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i - 1][j - 1]
    }

    fn check_star(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            for j in i + 1..=n {
                if self.get(i, j) != 0 {
                    continue;
                }
                for k in 1..i {
                    for l in j + 1..=n {
                        if self.get(k, l) != 0 {
                            return Err(Error::ConditionStar(i, j));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for InversionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `Σ_{i<j} m_ij [(i, j) ∈ Inv(w)]`.
pub fn inv_m(w: &Permutation, m: &InversionMatrix) -> Result<u64> {
    if w.len() != m.n() {
        return Err(Error::SizeMismatch { left: w.len(), right: m.n() });
    }
    Ok(w.inversion_set().into_iter().map(|(i, j)| u64::from(m.get(i, j))).sum())
}

/// `Σ_{w ∈ S_n} q^{inv(w, M)} F_{iD(w)}`, where `iD(w)` is the descent set
/// of `w⁻¹`.
pub fn g_m(m: &InversionMatrix) -> Result<FundVector> {
    let n = m.n();
    if n > 12 {
        return Err(Error::BoundExceeded { n, bound: 12 });
    }
    let mut counts: HashMap<u64, HashMap<u64, u64>> = HashMap::new();
    let mut word = Vec::with_capacity(n);
    let mut pos = vec![0usize; n + 1];
    permutations(m, 0, 0, &mut word, &mut pos, &mut |pos, inv| {
        let mut mask = 0u64;
        for i in 1..n {
            if pos[i + 1] < pos[i] {
                mask |= 1 << i;
            }
        }
        *counts.entry(mask).or_default().entry(inv).or_default() += 1;
    });
    let mut out = FundVector::zero(n);
    for (mask, row) in counts {
        out.add_term(
            DescentSet::from_mask(n, mask),
            LaurentPoly::from_terms(row.into_iter().map(|(e, c)| (e as i32, c))),
        );
    }
    Ok(out)
}

fn permutations(
    m: &InversionMatrix,
    used: u64,
    inv: u64,
    word: &mut Vec<usize>,
    pos: &mut [usize],
    emit: &mut impl FnMut(&[usize], u64),
) {
    let n = m.n();
    let j = word.len();
    if j == n {
        emit(pos, inv);
        return;
    }
    for v in 1..=n {
        if used >> v & 1 == 1 {
            continue;
        }
        let gained: u64 =
            word.iter().enumerate().filter(|&(_, &u)| u > v).map(|(i, _)| u64::from(m.get(i + 1, j + 1))).sum();
        word.push(v);
        pos[v] = j;
        permutations(m, used | 1 << v, inv + gained, word, pos, emit);
        word.pop();
    }
}

/// The unicellular LLT polynomial attached to `lam` through its inversion
/// matrix.
pub fn g_unicellular(n: usize, lam: &Partition) -> Result<FundVector> {
    g_m(&InversionMatrix::from_partition(n, lam)?)
}

/// How `L(n, λ)` is obtained from the conjugate of the unicellular LLT
/// polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LNormalization {
    /// `ω(G)` as is.
    Direct,
    /// `q^p · ω(G)[q⁻¹]` with `p = n(n−1)/2 − |λ|`.
    Reflected,
}

impl LNormalization {
    pub fn apply(self, n: usize, lam: &Partition, conj: SchurVector) -> SchurVector {
        match self {
            LNormalization::Direct => conj,
            LNormalization::Reflected => conj.substitute_qinv().shift(reflection_exponent(n, lam)),
        }
    }
}

impl fmt::Display for LNormalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LNormalization::Direct => "omega(G)",
            LNormalization::Reflected => "q^p omega(G)(1/q)",
        })
    }
}

/// `p = n(n−1)/2 − |λ|`.
pub fn reflection_exponent(n: usize, lam: &Partition) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32 - lam.size() as i32
}

/// `L(n, λ)` under an explicit normalization.
pub fn l_poly_with(n: usize, lam: &Partition, norm: LNormalization) -> Result<SchurVector> {
    let g = g_unicellular(n, lam)?.to_schur()?;
    Ok(norm.apply(n, lam, g.omega()))
}

/// `L(n, λ)` under the normalization selected by
/// [`l_normalization`](crate::theorems::l_normalization).
pub fn l_poly(n: usize, lam: &Partition) -> Result<SchurVector> {
    l_poly_with(n, lam, crate::theorems::l_normalization())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::llt::llt;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[usize]) -> SchurVector {
        SchurVector::basis_element(p(v))
    }

    #[test]
    fn profile_examples() {
        assert_eq!(profile(&ShapeTuple::singles(&[0, 0])).unwrap().lambda, p(&[]));
        let pr = profile(&ShapeTuple::singles(&[0, 1])).unwrap();
        assert_eq!(pr.lambda, p(&[1]));
        assert_eq!(pr.f, vec![0, 1]);
        assert_eq!(profile(&ShapeTuple::singles(&[1, 0])).unwrap().lambda, p(&[]));
        assert_eq!(profile(&ShapeTuple::singles(&[1, 0])).unwrap().w.word(), &[2, 1]);
    }

    #[test]
    fn tuple_from_partition_examples() {
        assert_eq!(contents_from_partition(2, &p(&[])).unwrap(), vec![0, 0]);
        assert_eq!(contents_from_partition(2, &p(&[1])).unwrap(), vec![0, 1]);
        assert!(contents_from_partition(3, &p(&[3])).is_err());
    }

    #[test]
    fn roundtrip_through_profile() {
        for n in 1..=7 {
            for lam in Partition::in_staircase_all(n) {
                let t = tuple_from_partition(n, &lam).unwrap();
                let pr = profile(&t).unwrap();
                assert_eq!(pr.lambda, lam, "n={n}");
                assert!(pr.f.windows(2).all(|w| w[0] <= w[1]));
                assert!(pr.f.iter().enumerate().all(|(i, &v)| v <= i));
                if lam.len() + lam.first() <= n {
                    assert!(t.single_contents().unwrap().iter().all(|&c| c == 0 || c == 1));
                }
            }
        }
    }

    #[test]
    fn inv_m_examples() {
        let ones = InversionMatrix::from_partition(3, &p(&[])).unwrap();
        assert_eq!(inv_m(&Permutation::identity(3), &ones).unwrap(), 0);
        assert_eq!(inv_m(&Permutation::new(vec![3, 2, 1]).unwrap(), &ones).unwrap(), 3);
        let mut e = vec![vec![0; 3]; 3];
        e[0][1] = 1;
        let m12 = InversionMatrix::new(3, e).unwrap();
        assert_eq!(inv_m(&Permutation::new(vec![2, 1, 3]).unwrap(), &m12).unwrap(), 1);
    }

    #[test]
    fn condition_star() {
        let mut e = vec![vec![0; 4]; 4];
        e[0][3] = 1;
        assert!(matches!(InversionMatrix::new(4, e), Err(Error::ConditionStar(2, 3))));
    }

    #[test]
    fn g_unicellular_examples() {
        assert_eq!(g_unicellular(2, &p(&[])).unwrap().to_schur().unwrap(), s(&[2]) + s(&[1, 1]).shift(1));
        assert_eq!(g_unicellular(2, &p(&[1])).unwrap().to_schur().unwrap(), s(&[2]) + s(&[1, 1]));
        let direct = llt(&tuple_from_partition(3, &p(&[1])).unwrap()).unwrap().to_schur().unwrap();
        assert_eq!(g_unicellular(3, &p(&[1])).unwrap().to_schur().unwrap(), direct);
    }

    #[test]
    fn l_small() {
        let l = l_poly_with(2, &p(&[]), LNormalization::Direct).unwrap();
        assert_eq!(l, s(&[1, 1]) + s(&[2]).shift(1));
    }
}
