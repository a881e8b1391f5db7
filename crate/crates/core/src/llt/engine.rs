use std::collections::{BTreeMap, BTreeSet};

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::symfunc::{FundVector, SchurVector};

use super::shape::{Cell, ShapeTuple};

/// Default limit on the number of cells for exhaustive enumeration.
pub const DEFAULT_BOUND: usize = 10;

/// Entries of a filling, one vector per component aligned with
/// [`Component::cells`](super::Component::cells).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardFilling {
    entries: Vec<Vec<usize>>,
}

impl StandardFilling {
    /// Validates that `entries` is a standard filling of `shape`.
    pub fn new(shape: &ShapeTuple, entries: Vec<Vec<usize>>) -> Result<Self> {
        let f = Self { entries };
        f.check(shape)?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(entries: Vec<Vec<usize>>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn component(&self, i: usize) -> &[usize] {
        &self.entries[i]
    }

    fn check(&self, shape: &ShapeTuple) -> Result<()> {
        let n = shape.n();
        if self.entries.len() != shape.d() {
            return Err(Error::NotStandard("wrong number of components".into()));
        }
        let mut seen = vec![false; n + 1];
        for (comp, vals) in shape.components().iter().zip(&self.entries) {
            if vals.len() != comp.len() {
                return Err(Error::NotStandard("component size mismatch".into()));
            }
            for &v in vals {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::NotStandard(format!("entry {v} repeated or out of range")));
                }
                seen[v] = true;
            }
            for (i, a) in comp.cells().iter().enumerate() {
                for (j, b) in comp.cells().iter().enumerate() {
                    let right = a.row == b.row && b.col == a.col + 1;
                    let below = a.col == b.col && b.row == a.row + 1;
                    if (right || below) && vals[i] >= vals[j] {
                        return Err(Error::NotStandard(format!("entries decrease at {a:?} -> {b:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Cells of a tuple laid out in increasing shifted content (the content
/// reading order), with the poset and attack relations as bitmasks over
/// reading positions.
#[derive(Clone, Debug)]
pub(crate) struct ReadingLayout {
    pub n: usize,
    /// (component, index within component) per reading position
    pub cells: Vec<(usize, usize)>,
    /// cells that must hold a smaller entry
    pub below: Vec<u64>,
    /// earlier positions `a` with `0 < c̃(p) - c̃(a) < d`
    pub attack_before: Vec<u64>,
    /// later positions `b` with `0 < c̃(b) - c̃(p) < d`
    pub attack_after: Vec<u64>,
}

impl ReadingLayout {
    pub fn new(shape: &ShapeTuple) -> Self {
        let d = shape.d() as i64;
        // within one diagonal of a component, lower cells are read first
        let mut cells: Vec<(i64, i32, usize, usize)> = Vec::new();
        for (i, comp) in shape.components().iter().enumerate() {
            for (j, cell) in comp.cells().iter().enumerate() {
                cells.push((shape.shifted_content(i, cell), -cell.row, i, j));
            }
        }
        cells.sort();
        let n = cells.len();
        assert!(n < 64);
        let pos_of = |comp: usize, idx: usize| cells.iter().position(|&(_, _, c, j)| c == comp && j == idx);
        let mut below = vec![0u64; n];
        for (p, &(_, _, ci, j)) in cells.iter().enumerate() {
            let comp = &shape.components()[ci];
            let cell = comp.cells()[j];
            for (k, other) in comp.cells().iter().enumerate() {
                let left = other.row == cell.row && other.col + 1 == cell.col;
                let above = other.col == cell.col && other.row + 1 == cell.row;
                if left || above {
                    below[p] |= 1 << pos_of(ci, k).unwrap();
                }
            }
        }
        let shifted: Vec<i64> = cells.iter().map(|c| c.0).collect();
        let mut attack_before = vec![0u64; n];
        let mut attack_after = vec![0u64; n];
        for a in 0..n {
            for b in a + 1..n {
                let gap = shifted[b] - shifted[a];
                if gap > 0 && gap < d {
                    attack_before[b] |= 1 << a;
                    attack_after[a] |= 1 << b;
                }
            }
        }
        Self { n, cells: cells.iter().map(|&(_, _, c, j)| (c, j)).collect(), below, attack_before, attack_after }
    }

    /// Visits every standard filling as `value → reading position`, together
    /// with its inversion number and the descent set of its reading word's
    /// inverse.
    pub fn for_each_filling(&self, mut visit: impl FnMut(&[usize], usize, u64)) {
        let mut pos_of_value = Vec::with_capacity(self.n);
        self.dfs(0, 0, 0, 0, &mut pos_of_value, &mut visit);
    }

    fn dfs(
        &self,
        filled: u64,
        inv: usize,
        des: u64,
        depth: usize,
        pos_of_value: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize], usize, u64),
    ) {
        if depth == self.n {
            visit(pos_of_value, inv, des);
            return;
        }
        for p in 0..self.n {
            if filled >> p & 1 == 1 || self.below[p] & filled != self.below[p] {
                continue;
            }
            // filled cells hold smaller values: a later-content attacker is
            // an inversion, an earlier-content one is not
            let gained = (self.attack_after[p] & filled).count_ones() as usize;
            let mut d = des;
            if let Some(&prev) = pos_of_value.last() {
                if p < prev {
                    d |= 1 << depth;
                }
            }
            pos_of_value.push(p);
            self.dfs(filled | 1 << p, inv + gained, d, depth + 1, pos_of_value, visit);
            pos_of_value.pop();
        }
    }
}

/// The HHL inversion number: pairs `(x, y)` with `0 < c̃(y) - c̃(x) < d`
/// and `T(x) > T(y)`.
pub fn inv_d(shape: &ShapeTuple, filling: &StandardFilling) -> Result<usize> {
    filling.check(shape)?;
    let d = shape.d() as i64;
    let mut flat = Vec::new();
    for (i, comp) in shape.components().iter().enumerate() {
        for (j, cell) in comp.cells().iter().enumerate() {
            flat.push((shape.shifted_content(i, cell), filling.entries[i][j]));
        }
    }
    let mut count = 0;
    for &(cx, tx) in &flat {
        for &(cy, ty) in &flat {
            let gap = cy - cx;
            if gap > 0 && gap < d && tx > ty {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Every standard filling of `shape`.
pub fn standard_fillings(shape: &ShapeTuple) -> Vec<StandardFilling> {
    let layout = ReadingLayout::new(shape);
    let mut out = Vec::new();
    layout.for_each_filling(|pos_of_value, _, _| {
        let mut entries: Vec<Vec<usize>> = shape.components().iter().map(|c| vec![0; c.len()]).collect();
        for (v, &p) in pos_of_value.iter().enumerate() {
            let (c, j) = layout.cells[p];
            entries[c][j] = v + 1;
        }
        out.push(StandardFilling::new_unchecked(entries));
    });
    out
}

/// `Σ_{T ∈ SYT} q^{inv_d(T)} F_{des(T)}` for a tuple of at most
/// [`DEFAULT_BOUND`] cells.
pub fn llt(shape: &ShapeTuple) -> Result<FundVector> {
    llt_with_bound(shape, DEFAULT_BOUND)
}

pub fn llt_with_bound(shape: &ShapeTuple, bound: usize) -> Result<FundVector> {
    let n = shape.n();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    if n >= 63 {
        return Err(Error::BoundExceeded { n, bound: 62 });
    }
    let layout = ReadingLayout::new(shape);
    let max_inv = n * n.saturating_sub(1) / 2;
    // counts[descent mask][inv]
    let mut counts: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    layout.for_each_filling(|_, inv, des| {
        counts.entry(des).or_insert_with(|| vec![0; max_inv + 1])[inv] += 1;
    });
    let mut out = FundVector::zero(n);
    for (mask, row) in counts {
        let poly = LaurentPoly::from_terms(row.iter().enumerate().filter(|(_, &c)| c > 0).map(|(e, &c)| (e as i32, c)));
        out.add_term(DescentSet::from_mask(n, mask), poly);
    }
    Ok(out)
}

/// The Schur expansion of [`llt`].
pub fn llt_schur(shape: &ShapeTuple) -> Result<SchurVector> {
    llt(shape)?.to_schur()
}

/// `Σ_{T ∈ SSYT, entries ≤ vars} q^{inv_d(T)} x^T`, computed directly from
/// semistandard fillings. Keys are exponent vectors of length `vars`.
pub fn llt_specialized(shape: &ShapeTuple, vars: usize) -> BTreeMap<Vec<usize>, LaurentPoly> {
    let d = shape.d() as i64;
    let mut cells = Vec::new();
    for (i, comp) in shape.components().iter().enumerate() {
        let base = cells.len();
        for cell in comp.cells() {
            let left = comp.position(&Cell::new(cell.row, cell.col - 1)).map(|k| base + k);
            let up = comp.position(&Cell::new(cell.row - 1, cell.col)).map(|k| base + k);
            cells.push((shape.shifted_content(i, cell), left, up));
        }
    }
    let n = cells.len();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let gap = cells[b].0 - cells[a].0;
            if gap > 0 && gap < d {
                pairs.push((a, b));
            }
        }
    }
    let mut out: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
    let mut vals = vec![0usize; n];
    fill_ssyt(0, &cells, vars, &mut vals, &mut |vals| {
        let inv = pairs.iter().filter(|&&(a, b)| vals[a] > vals[b]).count();
        let mut exps = vec![0; vars];
        for &v in vals.iter() {
            exps[v] += 1;
        }
        out.entry(exps).or_default().add_term(inv as i32, 1.into());
    });
    out.retain(|_, c| !c.is_zero());
    out
}

type SsytCell = (i64, Option<usize>, Option<usize>);

fn fill_ssyt(k: usize, cells: &[SsytCell], vars: usize, vals: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if k == cells.len() {
        emit(vals);
        return;
    }
    let (_, left, up) = cells[k];
    let mut lo = 0;
    if let Some(l) = left {
        lo = lo.max(vals[l]);
    }
    if let Some(u) = up {
        lo = lo.max(vals[u] + 1);
    }
    for v in lo..vars {
        vals[k] = v;
        fill_ssyt(k + 1, cells, vars, vals, emit);
    }
}

/// Pairs of reading positions counted by `inv_d`, for callers that want the
/// attack graph explicitly.
pub fn attacking_pairs(shape: &ShapeTuple) -> BTreeSet<(usize, usize)> {
    let layout = ReadingLayout::new(shape);
    let mut out = BTreeSet::new();
    for b in 0..layout.n {
        for a in 0..b {
            if layout.attack_before[b] >> a & 1 == 1 {
                out.insert((a + 1, b + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::llt::{Component, TwoDiagTuple};
    use crate::partition::Partition;

    fn s(v: &[usize]) -> SchurVector {
        SchurVector::basis_element(Partition::new(v.to_vec()).unwrap())
    }

    fn two_cells() -> ShapeTuple {
        ShapeTuple::singles(&[0, 0])
    }

    #[test]
    fn inv_d_examples() {
        let t = two_cells();
        let a = StandardFilling::new(&t, vec![vec![2], vec![1]]).unwrap();
        let b = StandardFilling::new(&t, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(inv_d(&t, &a).unwrap(), 1);
        assert_eq!(inv_d(&t, &b).unwrap(), 0);
        // d = 1: nothing can attack
        let single = ShapeTuple::new(vec![Component::horizontal_domino(0)]);
        for f in standard_fillings(&single) {
            assert_eq!(inv_d(&single, &f).unwrap(), 0);
        }
    }

    #[test]
    fn rejects_non_standard() {
        let t = ShapeTuple::new(vec![Component::horizontal_domino(0)]);
        assert!(StandardFilling::new(&t, vec![vec![2, 1]]).is_err());
        assert!(StandardFilling::new(&t, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn llt_examples() {
        let h = ShapeTuple::new(vec![Component::horizontal_domino(0)]);
        let v = ShapeTuple::new(vec![Component::vertical_domino(1)]);
        assert_eq!(llt_schur(&h).unwrap(), s(&[2]));
        assert_eq!(llt_schur(&v).unwrap(), s(&[1, 1]));
        assert_eq!(llt_schur(&two_cells()).unwrap(), s(&[2]) + s(&[1, 1]).shift(1));
    }

    #[test]
    fn bound_is_enforced() {
        let t = ShapeTuple::singles(&[0; 11]);
        assert!(matches!(llt(&t), Err(Error::BoundExceeded { n: 11, bound: 10 })));
        assert!(llt_with_bound(&ShapeTuple::singles(&[0; 4]), 3).is_err());
    }

    #[test]
    fn specialized_examples() {
        let one = llt_specialized(&ShapeTuple::singles(&[0]), 2);
        assert_eq!(one.keys().cloned().collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        let v = llt_specialized(&ShapeTuple::new(vec![Component::vertical_domino(1)]), 2);
        assert_eq!(v.keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1]]);
        let two = llt_specialized(&two_cells(), 2);
        assert_eq!(two[&vec![1, 1]], LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(two[&vec![2, 0]], LaurentPoly::one());
        assert_eq!(two[&vec![0, 2]], LaurentPoly::one());
    }

    #[test]
    fn filling_counts() {
        let t: ShapeTuple = "HV".parse::<TwoDiagTuple>().unwrap().to_shape();
        assert_eq!(standard_fillings(&t).len(), 6);
        assert_eq!(standard_fillings(&ShapeTuple::singles(&[0, 1, 2])).len(), 6);
    }

    #[test]
    fn kernel_inversions_match_definition() {
        let t: ShapeTuple = "H0V1".parse::<TwoDiagTuple>().unwrap().to_shape();
        let layout = ReadingLayout::new(&t);
        let fillings = standard_fillings(&t);
        let mut kernel = Vec::new();
        layout.for_each_filling(|_, inv, _| kernel.push(inv));
        let direct: Vec<usize> = fillings.iter().map(|f| inv_d(&t, f).unwrap()).collect();
        assert_eq!(kernel, direct);
    }
}
