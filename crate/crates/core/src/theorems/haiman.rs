use std::sync::OnceLock;

use serde::Serialize;

use crate::error::Result;
use crate::kschur::two_schur_expand;
use crate::llt::{llt_schur, profile_prime, sorted_cells, Piece, TwoDiagTuple};
use crate::partition::Partition;
use crate::symfunc::{SchurVector, TwoSchurVector};

use super::decomposition::{dot, f_less, subsets};

/// Whether the profile counts cells with `c̃ ≤ c̃_i − d` or `c̃ < c̃_i − d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CountingRule {
    Weak,
    Strict,
}

/// The data read off a tuple on two diagonals: the profile partition and
/// the indices `i ≤ m` whose cell `x_{n+1−i}` sits in a domino, with
/// `ζ_i = 1` for vertical dominoes.
#[derive(Clone, Debug, Serialize)]
pub struct TwoDiagData {
    pub tuple: String,
    pub conjugated: bool,
    pub n: usize,
    pub m: usize,
    pub z: usize,
    pub lambda: Partition,
    pub fixed: Vec<(usize, bool)>,
}

fn oriented(t: &TwoDiagTuple) -> (TwoDiagTuple, bool) {
    if t.m() > t.n() / 2 {
        (t.conjugate(), true)
    } else {
        (t.clone(), false)
    }
}

pub fn two_diag_data(t: &TwoDiagTuple, rule: CountingRule) -> TwoDiagData {
    let (u, conjugated) = oriented(t);
    let shape = u.to_shape();
    let (n, m) = (u.n(), u.m());
    let lambda = match rule {
        CountingRule::Weak => profile_prime(&shape, m),
        CountingRule::Strict => strict_profile(&shape, m),
    };
    let cells = sorted_cells(&shape);
    let fixed = (1..=m)
        .filter_map(|i| {
            let piece = u.pieces()[cells[n - i].1];
            piece.is_domino().then_some((i, piece == Piece::V))
        })
        .collect();
    TwoDiagData { tuple: u.to_string(), conjugated, n, m, z: u.z(), lambda, fixed }
}

fn strict_profile(shape: &crate::llt::ShapeTuple, rows: usize) -> Partition {
    let d = shape.d() as i64;
    let sc: Vec<i64> = sorted_cells(shape).iter().map(|c| c.0).collect();
    let n = sc.len();
    let f: Vec<usize> = sc.iter().map(|&x| sc.iter().filter(|&&y| y < x - d).count()).collect();
    Partition::new((1..=rows.min(n)).map(|r| f[n - r]).collect()).expect("counts are monotone")
}

/// `Σ_J f_{J,m} q^{−e_J·λ − z}` over `J ⊆ [m]` with `i ∈ J ⇔ ζ_i = 1` for
/// every fixed index `i`.
pub fn two_diag_rhs(data: &TwoDiagData) -> Result<SchurVector> {
    let mut out = SchurVector::zero(data.n);
    for set in subsets(data.m) {
        if data.fixed.iter().any(|&(i, v)| set.contains(&i) != v) {
            continue;
        }
        let e = dot(&set, &data.lambda) + data.z;
        out += f_less(&set, data.m, data.n)?.shift(-(e as i32));
    }
    Ok(out)
}

/// `q^{α z} ω(llt(t))`, evaluated on the tuple with `m ≤ ⌊n/2⌋`.
pub fn g_n_with(t: &TwoDiagTuple, alpha: i32) -> Result<SchurVector> {
    let (u, _) = oriented(t);
    Ok(llt_schur(&u.to_shape())?.omega().shift(alpha * u.z() as i32))
}

/// The power `α` in `G^(n) = q^{α z} ω(llt)`, chosen as the unique value in
/// `{−1, 0, 1}` matching the weak right-hand side on every tuple of at most
/// four pieces.
#[derive(Clone, Debug, Serialize)]
pub struct GnNormalization {
    pub alpha: i32,
    pub candidates: Vec<i32>,
    pub strict_candidates: Vec<i32>,
}

fn matching_alphas(rule: CountingRule, max_pieces: usize) -> Vec<i32> {
    let tuples = TwoDiagTuple::all_up_to(max_pieces);
    [-1, 0, 1]
        .into_iter()
        .filter(|&alpha| {
            tuples.iter().all(|t| {
                let data = two_diag_data(t, rule);
                matches!((g_n_with(t, alpha), two_diag_rhs(&data)), (Ok(l), Ok(r)) if l == r)
            })
        })
        .collect()
}

pub fn gn_normalization() -> &'static GnNormalization {
    static CHOICE: OnceLock<GnNormalization> = OnceLock::new();
    CHOICE.get_or_init(|| {
        let candidates = matching_alphas(CountingRule::Weak, 4);
        let strict_candidates = matching_alphas(CountingRule::Strict, 4);
        let alpha = if candidates.len() == 1 { candidates[0] } else { -1 };
        GnNormalization { alpha, candidates, strict_candidates }
    })
}

pub fn g_n(t: &TwoDiagTuple) -> Result<SchurVector> {
    g_n_with(t, gn_normalization().alpha)
}

/// Both sides of the 2-Schur expansion of `G^(n)` for a tuple on two
/// diagonals.
#[derive(Clone, Debug, Serialize)]
pub struct TwoDiagExpansion {
    pub data: TwoDiagData,
    pub lhs: SchurVector,
    pub rhs: SchurVector,
    pub holds: bool,
    pub expansion: Option<TwoSchurVector>,
}

pub fn two_diag_expansion(t: &TwoDiagTuple) -> Result<TwoDiagExpansion> {
    let data = two_diag_data(t, CountingRule::Weak);
    let lhs = g_n(t)?;
    let rhs = two_diag_rhs(&data)?;
    let holds = lhs == rhs;
    let expansion = two_schur_expand(&lhs).ok();
    Ok(TwoDiagExpansion { data, lhs, rhs, holds, expansion })
}
