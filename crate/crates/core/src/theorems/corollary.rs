use serde::Serialize;

use crate::error::{Error, Result};
use crate::kschur::{hall_littlewood, kschur2};
use crate::llt::l_poly;
use crate::partition::Partition;
use crate::symfunc::SchurVector;

use super::decomposition::subsets;

/// How the correction term `l₂` in the product formula is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum L2Variant {
    /// `l₂ = Σ_{j ∈ I} j − l(l+1)/2`, the value forced by the closed forms.
    Corrected,
    /// `l₂ = Σ_{j ∈ I} j − m(m−1)/2`.
    Alternate,
}

/// `Σ_{I ⊆ [⌊n/2⌋]} q^{−(n−m) l₁ + l(n−l) − l₂} κ_{2^l 1^{n−2l}}` with
/// `l = |I|` and `l₁ = |I ∩ [m]|`.
pub fn product_rhs(n: usize, m: usize, variant: L2Variant) -> Result<SchurVector> {
    if m > n / 2 {
        return Err(Error::Precondition(format!("m = {m} exceeds ⌊n/2⌋ = {}", n / 2)));
    }
    let mut out = SchurVector::zero(n);
    for set in subsets(n / 2) {
        let l = set.len() as i64;
        let l1 = set.iter().filter(|&&i| i <= m).count() as i64;
        let sum: i64 = set.iter().map(|&i| i as i64).sum();
        let l2 = match variant {
            L2Variant::Corrected => sum - l * (l + 1) / 2,
            L2Variant::Alternate => sum - (m as i64) * (m as i64 - 1) / 2,
        };
        let e = -(n as i64 - m as i64) * l1 + l * (n as i64 - l) - l2;
        out += kschur2(&Partition::two_one(l as usize, n - 2 * l as usize))?.shift(e as i32);
    }
    Ok(out)
}

/// `H_{1^m} H_{1^{n−m}}` against the product formula.
#[derive(Clone, Debug, Serialize)]
pub struct ProductCheck {
    pub n: usize,
    pub m: usize,
    pub lhs: SchurVector,
    pub rhs: SchurVector,
    pub holds: bool,
    /// whether the product equals `L(n, (n−m)^m)`
    pub lhs_is_l: bool,
    /// whether the `l₂ = Σ j − m(m−1)/2` reading also matches
    pub alternate_holds: bool,
}

pub fn product_one_schur(n: usize, m: usize) -> Result<ProductCheck> {
    let ones = |k: usize| hall_littlewood(&Partition::rectangle(k, 1));
    let lhs = ones(m).multiply(&ones(n - m));
    let rhs = product_rhs(n, m, L2Variant::Corrected)?;
    let alternate = product_rhs(n, m, L2Variant::Alternate)?;
    let lhs_is_l = lhs == l_poly(n, &Partition::rectangle(m, n - m))?;
    let holds = lhs == rhs;
    let alternate_holds = lhs == alternate;
    Ok(ProductCheck { n, m, lhs, rhs, holds, lhs_is_l, alternate_holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        for n in 1..=6 {
            for m in 0..=n / 2 {
                let c = product_one_schur(n, m).unwrap();
                assert!(c.holds, "n={n} m={m}");
                assert!(c.lhs_is_l, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn alternate_variant_differs() {
        for n in 2..=6 {
            assert!(!product_one_schur(n, 1).unwrap().alternate_holds, "n={n}");
        }
    }
}
