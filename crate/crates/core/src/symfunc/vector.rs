use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// Marker for a basis of the degree-`n` symmetric functions indexed by
/// partitions.
pub trait Basis:
    Clone + Copy + Default + fmt::Debug + PartialEq + Eq + std::hash::Hash + Send + Sync + 'static
{
    /// JSON tag.
    const NAME: &'static str;
    /// Prefix used when printing a basis element.
    const SYMBOL: &'static str;
}

#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct Schur;
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct Monomial;
/// 2-Schur functions `κ_λ`, indexed by 2-bounded partitions.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct TwoSchur;

impl Basis for Schur {
    const NAME: &'static str = "schur";
    const SYMBOL: &'static str = "s";
}
impl Basis for Monomial {
    const NAME: &'static str = "monomial";
    const SYMBOL: &'static str = "m";
}
impl Basis for TwoSchur {
    const NAME: &'static str = "two-schur";
    const SYMBOL: &'static str = "k";
}

/// A homogeneous symmetric function of degree `n`, expanded in basis `B`
/// with Laurent polynomial coefficients. No zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector<B: Basis> {
    n: usize,
    terms: BTreeMap<Partition, LaurentPoly>,
    _basis: PhantomData<B>,
}

pub type SchurVector = PartitionVector<Schur>;
pub type MonomialVector = PartitionVector<Monomial>;
pub type TwoSchurVector = PartitionVector<TwoSchur>;

impl<B: Basis> PartitionVector<B> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new(), _basis: PhantomData }
    }

    /// The constant `1` (basis element of the empty partition).
    pub fn one() -> Self {
        Self::basis_element(Partition::empty())
    }

    pub fn basis_element(index: Partition) -> Self {
        Self::term(index, LaurentPoly::one())
    }

    pub fn term(index: Partition, coeff: LaurentPoly) -> Self {
        let mut v = Self::zero(index.size());
        v.add_term(index, coeff);
        v
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, LaurentPoly)>) -> Self {
        let mut v = Self::zero(n);
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &Partition) -> LaurentPoly {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, index: Partition, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(index.size(), self.n, "partition {index} has wrong size for degree {}", self.n);
        match self.terms.get_mut(&index) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, coeff);
            }
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Multiplies every coefficient by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.map_coeffs(|x| x.shift(k))
    }

    pub fn substitute_qinv(&self) -> Self {
        self.map_coeffs(LaurentPoly::substitute_qinv)
    }

    /// Specializes `q` to an integer; `None` if a negative power meets
    /// `|q| > 1`.
    pub fn specialize_q(&self, q: i64) -> Option<Self> {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), LaurentPoly::from(c.eval_at(q)?));
        }
        Some(out)
    }

    /// Exact division of every coefficient by `q − 1`.
    pub fn div_q_minus_one(&self) -> Option<Self> {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.div_q_minus_one()?);
        }
        Some(out)
    }

    /// First term whose coefficient has a negative integer coefficient.
    pub fn first_non_positive(&self) -> Option<(&Partition, &LaurentPoly)> {
        self.terms.iter().find(|(_, c)| !c.is_nonnegative())
    }

    pub fn is_q_positive(&self) -> bool {
        self.first_non_positive().is_none()
    }

    fn merge_degree(&mut self, other: &Self) {
        if self.terms.is_empty() {
            self.n = other.n;
        } else if !other.terms.is_empty() {
            assert_eq!(self.n, other.n, "adding symmetric functions of different degree");
        }
    }
}

impl<B: Basis> Default for PartitionVector<B> {
    fn default() -> Self {
        Self::zero(0)
    }
}

impl<B: Basis> AddAssign<&PartitionVector<B>> for PartitionVector<B> {
    fn add_assign(&mut self, rhs: &PartitionVector<B>) {
        self.merge_degree(rhs);
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl<B: Basis> AddAssign for PartitionVector<B> {
    fn add_assign(&mut self, rhs: PartitionVector<B>) {
        self.merge_degree(&rhs);
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl<B: Basis> SubAssign<&PartitionVector<B>> for PartitionVector<B> {
    fn sub_assign(&mut self, rhs: &PartitionVector<B>) {
        self.merge_degree(rhs);
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c);
        }
    }
}

impl<B: Basis> Add for PartitionVector<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Basis> Add for &PartitionVector<B> {
    type Output = PartitionVector<B>;
    fn add(self, rhs: Self) -> PartitionVector<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Sub for PartitionVector<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<B: Basis> Sub for &PartitionVector<B> {
    type Output = PartitionVector<B>;
    fn sub(self, rhs: Self) -> PartitionVector<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Basis> Neg for PartitionVector<B> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_coeffs(|c| -c)
    }
}

impl<B: Basis> fmt::Display for PartitionVector<B> {
    /// `s(2) + q s(1,1)` style, in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let idx: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            let elem = format!("{}[{}]", B::SYMBOL, idx.join(","));
            if c.is_one() {
                write!(f, "{elem}")?;
            } else if c.len() == 1 {
                write!(f, "{c} {elem}")?;
            } else {
                write!(f, "({c}) {elem}")?;
            }
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for PartitionVector<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: Partition,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct VectorJson {
    n: usize,
    basis: String,
    terms: Vec<TermJson>,
}

impl<B: Basis> Serialize for PartitionVector<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VectorJson {
            n: self.n,
            basis: B::NAME.to_string(),
            terms: self.terms.iter().map(|(p, c)| TermJson { index: p.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for PartitionVector<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = VectorJson::deserialize(deserializer)?;
        if raw.basis != B::NAME {
            return Err(D::Error::custom(format!("expected basis {:?}, got {:?}", B::NAME, raw.basis)));
        }
        let mut v = Self::zero(raw.n);
        for t in raw.terms {
            if t.index.size() != raw.n {
                return Err(D::Error::custom(format!("index {} has wrong size", t.index)));
            }
            v.add_term(t.index, t.coeff);
        }
        Ok(v)
    }
}
