//! Pieri multiplication, skewing operators, ω, and general products in the
//! Schur basis.

use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::perm::Permutation;

use super::vector::SchurVector;

/// `h_r` as a Schur vector (`s_(r)`); zero for negative `r`.
pub fn h(r: i64) -> SchurVector {
    match r {
        r if r < 0 => SchurVector::zero(0),
        0 => SchurVector::one(),
        r => SchurVector::basis_element(Partition::from_sorted(vec![r as usize])),
    }
}

/// `e_r` as a Schur vector (`s_(1^r)`); zero for negative `r`.
pub fn e(r: i64) -> SchurVector {
    match r {
        r if r < 0 => SchurVector::zero(0),
        r => SchurVector::basis_element(Partition::from_sorted(vec![1; r as usize])),
    }
}

impl SchurVector {
    /// `s_λ ↦ s_{λ'}` termwise.
    pub fn omega(&self) -> SchurVector {
        SchurVector::from_terms(self.degree(), self.terms().map(|(p, c)| (p.conjugate(), c.clone())))
    }

    fn strip_map(&self, new_degree: usize, strips: impl Fn(&Partition) -> Vec<Partition>) -> SchurVector {
        let mut out = SchurVector::zero(new_degree);
        for (lam, c) in self.terms() {
            for mu in strips(lam) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// `h_r · f` by the Pieri rule. Negative `r` gives zero.
    pub fn h_multiply(&self, r: i64) -> SchurVector {
        if r < 0 {
            return SchurVector::zero(0);
        }
        let r = r as usize;
        self.strip_map(self.degree() + r, |lam| lam.add_horizontal_strips(r))
    }

    /// `e_r · f` by the dual Pieri rule.
    pub fn e_multiply(&self, r: i64) -> SchurVector {
        if r < 0 {
            return SchurVector::zero(0);
        }
        let r = r as usize;
        self.strip_map(self.degree() + r, |lam| lam.add_vertical_strips(r))
    }

    /// `h_r^⊥ f`: removes horizontal strips of size `r`.
    pub fn h_perp(&self, r: usize) -> SchurVector {
        if r > self.degree() {
            return SchurVector::zero(0);
        }
        self.strip_map(self.degree() - r, |lam| lam.remove_horizontal_strips(r))
    }

    /// `e_r^⊥ f`: removes vertical strips of size `r`.
    pub fn e_perp(&self, r: usize) -> SchurVector {
        if r > self.degree() {
            return SchurVector::zero(0);
        }
        self.strip_map(self.degree() - r, |lam| lam.remove_vertical_strips(r))
    }

    /// The product `self · other`.
    ///
    /// Each `s_μ` of `self` is expanded by Jacobi–Trudi (in `h` when
    /// `ℓ(μ) ≤ μ_1`, otherwise dually in `e`) and applied to `other` one
    /// Pieri step at a time.
    pub fn multiply(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero(self.degree() + other.degree());
        for (mu, c) in self.terms() {
            let scaled = other.scale(c);
            out += multiply_schur(mu, &scaled);
        }
        out
    }
}

fn multiply_schur(mu: &Partition, g: &SchurVector) -> SchurVector {
    let use_h = mu.len() <= mu.first();
    let rows = if use_h { mu.clone() } else { mu.conjugate() };
    let l = rows.len();
    let mut out = SchurVector::zero(mu.size() + g.degree());
    for sigma in Permutation::all(l) {
        let mut indices = Vec::with_capacity(l);
        let mut ok = true;
        for i in 1..=l {
            let idx = rows.part(i) as i64 - i as i64 + sigma.at(i) as i64;
            if idx < 0 {
                ok = false;
                break;
            }
            indices.push(idx);
        }
        if !ok {
            continue;
        }
        let mut acc = g.clone();
        for &r in &indices {
            acc = if use_h { acc.h_multiply(r) } else { acc.e_multiply(r) };
        }
        if sigma.inversion_set().len() % 2 == 1 {
            out -= &acc;
        } else {
            out += acc;
        }
    }
    out
}

/// `s_{λ/μ}` by the Jacobi–Trudi determinant, in `e` when `λ` has more
/// rows than columns.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> Option<SchurVector> {
    if !inner.contained_in(outer) {
        return None;
    }
    let use_h = outer.len() <= outer.first();
    let (lam, mu) = if use_h { (outer.clone(), inner.clone()) } else { (outer.conjugate(), inner.conjugate()) };
    let l = lam.len();
    let mut out = SchurVector::zero(outer.size() - inner.size());
    for sigma in Permutation::all(l) {
        let mut acc = SchurVector::one();
        for i in 1..=l {
            let j = sigma.at(i);
            let r = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            acc = if use_h { acc.h_multiply(r) } else { acc.e_multiply(r) };
            if acc.is_zero() {
                break;
            }
        }
        if sigma.inversion_set().len() % 2 == 1 {
            out -= &acc;
        } else {
            out += acc;
        }
    }
    Some(out)
}

impl SchurVector {
    /// Scalar multiple by an integer.
    pub fn times(&self, k: i64) -> SchurVector {
        self.scale(&LaurentPoly::from(k))
    }
}
