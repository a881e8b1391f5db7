use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::engine::StandardFilling;
use super::shape::{Component, Piece, ShapeTuple, TwoDiagTuple};

/// The tuple `η_a`: a vertical domino for each 1 and a horizontal domino for
/// each 0, followed by a content-0 cell when `odd`.
pub fn domino_tuple(a: &[bool], odd: bool) -> TwoDiagTuple {
    let mut pieces: Vec<Piece> = a.iter().map(|&v| if v { Piece::V } else { Piece::H }).collect();
    if odd {
        pieces.push(Piece::S0);
    }
    TwoDiagTuple::new(pieces)
}

/// Merges the single cells at components `i` and `i + 1` (contents `ε` and
/// `1 − ε`) into a horizontal and into a vertical domino. Returns both
/// tuples and `ε`; `llt(t) = llt(μ₀) + q^ε llt(μ₁)`.
pub fn split_cells(t: &ShapeTuple, i: usize) -> Result<(ShapeTuple, ShapeTuple, u32)> {
    let comps = t.components();
    if i + 1 >= comps.len() {
        return Err(Error::IndexOutOfRange(format!("components {i}, {} of {}", i + 1, comps.len())));
    }
    let pair = (comps[i].as_piece(), comps[i + 1].as_piece());
    let eps = match pair {
        (Some(Piece::S0), Some(Piece::S1)) => 0,
        (Some(Piece::S1), Some(Piece::S0)) => 1,
        _ => {
            return Err(Error::Precondition(format!(
                "components {i}, {} must be single cells with contents 0 and 1",
                i + 1
            )))
        }
    };
    let mu0 = t.replace(i, 2, vec![Component::horizontal_domino(0)]);
    let mu1 = t.replace(i, 2, vec![Component::vertical_domino(1)]);
    Ok((mu0, mu1, eps))
}

// Domino entries are written as [content 0, content 1]: (bottom, top) for a
// vertical domino, (left, right) for a horizontal one. Maps the filling of
// (vertical, horizontal) to the filling of (horizontal, vertical).
fn psi_forward(v: [usize; 2], h: [usize; 2]) -> ([usize; 2], [usize; 2]) {
    let ([a, b], [c, d]) = (v, h);
    if a > d && d > c && c > b {
        ([c, d], [a, b])
    } else if a > d && d > b && b > c {
        ([c, b], [a, d])
    } else if d > a && a > c && c > b {
        ([a, d], [c, b])
    } else if d > a && a > b && b > c {
        ([c, d], [a, b])
    } else if a > b && b > d && d > c {
        ([c, b], [a, d])
    } else {
        // d > c > a > b
        ([a, d], [c, b])
    }
}

fn psi_backward(h: [usize; 2], v: [usize; 2]) -> ([usize; 2], [usize; 2]) {
    let vals = [h[0], h[1], v[0], v[1]];
    for perm in Permutation::all(4) {
        let [a, b, c, d] = [0, 1, 2, 3].map(|k| vals[perm.at(k + 1) - 1]);
        if a > b && d > c && psi_forward([a, b], [c, d]) == (h, v) {
            return ([a, b], [c, d]);
        }
    }
    unreachable!("psi is a bijection on domino fillings")
}

/// Moves the domino pair at components `i`, `i + 1` (one horizontal, one
/// vertical) past each other, carrying the filling along so that `inv_d`
/// is preserved. Entries outside the two components are untouched.
pub fn swap_psi(t: &ShapeTuple, i: usize, filling: &StandardFilling) -> Result<(ShapeTuple, StandardFilling)> {
    let comps = t.components();
    if i + 1 >= comps.len() {
        return Err(Error::IndexOutOfRange(format!("components {i}, {} of {}", i + 1, comps.len())));
    }
    let vertical_first = match (comps[i].as_piece(), comps[i + 1].as_piece()) {
        (Some(Piece::V), Some(Piece::H)) => true,
        (Some(Piece::H), Some(Piece::V)) => false,
        _ => {
            return Err(Error::Precondition(format!(
                "components {i}, {} must be a horizontal and a vertical domino",
                i + 1
            )))
        }
    };
    // cells are row-major, so a vertical domino is stored as [top, bottom]
    let vert = |e: &[usize]| [e[1], e[0]];
    let horiz = |e: &[usize]| [e[0], e[1]];
    let mut entries = filling.entries().to_vec();
    let (first, second) = if vertical_first {
        let (h, v) = psi_forward(vert(&entries[i]), horiz(&entries[i + 1]));
        (horiz(&h).to_vec(), vert(&v).to_vec())
    } else {
        let (v, h) = psi_backward(horiz(&entries[i]), vert(&entries[i + 1]));
        (vert(&v).to_vec(), horiz(&h).to_vec())
    };
    entries[i] = first;
    entries[i + 1] = second;
    let swapped = t.replace(i, 2, vec![comps[i + 1].clone(), comps[i].clone()]);
    let out = StandardFilling::new(&swapped, entries)?;
    Ok((swapped, out))
}

/// `w` when `(x, y)` and `(x + 1, y)` are both or neither inversions of `w`,
/// otherwise `w · s_x`.
pub fn f_xy(w: &Permutation, x: usize, y: usize) -> Result<Permutation> {
    let n = w.len();
    if x == 0 || x + 1 >= y || y > n {
        return Err(Error::IndexOutOfRange(format!("need 0 < x, x + 1 < y ≤ n; got x={x}, y={y}, n={n}")));
    }
    if w.is_inversion(x, y) == w.is_inversion(x + 1, y) {
        Ok(w.clone())
    } else {
        Ok(w.times_simple(x))
    }
}
