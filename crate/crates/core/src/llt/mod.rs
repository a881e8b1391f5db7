//! LLT polynomials of tuples of skew shapes, unicellular LLT polynomials and
//! the bijections relating them.

mod bijections;
mod engine;
mod shape;
mod unicellular;

pub use bijections::{domino_tuple, f_xy, split_cells, swap_psi};
pub use engine::{
    attacking_pairs, inv_d, llt, llt_schur, llt_specialized, llt_with_bound, standard_fillings, StandardFilling,
    DEFAULT_BOUND,
};
pub use shape::{Cell, Component, Piece, ShapeTuple, TwoDiagTuple};
pub(crate) use unicellular::sorted_cells;
pub use unicellular::{
    contents_from_partition, g_m, g_unicellular, inv_m, l_poly, l_poly_with, profile, profile_prime,
    reflection_exponent, tuple_from_partition, InversionMatrix, LNormalization, UnicellularProfile,
};
