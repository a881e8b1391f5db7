//! Executable statements of the linearity, domino and 2-Schur expansion
//! results, with exhaustive and sampled verification sweeps.

mod conventions;
mod corollary;
mod decomposition;
mod haiman;
mod linear;
mod positivity;
mod properties;
mod sweeps;

pub use conventions::{
    l_normalization, l_normalization_choice, matching_pair_conventions, reference_expansions, NormalizationChoice,
    PairConvention,
};
pub use corollary::{product_one_schur, product_rhs, L2Variant, ProductCheck};
pub use decomposition::{
    closed_form_decomposition, closed_form_exponent, closed_form_f, domino_exponent, domino_f, domino_identity, dot,
    f_less, solve_by_inversion, solve_decomposition, subsets, DominoCheck, LinearDecomposition,
};
pub use haiman::{
    g_n, g_n_with, gn_normalization, two_diag_data, two_diag_expansion, two_diag_rhs, CountingRule, GnNormalization,
    TwoDiagData, TwoDiagExpansion,
};
pub use linear::{linear_hypothesis, linear_relation_cases, raised_triple, verify_linear_relation, LinearRelation};
pub use positivity::{positivity_of, positivity_report, PositivityReport};
pub use properties::{
    conjugate_symmetry, hall_littlewood_column, max_closed_form_exponent, q_one_product, random_skew,
    random_skew_tuple, SkewPiece,
};
pub use sweeps::{random_two_diag, run_sweep, Failure, Sweep, SweepConfig, VerificationReport, DEFAULT_SEED};
