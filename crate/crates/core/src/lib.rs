//! Computer algebra for supercommutative superrings presented as
//! `k[x1..xn | θ1..θd] / 𝔞` over ℚ or a small prime field.

pub mod dimension;
pub mod engine;
pub mod error;
pub mod fractional;
pub mod monomial;
pub mod odd;
pub mod regularity;
pub mod ring;
pub mod scalar;
pub mod superideal;
pub mod superpoly;
pub mod text;
pub mod verdict;

pub use dimension::{ann_even, even_ksdim, ksdim, odd_ksdim, OddParameterWitness, SuperDimension};
pub use error::{Error, Result};
pub use fractional::{
    contained_at, frac_equal, frac_from_ideal, frac_inverse, frac_make, frac_normalize,
    frac_product, is_invertible, kfrac_add, kfrac_eq, kfrac_mul, FractionalSuperideal, Inverse,
    InvertibilityReport, KFraction,
};
pub use monomial::{Monomial, TermOrder};
pub use odd::{OddMask, OddProduct};
pub use regularity::{
    dvr_check_local, is_dedekind, is_regular_at, minimal_odd_generators_at, regular_defect_locus,
    DedekindReport, DefectLocus, MaximalIdealPoint, Regularity, RegularityReport,
};
pub use ring::{make_ring, theta_closure, Config, Ring, Variable};
pub use scalar::{Field, Scalar};
pub use superideal::{
    annihilator, canonical_superideal, is_strong_superdomain, is_superdomain, is_zerodivisor,
    superreduce, SuperIdeal, Superreduced,
};
pub use superpoly::{Parity, SuperPoly, Term};
pub use text::{format_poly, format_superpoly, parse_expr};
pub use verdict::{Tri, Verdict};
