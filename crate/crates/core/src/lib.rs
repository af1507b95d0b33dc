//! Exact multiplicity theory for m-primary monomial ideals of `k[x_1, ..., x_d]`.
//!
//! The crate computes colengths, Hilbert-Samuel and Bhattacharya polynomials,
//! mixed multiplicities, Newton-polyhedron integral closures and the sectional
//! Milnor numbers of Brieskorn-Pham singularities, and checks the classical
//! inequalities and equality criteria relating them. All arithmetic is exact.

pub mod cli;
pub mod colength;
pub mod error;
pub mod format;
pub mod hilbert;
pub mod ideal;
mod linalg;
pub mod milnor;
pub mod newton;
mod simplex;
mod staircase;
pub mod sweep;
pub mod theorems;

pub use colength::{colength, ColengthMode};
pub use error::{Error, Result};
pub use hilbert::{
    bhattacharya_function, bhattacharya_polynomial, hilbert_function, hilbert_polynomial, lech_ratio,
    mixed_multiplicities, mixed_via_vandermonde, multiplicity, BhattacharyaPolynomial, HilbertPolynomial,
    MixedMultiplicities,
};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use milnor::{
    jacobian_ideal, milnor_number, milnor_report, sectional_milnor, BrieskornPolynomial, MilnorSpectrum,
};
pub use newton::{
    closure_membership_oracle, covolume_2d, integral_closure, is_reduction, np_contains,
    scaled_closure_equal, NewtonPolyhedron, RationalPoint,
};
pub use theorems::{
    check_dim1_additivity, check_double_bound, check_e1_squared, check_length_lemma, check_rees,
    check_teissier_first, check_teissier_second, equality_conditions, equality_pipeline, geometric_ratio,
    minkowski_status, EqualityCertificate, InequalityReport, MinkowskiStatus, Status, Verdict,
};
