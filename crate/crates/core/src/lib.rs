//! Finite semigroups, their matrix representations, and decision procedures
//! for the inverse property and for ∗-representability.
//!
//! Numerical code is generic over the real type of the complex entries
//! (`f32` or `f64`); exact rank decisions use [`Rational`].

pub mod catalog;
pub mod corpus;
pub mod error;
pub mod group_repr;
pub mod involution;
pub mod linalg;
pub mod rees;
pub mod rep;
pub mod scalar;
pub mod schutz;
pub mod semigroup;

pub use error::{Error, Result};
pub use linalg::{is_preunitary, polar_decompose, positive_factor, solve_intertwiners, CMatrix, PreunitaryReport};
pub use scalar::{Rational, Real, C};
pub use semigroup::{
    brute_force_is_inverse, green_structure, is_semisimple_algebra, maximal_subgroup, parse_sgt, principal_series,
    validate_table, write_sgt, GreenStructure, GroupData, InverseOracle, PrincipalSeries, SemigroupTable, SgtFile,
};

pub type CMatrix64 = CMatrix<f64>;
pub type CMatrix32 = CMatrix<f32>;
pub type Complex64 = C<f64>;
