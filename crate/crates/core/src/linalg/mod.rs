//! Dense complex linear algebra.

pub mod decomp;
pub mod eigen;
pub mod intertwine;
pub mod matrix;
pub mod preunitary;

pub use decomp::{
    pinv, polar_decompose, polar_decompose_eps, positive_factor, positive_factor_eps, signature, sqrt_psd, Polar,
};
pub use eigen::{hermitian_eigen, svd, HermitianEigen, Svd};
pub use intertwine::{intertwining_defect, solve_intertwiners, IntertwinerSpace};
pub use matrix::CMatrix;
pub use preunitary::{is_preunitary, PreunitaryReport};
