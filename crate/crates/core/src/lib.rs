//! Complex differentiation matrices for algebraic, trigonometric, rational
//! and periodic-meromorphic interpolants, with the special functions and
//! eigenvalue solver used to exercise them.

pub mod diffmat;
pub mod eigen;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod nodes;
pub mod report;
pub mod scalar;
pub mod specfun;

pub use diffmat::{differentiation_matrix, Basis, DiffMatrix};
pub use eigen::{smallest_eigenpair, EigenOptions, EigenPair};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, Matrix, Vector};
pub use nodes::{NodeSet, Pole, PoleSet};
pub use scalar::{Complex64, Scalar};
