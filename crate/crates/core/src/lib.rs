//! Exact computer algebra for quantum Clifford actions on braided exterior
//! algebras and the commuting `U_q(gl_n)`, `U_q(gl_m)` actions of skew Howe
//! duality.

pub mod error;
pub mod fockspace;
pub mod matrix;
pub mod braided_ext;
pub mod braiding;
pub mod cli;
pub mod duality;
pub mod embeddings;
pub mod qclifford;
pub mod qgroup;
pub mod qscalar;

pub use error::{Error, Result};
pub use fockspace::{BasisState, GridShape, QVector};
pub use matrix::QMatrix;
pub use qclifford::{CliffordGen, Flavor, OperatorExpr};
pub use qscalar::{QLaurent, Rational};
