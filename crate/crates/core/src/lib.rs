//! Exact verification toolkit for duality structure on monoidal
//! categories built from Hopf algebra data.
//!
//! Everything is computed with exact arithmetic (arbitrary-precision
//! rationals or a prime field), so every reported identity is a proof by
//! evaluation and every failure carries an exact counterexample witness.

pub mod comonadside;
pub mod builtin;
pub mod error;
pub mod input;
pub mod field;
pub mod matrix;
pub mod modcat;
pub mod report;
pub mod hopf;
pub mod monadside;
pub mod vectcat;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{kron_all, swap_perm, Matrix};
pub use report::{AxiomReport, ReportItem, Witness};
