//! Numerical certification of reverse inequalities between the operator
//! norm and the numerical radius of normal matrices.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: dense complex matrices, Hermitian eigen-extremes, singular
//!   values, normality defect.
//! * [`range`]: support function of the numerical range, certified numerical
//!   radius, boundary sampling, spectral radius, resolvent gap.
//! * [`sphere`]: unit-sphere infima ξ, μ, δ and a random sampling oracle.
//! * [`hypotheses`]: exact checkers for the hypothesis predicates and the
//!   parameter fitting routines.
//! * [`ledger`]: the inequality catalog and certificate engine.
//! * [`harness`]: matrix generation, file formats, analysis and sweeps used
//!   by the `nrcert` command-line tool.

pub mod error;
pub mod harness;
pub mod hypotheses;
pub mod ledger;
pub mod linalg;
pub mod range;
pub mod sphere;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
