//! Matrix generation, file I/O, single-matrix analysis and ensemble sweeps.

pub mod analyze;
pub mod generate;
pub mod matio;
pub mod sweep;

pub use analyze::{analyze, Analysis, IdentityResiduals};
pub use generate::{generate, GeneratorSpec, MatrixKind, SpectrumLaw};
pub use matio::{format_cmat, format_complex, parse_complex, parse_matrix, parse_matrix_str, write_matrix};
pub use sweep::{run_sweep, trial_instance, IdStats, RelationStats, SweepConfig, SweepKind, SweepReport};
