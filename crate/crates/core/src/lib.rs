#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod casimir;
pub mod error;
pub mod poly;
pub mod projectors;
pub mod rational;
pub mod report;
pub mod tensorspace;
pub mod verify;
pub mod vogel;

pub use algebra::{make_spec, make_spec_with, AlgebraSpec, Family, Limits};
pub use casimir::CasimirBundle;
pub use error::{Error, Result};
pub use projectors::{projector_system, ProjectorSystem};
pub use rational::Rational;
pub use report::{Status, VerificationRecord};
pub use tensorspace::SparseOperator;
pub use verify::{run_suite, Level};
