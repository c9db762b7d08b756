//! Qudit ZW-calculus and ZX-calculus engine.
//!
//! Diagrams of both calculi (and their mixed-dimension extension) are
//! represented as typed composition trees over the generator set, mapped to
//! dense complex matrices by the standard interpretation. On top of that sit
//! a catalog of rewrite rules and derived equalities with a randomized
//! numerical soundness verifier, the generator-wise translations between the
//! two calculi, and a small textual diagram language with a CLI.

pub mod derived;
pub mod diagram;
pub mod error;
pub mod format;
pub mod interpret;
pub mod matrix;
pub mod phase;
pub mod qufinite;
pub mod rules;
pub mod sampling;
pub mod translate;

pub use diagram::{Diagram, Generator, WireSignature};
pub use error::{Error, Result};
pub use interpret::{interpret, interpret_with_limit, Interpreter};
pub use matrix::{approx_equal, Comparison, ComplexMatrix, RootOfUnityTable};
pub use phase::PhaseVector;
