//! Exact arithmetic for sums of the floor of square roots, quadratic
//! residue symbols, and class numbers of imaginary quadratic fields,
//! together with a registry of identities and conjectures relating them
//! that can be checked exactly over parameter ranges.
//!
//! Everything is computed in exact integer or rational arithmetic; no
//! result ever passes through floating point (floats only seed the
//! integer square root, which is always corrected exactly).
//!
//! With the default `parallel` feature the sweep driver runs cases on a
//! rayon thread pool; without it every sweep runs sequentially. Results
//! are byte-identical either way.

pub mod arith;
pub mod classnum;
mod error;
pub mod floorsum;
pub mod identities;
pub mod symbols;

mod exec;

pub use arith::{ExactRational, Factorization, SquarefreeDecomp};
pub use error::Error;
pub use identities::{IdentityReport, SweepSummary};
