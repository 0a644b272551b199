//! Exact slope calculus and tight contact structure counts for small Seifert
//! fibered spaces `M(e0; r1, r2, r3)` with `e0 = -2`.
//!
//! Everything is computed over arbitrary-precision integers and rationals.

pub mod classify;
pub mod cli;
pub mod contfrac;
pub mod convex;
pub mod error;
pub mod farey;
pub mod floer;
pub(crate) mod json;
pub mod seifert;
pub mod selftest;
pub mod slope;
pub mod theta;

pub use error::{Error, Result};
pub use slope::{apply_mat, slope_vec, Slope, UniMat};
