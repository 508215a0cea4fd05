//! Exact computations with Lie triple systems, their representations and
//! cohomology, weighted and generalized Reynolds operators, deformations
//! and NS-Lie triple systems.
//!
//! All arithmetic is over ℚ with exact rationals. Structural checks return
//! [`report::Report`] values that list every failing basis instance.

pub mod catalog;
pub mod deform;
pub mod error;
pub mod exactlin;
pub mod linfty;
pub mod lts;
pub mod mlin;
pub mod ns;
pub mod report;
pub mod reynolds;
pub mod yamaguti;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational, Vector};
pub use mlin::{Budget, MultiMap};
pub use report::Report;
