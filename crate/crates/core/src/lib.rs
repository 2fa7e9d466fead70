//! Exact finite-dimensional representations of the extended Yangian
//! `X(osp(1|2n))`.
//!
//! Everything is computed over the rationals. Modules are described by
//! [`rep::Recipe`]s and evaluated pointwise; identities between rational
//! functions are decided by clearing denominators and comparing on enough
//! integer points to pin down the resulting polynomials.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hw;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod sparse;
pub mod superlin;

pub use arith::{Poly, Rat, RationalFunction};
pub use error::{Error, Result};
pub use rep::{Recipe, RepModule};
pub use report::{Report, Status, Witness};
pub use superlin::{GradedSpace, Mutation};
