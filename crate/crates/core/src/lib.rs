//! Exact equivariant localization on generalized Grassmannians G/P, Chern
//! numbers of zero loci of homogeneous bundles, and their elliptic genera in
//! a basis of weak Jacobi forms.

pub mod arith;
pub mod error;
pub mod exact;
pub mod genus;
pub mod localize;
pub mod parabolic;
pub mod qseries;
pub mod reference;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
