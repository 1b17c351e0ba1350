//! Coefficient bounds, growth estimates, and Bohr-type radii for the class
//! `A_β` of normalized analytic functions with
//! `Re(βf(z)/z + (1 − β)f'(z)) > 0` on the unit disk.

// `!(x <= y)` is used on purpose so that NaN inputs are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod carath;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod functionals;
pub mod quad;
pub mod radii;
pub mod roots;
pub mod series;
pub mod verify;

pub use carath::{BetaParam, CoeffSeq, HerglotzMeasure};
pub use error::{Error, Result};
