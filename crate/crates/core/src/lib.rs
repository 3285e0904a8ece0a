//! Isogeometric Helmholtz exterior scattering with high-order far-field
//! absorbing boundary conditions.

pub mod assembly;
pub mod error;
pub mod farfield_abc;
pub mod geometry;
pub mod harness;
pub mod linsolve;
pub mod reference;
pub mod specfun;
pub mod splines;

pub use error::{Error, Result};
