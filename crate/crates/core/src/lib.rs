//! Entanglement harvesting by pairs of hydrogenlike atoms.
//!
//! The crate evaluates the second-order density matrix of two atoms coupled
//! to a field vacuum, for the electromagnetic dipole coupling and two scalar
//! detector models, and the special functions and angular algebra it needs.

// coefficient tables are kept as published, digits beyond f64 included
#![allow(clippy::excessive_precision)]

pub mod error;
pub mod angular;
pub mod specfun;
pub mod atoms;
pub mod harvesting;
pub mod oracle;
pub mod survey;

pub use error::{Result, VhError};
pub use specfun::ComplexValue;
