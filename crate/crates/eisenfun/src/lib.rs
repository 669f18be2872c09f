//! Pseudo-hyperbolic components of the exponential on the cube roots of
//! unity: the component functions and their identities, the polynomial
//! families attached to them, an integral transform built from the
//! components, and truncated ladder-operator checks.

pub mod algebra;
pub mod cli;
pub mod eft;
pub mod error;
pub mod fock;
pub mod phf;
pub mod poly;

mod fact;

pub use error::{Error, Result};
