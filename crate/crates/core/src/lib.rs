//! Symbolic and exact-numeric workbench for Hom-type nonassociative algebras.

pub mod error;
pub mod expr;
pub mod fdalg;
pub mod hombialg;
pub mod homify;
pub mod linalg;
pub mod qops;
pub mod rational;

pub use error::{Error, Result};
pub use expr::{GeneratorRef, Monomial, Poly, Signature};
pub use rational::Q;
