//! Nonassociative polynomials as operation trees over exact rationals.
//!
//! A [`Monomial`] is a tree whose internal nodes are labelled by operation
//! symbols and whose leaves are generators decorated with a twisting
//! exponent (the number of times the twisting map has been applied).
//! Exponents live only on leaves: the twisting map is pushed through
//! nodes, and it fixes the unit.

mod monomial;
mod parse;
mod poly;
mod signature;
mod tensor;

pub use monomial::{GeneratorRef, Monomial, PRODUCT};
pub use parse::{parse_monomial, parse_poly};
pub use poly::{apply_op, Poly};
pub use signature::{OpSpec, Signature};
pub use tensor::{unshuffle, unshuffle_splits, TensorPoly};
