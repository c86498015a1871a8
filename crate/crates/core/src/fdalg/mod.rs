//! Finite-dimensional Hom-algebras given by structure constants.

mod bundled;
mod check;
mod multilinear;
mod power;
mod sabinin;
mod spec;
mod twist;

pub use bundled::*;
pub use check::{check_identity, check_poly, is_morphism, CheckReport, Witness};
pub use multilinear::{tuple_at, tuples, MultilinearMap};
pub use power::{
    check_power_associative, hom_power, power_conditions, power_instance, power_monomial,
    sample_vectors, PowerFailure, PowerReport, DEFAULT_SEED,
};
pub use sabinin::{check_sabinin_axioms, sabinin_from, OpFamily, SabininClass, SabininReport};
pub use spec::{eval, format_vector, resolve_op, AlgebraSpec, Evaluator};
pub use twist::{akivis_of, yau_twist};

#[cfg(test)]
mod tests;
