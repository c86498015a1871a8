//! Free Hom-algebras as Hom-bialgebras: the coproduct, primitive elements,
//! the free Hom-associative Hopf algebra and its antipode, and truncated
//! universal enveloping Hom-algebras.
//!
//! Generators are primitive, `Δ(u) = u⊗u`, and the coproduct is extended
//! multiplicatively. Because `u·m = α(m)`, products with the unit record a
//! twist, which is how exponents appear in the summands of `Δ`.

mod algebra;
mod coproduct;
mod envelope;
mod quotient;

pub use algebra::{FreeHomAlgebra, Twist};
pub use coproduct::{
    antipode, antipode_in, antipode_sum, counit, counit_check, counit_poly, delta,
    delta_by_partitions, delta_in, delta_poly, delta_poly_in, delta_summand, is_primitive,
    is_primitive_in, CounitCheck, TensorElement,
};
pub use envelope::{
    check_bialgebra, envelope_generators, u_hom, unit_map, BialgebraReport, Outcome,
};
pub use quotient::{
    binary_trees, check_antipode, check_antipode_default, default_antipode_bounds,
    free_hom_associative, AntipodeReport, AntipodeStatus, DegreeInfo, GradedQuotient,
    InjectivityReport,
};

#[cfg(test)]
mod tests;
