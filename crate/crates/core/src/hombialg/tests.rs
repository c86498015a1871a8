use std::collections::BTreeSet;

use super::*;
use crate::expr::{parse_monomial, parse_poly, Monomial, Poly};
use crate::fdalg::{builtin_algebra, sabinin_from, SabininClass};
use crate::homify::homify_identity;
use crate::linalg::Matrix;
use crate::qops::q_symbolic;
use crate::rational::q;

fn m(s: &str) -> Monomial {
    parse_monomial(s).unwrap()
}

fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

fn distinct_leaf_trees(n: usize) -> Vec<Monomial> {
    let shapes = binary_trees(n, &[Monomial::var("_")]);
    shapes
        .into_iter()
        .map(|t| {
            let mut i = 0;
            t.map_leaves(&mut |_| {
                i += 1;
                Monomial::var(format!("x{i}"))
            })
        })
        .collect()
}

#[test]
fn coproduct_of_generators_and_unit() {
    let d = delta(&m("x")).unwrap();
    assert_eq!(d.len(), 2);
    assert_eq!(d.coeff(&Monomial::Unit, &m("x")), q(1));
    assert_eq!(d.coeff(&m("x"), &Monomial::Unit), q(1));
    let da = delta(&m("A^1(p)")).unwrap();
    assert_eq!(da.coeff(&Monomial::Unit, &m("A^1(p)")), q(1));
    assert_eq!(da.len(), 2);
    let du = delta(&Monomial::Unit).unwrap();
    assert_eq!(du, TensorElement::pure(Monomial::Unit, Monomial::Unit));
    assert_eq!(counit(&Monomial::Unit), q(1));
}

#[test]
fn coproduct_of_left_combed_cube() {
    let d = delta(&m("(x*y)*z")).unwrap();
    let mut expected = TensorElement::zero();
    let mut circ = |a: &str, b: &str| {
        let (a, b) = (
            if a == "1" { Monomial::Unit } else { m(a) },
            if b == "1" { Monomial::Unit } else { m(b) },
        );
        expected.add_term(a.clone(), b.clone(), q(1));
        expected.add_term(b, a, q(1));
    };
    circ("(x*y)*z", "1");
    circ("A^1(x)*A^1(y)", "A^1(z)");
    circ("A^1(y)*z", "A^2(x)");
    circ("A^1(x)*z", "A^2(y)");
    assert_eq!(d, expected);
}

#[test]
fn labelling_examples() {
    let t = m("(x*y)*z");
    assert_eq!(
        delta_summand(&t, &set(&[0])).unwrap(),
        (m("A^2(x)"), m("A^1(y)*z"))
    );
    assert_eq!(
        delta_summand(&t, &set(&[0, 1])).unwrap(),
        (m("A^1(x)*A^1(y)"), m("A^1(z)"))
    );
    assert_eq!(
        delta_summand(&t, &set(&[0, 1, 2])).unwrap(),
        (t.clone(), Monomial::Unit)
    );
    assert!(delta_summand(&t, &set(&[3])).is_err());
}

#[test]
fn labelling_agrees_with_recursion() {
    for n in 1..=5 {
        for t in distinct_leaf_trees(n) {
            assert_eq!(delta_by_partitions(&t).unwrap(), delta(&t).unwrap(), "{t}");
        }
    }
    for s in ["(A^1(x)*y)*(x*A^2(z))", "A^3(x)*((y*y)*A^1(x))"] {
        assert_eq!(delta_by_partitions(&m(s)).unwrap(), delta(&m(s)).unwrap());
    }
}

#[test]
fn coproduct_is_cocommutative() {
    for n in 1..=5 {
        for t in distinct_leaf_trees(n) {
            assert!(delta(&t).unwrap().is_cocommutative(), "{t}");
        }
    }
}

#[test]
fn counit_law() {
    let alg = FreeHomAlgebra::free();
    for s in ["x", "x*y", "(x*y)*z", "x*(A^1(y)*(z*w))"] {
        let x = p(s);
        let c = counit_check(&alg, &x).unwrap();
        assert!(c.holds(&x), "{s}");
        assert_eq!(c.left_product, x.apply_alpha(1));
    }
    let report = check_bialgebra(&alg, &[p("x"), p("x*y"), p("(x*y)*z")], None).unwrap();
    assert!(report.passed());
}

#[test]
fn primitive_elements() {
    assert!(is_primitive(&p("x*y - y*x")).unwrap());
    assert!(is_primitive(&p("(x*y)*A^1(z) - A^1(x)*(y*z)")).unwrap());
    assert!(!is_primitive(&p("x*y")).unwrap());
    assert!(!is_primitive(&p("(x*y)*z - x*(y*z)")).unwrap());
    assert!(is_primitive(&p("x")).unwrap());
}

#[test]
fn homified_primitives() {
    for (n, k) in [(1, 1), (1, 2), (2, 1)] {
        let qa = q_symbolic(n, k, true);
        assert!(is_primitive(&qa).unwrap(), "q_{n},{k}");
    }
    let classical = p("(x*y)*z - x*(y*z)");
    let hom = homify_identity(&classical, &crate::Signature::magmatic(false)).unwrap();
    assert!(is_primitive(&hom).unwrap());
    let comm = homify_identity(&p("x*y - y*x"), &crate::Signature::magmatic(false)).unwrap();
    assert!(is_primitive(&comm).unwrap());
    assert!(is_primitive(&p("A^1(x)*A^1(y) - A^1(y)*A^1(x)")).unwrap());
}

#[test]
fn antipode_rules() {
    assert_eq!(antipode(&m("x")).unwrap(), p("-x"));
    assert_eq!(antipode(&m("x*y")).unwrap(), p("y*x"));
    assert_eq!(antipode(&m("(x*y)*z")).unwrap(), p("-z*(y*x)"));
    assert_eq!(antipode(&Monomial::Unit).unwrap(), Poly::unit());
}

#[test]
fn hom_associative_quotient_basics() {
    let f = free_hom_associative(&["x", "y", "z"], 3, 3).unwrap();
    assert!(f
        .is_zero_in_quotient(&p("A^1(x)*(y*z) - (x*y)*A^1(z)"))
        .unwrap());
    let two = p("x*y + 2 (A^1(y)*z)");
    assert_eq!(f.nf(&two).unwrap(), two);
    let r = p("A^2(x)*(y*A^1(z)) + (x*z)*y");
    let n1 = f.nf(&r).unwrap();
    assert_eq!(f.nf(&n1).unwrap(), n1);
    assert!(matches!(
        f.nf(&p("((x*y)*z)*x")),
        Err(crate::Error::Bounds(_))
    ));
    let small = free_hom_associative(&["x"], 3, 1).unwrap();
    let dims = small.dimensions();
    assert_eq!(dims[&1].relation_rank, 0);
    assert_eq!(dims[&2].relation_rank, 0);
    assert_eq!(dims[&2].dimension, 4);
    assert!(dims[&3].relation_rank > 0);
}

#[test]
fn alpha_is_injective_on_small_sections() {
    let f = free_hom_associative(&["x", "y"], 3, 3).unwrap();
    let report = f.alpha_injectivity(3).unwrap();
    assert!(report.injective(), "{:?}", report.failures);
    assert_eq!(report.degrees.len(), 3);
}

#[test]
fn printed_antipode_examples() {
    for s in ["x", "x*y", "(x*y)*z", "(a*(b*c))*d"] {
        let r = check_antipode_default(&m(s)).unwrap();
        assert!(r.holds(), "{s}: {:?}", r);
    }
    assert_eq!(check_antipode_default(&m("(x*y)*z")).unwrap().summands, 8);
    assert_eq!(check_antipode_default(&m("(a*(b*c))*d")).unwrap().summands, 16);
    let unit = check_antipode_default(&Monomial::Unit).unwrap();
    assert!(unit.holds());
}

#[test]
fn antipode_sum_for_cube_vanishes_after_reassociation() {
    let raw = antipode_sum(&m("(x*y)*z")).unwrap();
    assert!(!raw.is_zero());
    let f = free_hom_associative(&["x", "y", "z"], 3, 6).unwrap();
    assert!(f.is_zero_in_quotient(&raw).unwrap());
}

#[test]
fn antipode_on_all_small_monomials() {
    let gens: Vec<Monomial> = ["a", "b", "c", "d"].iter().map(|g| Monomial::var(*g)).collect();
    let mut count = 0;
    for n in 1..=4 {
        for t in binary_trees(n, &gens) {
            let r = check_antipode_default(&t).unwrap();
            assert!(r.holds(), "{t}: {:?}", r.normal_form);
            count += 1;
        }
    }
    assert_eq!(count, 4 + 16 + 2 * 64 + 5 * 256);
}

#[test]
fn inconclusive_is_reported_distinctly() {
    let f = free_hom_associative(&["x", "y", "z"], 3, 1).unwrap();
    let r = check_antipode(&m("(x*y)*z"), &f).unwrap();
    assert_eq!(r.status, AntipodeStatus::InconclusiveWithinBounds);
}

fn zero_twist_sl2() -> crate::fdalg::AlgebraSpec {
    builtin_algebra("sl2").unwrap().with_alpha(Matrix::zeros(3, 3))
}

#[test]
fn envelope_of_antisymmetric_algebra() {
    let sl2 = zero_twist_sl2();
    let fam = sabinin_from(&sl2, SabininClass::Lie, 2).unwrap();
    let u = u_hom(&fam, &sl2, 4).unwrap();
    assert_eq!(u.generator_relations().len(), 6);
    for (_, r) in u.generator_relations() {
        assert_eq!(r.max_degree(), 2);
    }
    let dims = u.dimensions();
    assert_eq!(dims[&1].dimension, 3);
    assert_eq!(dims[&2].dimension, 6);
    for s in ["h", "x", "y"] {
        assert_eq!(unit_map(&u, s).unwrap(), Poly::var(s));
    }
    let xy = p("x*y - y*x");
    let nf = u.nf(&xy).unwrap();
    assert_eq!(nf.max_degree(), 1);
    assert!(u.nf(&p("1*x")).unwrap().is_zero());
    let alg = u.algebra();
    let report = check_bialgebra(&alg, &[p("x"), p("x*y")], Some(&u)).unwrap();
    assert!(report.passed());
}

#[test]
fn envelope_of_twisted_sl2() {
    let spec = builtin_algebra("sl2_hom_lie").unwrap();
    let fam = sabinin_from(&spec, SabininClass::Lie, 1).unwrap();
    let u = u_hom(&fam, &spec, 3).unwrap();
    let dims = u.dimensions();
    assert_eq!(dims[&1].dimension, 3);
    let report = check_bialgebra(&u.algebra(), &[p("x*h")], Some(&u)).unwrap();
    assert!(report.passed());
    assert!(matches!(u_hom(&fam, &spec, 4), Err(crate::Error::Cutoff { .. })));
}

#[test]
fn circ_notation() {
    let d = delta(&m("(x*y)*z")).unwrap();
    let s = d.to_circ_string().unwrap();
    assert_eq!(s.matches('∘').count(), 4);
    assert!(s.contains("((x*y)*z) ∘ u"));
    let mut lopsided = TensorElement::zero();
    lopsided.add_term(m("x"), m("y"), q(1));
    assert!(lopsided.to_circ_string().is_none());
}
