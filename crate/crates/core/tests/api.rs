use homforge::expr::{parse_poly, PRODUCT};
use homforge::fdalg::{builtin_algebra, check_identity, AlgebraSpec};
use homforge::hombialg::{delta, delta_by_partitions};
use homforge::homify::{catalog, erase_exponents, homify_identity, identity_from_json, identity_to_json};
use homforge::{Monomial, Signature};
use proptest::prelude::*;

fn tree(leaves: &[String], shape: &[bool]) -> Monomial {
    if leaves.len() == 1 {
        return Monomial::var(leaves[0].clone());
    }
    let k = 1 + shape.first().map_or(0, |&b| b as usize) % (leaves.len() - 1);
    let (l, r) = leaves.split_at(k.min(leaves.len() - 1));
    let rest = shape.get(1..).unwrap_or(&[]);
    Monomial::node(PRODUCT, vec![tree(l, rest), tree(r, rest)])
}

proptest! {
    #[test]
    fn display_parses_back(n in 1usize..6, shape in proptest::collection::vec(any::<bool>(), 0..8)) {
        let leaves: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let p = homify_identity(&tree(&leaves, &shape).into(), &Signature::magmatic(false)).unwrap();
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(erase_exponents(&p), tree(&leaves, &shape).into());
    }

    #[test]
    fn labeling_matches_recursion(n in 1usize..6, shape in proptest::collection::vec(any::<bool>(), 0..8)) {
        let leaves: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let m = homify_identity(&tree(&leaves, &shape).into(), &Signature::magmatic(false))
            .unwrap()
            .monomials()
            .next()
            .unwrap()
            .strip_exponents();
        prop_assert_eq!(delta(&m).unwrap(), delta_by_partitions(&m).unwrap());
    }
}

#[test]
fn identity_file_round_trip() {
    let sys = catalog("hom_jacobi").unwrap();
    let text = identity_to_json(&sys.signature, &sys.identities[0]);
    let (sig, p) = identity_from_json(&text).unwrap();
    assert_eq!(sig, sys.signature);
    assert_eq!(p, sys.identities[0]);
}

#[test]
fn algebra_file_round_trip() {
    for name in ["sl2_akivis", "hom_octonion", "c_example"] {
        let spec = builtin_algebra(name).unwrap();
        assert_eq!(AlgebraSpec::from_json(&spec.to_json()).unwrap(), spec, "{name}");
    }
    let back = AlgebraSpec::from_json(&builtin_algebra("sl2_akivis").unwrap().to_json()).unwrap();
    assert!(check_identity(&back, &catalog("hom_akivis").unwrap(), 1).unwrap().passed());
}
