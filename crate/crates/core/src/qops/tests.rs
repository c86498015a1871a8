use std::collections::BTreeMap;

use super::*;
use crate::expr::Signature;
use crate::fdalg::{builtin_algebra, check_sabinin_axioms, tuples};
use crate::homify::erase_exponents;
use crate::rational::frac;

fn v(name: &str) -> Poly {
    Poly::var(name)
}

fn assoc(a: &Poly, b: &Poly, c: &Poly) -> Poly {
    hom_associator(&Symbolic { twisted: true }, a, b, c)
}

#[test]
fn associator_shape() {
    assert_eq!(assoc(&v("x"), &v("y"), &v("z")).to_string(), "(x*y)*A^1(z) - A^1(x)*(y*z)");
}

#[test]
fn printed_q_formulas() {
    let (x, y, t, z) = (v("x1"), v("x2"), v("y1"), v("z"));
    assert_eq!(q_symbolic(1, 1, true), assoc(&x, &t, &z));

    let q21 = assoc(&x.mul(&y), &t.apply_alpha(1), &z.apply_alpha(1))
        - x.apply_alpha(2).mul(&assoc(&y, &t, &z))
        - y.apply_alpha(2).mul(&assoc(&x, &t, &z));
    assert_eq!(q_symbolic(2, 1, true), q21);

    let (x, y, t) = (v("x1"), v("y1"), v("y2"));
    let q12 = assoc(&x.apply_alpha(1), &y.mul(&t), &z.apply_alpha(1))
        - y.apply_alpha(2).mul(&assoc(&x, &t, &z))
        - t.apply_alpha(2).mul(&assoc(&x, &y, &z));
    assert_eq!(q_symbolic(1, 2, true), q12);
}

#[test]
fn empty_words_vanish() {
    let alg = Symbolic { twisted: true };
    assert!(q_alpha(&alg, &[], &[v("a")], &v("z")).is_zero());
    assert!(q_alpha(&alg, &[v("a")], &[], &v("z")).is_zero());
}

#[test]
fn untwisted_q_is_classical() {
    for n in 1..=3 {
        for m in 1..=3 {
            if n + m > 4 {
                continue;
            }
            assert_eq!(erase_exponents(&q_symbolic(n, m, true)), q_symbolic(n, m, false), "{n},{m}");
        }
    }
}

#[test]
fn phi_small_cases() {
    let alg = Symbolic { twisted: true };
    let (a, b, c) = (v("a"), v("b"), v("c"));
    let expected = (q_alpha(&alg, &[a.clone()], &[b.clone()], &c) + q_alpha(&alg, &[a.clone()], &[c.clone()], &b))
        .scale(&frac(1, 2));
    assert_eq!(phi(&alg, &[a.clone()], &[b.clone(), c.clone()]).unwrap(), expected);
    let same = phi(&alg, &[a.clone()], &[b.clone(), b.clone()]).unwrap();
    assert_eq!(same, q_alpha(&alg, &[a.clone()], &[b.clone()], &b));
    assert!(phi(&alg, &[], &[a, b]).is_err());
    assert_eq!(phi_symbolic(1, 2).unwrap().variables().len(), 3);
}

#[test]
fn numeric_associator_on_twisted_sl2() {
    let s = builtin_algebra("sl2_hom_lie").unwrap();
    let alg = Numeric::new(&s).unwrap();
    let e = |i: usize| s.basis_vector(i);
    let got = hom_associator(&alg, &e(0), &e(1), &e(2));
    // direct evaluation: μ'(μ'(h,x), α(y)) - μ'(α(h), μ'(x,y)) with μ' = αμ
    let mu = s.op("mu").unwrap();
    let lhs = mu.eval(&[mu.get(&[0, 1]), &s.alpha.apply(&e(2))]);
    let rhs = mu.eval(&[&s.alpha.apply(&e(0)), mu.get(&[1, 2])]);
    let expected: Vec<_> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    assert_eq!(got, expected);
    assert_eq!(s.format_vector(&got), "2*h");
}

fn bracket_poly(n: usize) -> Poly {
    let u: Vec<Poly> = (1..=n).map(|i| v(&format!("u{i}"))).collect();
    let alg = Symbolic { twisted: true };
    q_alpha(&alg, &u, &[v("b")], &v("a")) - q_alpha(&alg, &u, &[v("a")], &v("b"))
}

#[test]
fn numeric_tables_match_symbolic_evaluation() {
    for name in ["sl2_hom_lie", "hom_m2"] {
        let s = builtin_algebra(name).unwrap();
        let fam = yiii_hom(&s, 2).unwrap();
        let ev = s.evaluator(&Signature::magmatic(false)).unwrap();
        for n in 1..=2 {
            let p = bracket_poly(n);
            for t in tuples(s.dim(), n + 2) {
                let mut assign: BTreeMap<String, Vector> = (0..n)
                    .map(|i| (format!("u{}", i + 1), s.basis_vector(t[i])))
                    .collect();
                assign.insert("a".into(), s.basis_vector(t[n]));
                assign.insert("b".into(), s.basis_vector(t[n + 1]));
                assert_eq!(fam.bracket(n).unwrap().get(&t), &ev.eval(&p, &assign).unwrap(), "{name} {t:?}");
            }
        }
        let phi_poly = phi_symbolic(1, 2).unwrap();
        for t in tuples(s.dim(), 3) {
            let assign: BTreeMap<String, Vector> = [("x1", t[0]), ("y1", t[1]), ("y2", t[2])]
                .into_iter()
                .map(|(k, i)| (k.to_string(), s.basis_vector(i)))
                .collect();
            assert_eq!(fam.phi[&(1, 2)].get(&t), &ev.eval(&phi_poly, &assign).unwrap());
        }
    }
}

#[test]
fn abelian_gives_zero_family() {
    let s = builtin_algebra("abelian").unwrap();
    let fam = yiii_hom(&s, 2).unwrap();
    assert!(fam.brackets.values().all(MultilinearMap::is_zero));
    assert!(fam.phi.values().all(MultilinearMap::is_zero));
}

#[test]
fn alternative_gives_malcev_bracket() {
    let s = builtin_algebra("hom_octonion").unwrap();
    let fam = yiii_hom(&s, 1).unwrap();
    let alg = Numeric::new(&s).unwrap();
    let e = |i: usize| s.basis_vector(i);
    let br = |a: &Vector, b: &Vector| {
        let mut r = alg.mul(a, b);
        axpy(&mut r, &q(-1), &alg.mul(b, a));
        r
    };
    for t in tuples(8, 3) {
        let (c, a, b) = (t[0], t[1], t[2]);
        let mut j = alg.zero();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            axpy(&mut j, &q(1), &br(&br(&e(x), &e(y)), &alg.alpha(&e(z), 1)));
        }
        let expected: Vector = j.iter().map(|x| x * frac(-1, 3)).collect();
        assert_eq!(fam.bracket(1).unwrap().get(&t), &expected);
    }
}

#[test]
fn hom_associative_higher_brackets() {
    let s = builtin_algebra("hom_m2").unwrap();
    let fam = yiii_hom(&s, 2).unwrap();
    assert!(fam.bracket(1).unwrap().is_zero());
    assert!(fam.bracket(2).unwrap().is_zero());
}

#[test]
fn yiii_is_hom_sabinin_on_small_algebras() {
    for name in ["sl2_hom_lie", "hom_m2", "abelian"] {
        let s = builtin_algebra(name).unwrap();
        let fam = yiii_hom(&s, 2).unwrap();
        let r = check_sabinin_axioms(&fam, &s, 1, 1).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.report.witnesses.first());
    }
}

#[test]
fn rejects_non_multiplicative_twist() {
    let mut s = builtin_algebra("sl2").unwrap();
    s.alpha.set(1, 1, q(2));
    assert!(matches!(yiii_hom(&s, 1), Err(Error::NotMorphism(_))));
}
