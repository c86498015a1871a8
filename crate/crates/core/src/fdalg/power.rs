use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::spec::AlgebraSpec;
use crate::error::Result;
use crate::expr::{Monomial, Poly, Signature};
use crate::linalg::{is_zero_vector, Vector};
use crate::rational::{frac, Q};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Symbolic Hom-power `x^n = x^{n-1} α^{n-2}(x)`, `x^1 = x`.
pub fn power_monomial(x: &str, n: usize) -> Monomial {
    assert!(n >= 1);
    let mut acc = Monomial::var(x);
    for k in 2..=n {
        acc = Monomial::mul(acc, Monomial::gen(x, k as u32 - 2));
    }
    acc
}

/// `(x^{n+m}, α^{m-1}(x^n) α^{n-1}(x^m))` as expressions in `x`.
pub fn power_instance(x: &str, n: usize, m: usize) -> (Poly, Poly) {
    let lhs = Poly::from(power_monomial(x, n + m));
    let rhs = Monomial::mul(
        power_monomial(x, n).shifted(m as u32 - 1),
        power_monomial(x, m).shifted(n as u32 - 1),
    );
    (lhs, Poly::from(rhs))
}

/// The two conditions of the fourth-power criterion, each as `lhs - rhs`.
pub fn power_conditions(x: &str) -> [(String, Vec<Poly>); 2] {
    let v = Poly::var(x);
    let x2 = Poly::from(power_monomial(x, 2));
    let ax = v.apply_alpha(1);
    let assoc = |a: &Poly, b: &Poly, c: &Poly| a.mul(b).mul(&c.apply_alpha(1)) - a.apply_alpha(1).mul(&b.mul(c));
    [
        (
            "x^2 A(x) = A(x) x^2 and x^4 = A(x^2) A(x^2)".into(),
            vec![
                x2.mul(&ax) - ax.mul(&x2),
                Poly::from(power_monomial(x, 4)) - x2.apply_alpha(1).mul(&x2.apply_alpha(1)),
            ],
        ),
        (
            "(x,x,x)_A = 0 = (x^2,A(x),A(x))_A".into(),
            vec![assoc(&v, &v, &v), assoc(&x2, &ax, &ax)],
        ),
    ]
}

pub fn hom_power(spec: &AlgebraSpec, v: &[Q], n: usize) -> Result<Vector> {
    let ev = spec.evaluator(&Signature::magmatic(false))?;
    let assign = BTreeMap::from([("x".to_string(), v.to_vec())]);
    ev.eval(&Poly::from(power_monomial("x", n)), &assign)
}

/// Deterministic sample vectors with small rational coordinates.
pub fn sample_vectors(dim: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| frac(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerFailure {
    pub n: usize,
    pub m: usize,
    /// Index into basis vectors followed by samples.
    pub vector: usize,
    pub defect: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerReport {
    pub max: usize,
    pub seed: u64,
    pub samples: usize,
    pub vectors: usize,
    pub failures: Vec<PowerFailure>,
    pub condition1: bool,
    pub condition2: bool,
}

impl PowerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The two conditions agree, and they hold whenever every instance does.
    pub fn consistent(&self) -> bool {
        self.condition1 == self.condition2 && (!self.passed() || self.condition1)
    }
}

/// Checks `x^{n+m} = α^{m-1}(x^n) α^{n-1}(x^m)` for `n + m ≤ max` on all basis
/// vectors and `samples` seeded random vectors, plus both fourth-power conditions.
pub fn check_power_associative(
    spec: &AlgebraSpec,
    max: usize,
    samples: usize,
    seed: u64,
) -> Result<PowerReport> {
    let ev = spec.evaluator(&Signature::magmatic(false))?;
    let dim = spec.dim();
    let mut vectors: Vec<Vector> = (0..dim).map(|i| spec.basis_vector(i)).collect();
    vectors.extend(sample_vectors(dim, samples, seed));
    let mut failures = Vec::new();
    let [(_, c1), (_, c2)] = power_conditions("x");
    let mut cond = [true, true];
    for (vi, v) in vectors.iter().enumerate() {
        let assign = BTreeMap::from([("x".to_string(), v.clone())]);
        for total in 2..=max {
            for n in 1..total {
                let (lhs, rhs) = power_instance("x", n, total - n);
                let d = ev.eval(&(lhs - rhs), &assign)?;
                if !is_zero_vector(&d) {
                    failures.push(PowerFailure {
                        n,
                        m: total - n,
                        vector: vi,
                        defect: spec.format_vector(&d),
                    });
                }
            }
        }
        for (flag, polys) in cond.iter_mut().zip([&c1, &c2]) {
            for p in polys {
                *flag &= is_zero_vector(&ev.eval(p, &assign)?);
            }
        }
    }
    Ok(PowerReport {
        max,
        seed,
        samples,
        vectors: vectors.len(),
        failures,
        condition1: cond[0],
        condition2: cond[1],
    })
}
