use std::cmp::Reverse;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use super::algebra::FreeHomAlgebra;
use super::coproduct::counit_check;
use super::quotient::{binary_trees, GradedQuotient};
use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly};
use crate::fdalg::{AlgebraSpec, MultilinearMap, OpFamily};
use crate::linalg::{Echelon, SparseVec};
use crate::qops::{phi, QSolver};
use crate::rational::Q;

fn vector_poly(basis: &[String], v: &[Q]) -> Poly {
    Poly::from_terms(
        v.iter()
            .zip(basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| (Monomial::var(b.clone()), c.clone())),
    )
}

fn table_poly(basis: &[String], map: &MultilinearMap, tuple: &[usize]) -> Poly {
    vector_poly(basis, map.get(tuple))
}

/// The generating relations of the enveloping ideal up to degree `d`:
/// `ab - ba + <a,b>`, `<u;a,b> + q(u,a,b) - q(u,b,a)` and, for each stored
/// table, `Φ(u,v) - Σ q(uσ,vτ)/(n!m!)`.
pub fn envelope_generators(
    fam: &OpFamily,
    basis: &[String],
    alg: &FreeHomAlgebra,
    d: usize,
) -> Result<Vec<(String, Poly)>> {
    let dim = basis.len();
    let letter = |i: usize| Poly::var(&basis[i]);
    let mut out = Vec::new();
    let bracket = fam.bracket(0)?;
    for (a, b) in (0..dim).cartesian_product(0..dim) {
        let mut r = alg.product(&letter(a), &letter(b)) - alg.product(&letter(b), &letter(a));
        r += &table_poly(basis, bracket, &[a, b]);
        out.push((format!("[{},{}]", basis[a], basis[b]), r));
    }
    for n in 1..=d.saturating_sub(2) {
        let table = fam.bracket(n)?;
        for t in (0..n + 2).map(|_| 0..dim).multi_cartesian_product() {
            let (a, b) = (t[n], t[n + 1]);
            let mut letters: Vec<Poly> = t[..n].iter().map(|&i| letter(i)).collect();
            letters.push(letter(a));
            letters.push(letter(b));
            let u: Vec<usize> = (0..n).collect();
            let qab = QSolver::new(alg, letters.clone(), letter(b)).q(&u, &[n]);
            let qba = QSolver::new(alg, letters, letter(a)).q(&u, &[n + 1]);
            let r = table_poly(basis, table, &t) + qab - qba;
            let word = t[..n].iter().map(|&i| basis[i].as_str()).join(" ");
            out.push((format!("<{word};{},{}>", basis[a], basis[b]), r));
        }
    }
    for (&(n, m), table) in &fam.phi {
        if n + m > d {
            continue;
        }
        for t in (0..n + m).map(|_| 0..dim).multi_cartesian_product() {
            let u: Vec<Poly> = t[..n].iter().map(|&i| letter(i)).collect();
            let v: Vec<Poly> = t[n..].iter().map(|&i| letter(i)).collect();
            let r = table_poly(basis, table, &t) - phi(alg, &u, &v)?;
            let name = t.iter().map(|&i| basis[i].as_str()).join(" ");
            out.push((format!("Phi{n}_{m}({name})"), r));
        }
    }
    out.retain(|(_, r)| !r.is_zero());
    Ok(out)
}

/// Enumerates `C[r]` for every product context `C` with room left in `budget`.
fn contexts(
    alg: &FreeHomAlgebra,
    r: &Poly,
    budget: usize,
    by_degree: &[Vec<Monomial>],
    out: &mut Vec<Poly>,
) {
    out.push(r.clone());
    for k in 1..=budget {
        for m in &by_degree[k] {
            let m = Poly::from(m.clone());
            contexts(alg, &alg.product(r, &m), budget - k, by_degree, out);
            contexts(alg, &alg.product(&m, r), budget - k, by_degree, out);
        }
    }
}

/// The universal enveloping Hom-algebra of a Hom-Sabinin algebra, truncated
/// at degree `d`: the free unitary Hom-algebra on the basis of `spec`,
/// twisted by its matrix, modulo the ideal spanned by all product contexts
/// and twists of the generating relations. Columns are ordered from the
/// highest degree down, so the per-degree dimensions are those of the
/// associated graded of the degree filtration.
pub fn u_hom(fam: &OpFamily, spec: &AlgebraSpec, d: usize) -> Result<GradedQuotient> {
    if fam.dim != spec.dim() {
        return Err(Error::Dimension {
            expected: spec.dim(),
            got: fam.dim,
        });
    }
    if d > 2 && fam.cutoff < d - 2 {
        return Err(Error::Cutoff {
            need: d - 2,
            have: fam.cutoff,
        });
    }
    let basis = spec.basis.clone();
    let alg = FreeHomAlgebra::linear(basis.clone(), spec.alpha.clone());
    let leaves: Vec<Monomial> = basis.iter().map(|b| Monomial::var(b.clone())).collect();
    let by_degree: Vec<Vec<Monomial>> = (0..=d).map(|n| binary_trees(n, &leaves)).collect();
    let mut monomials: Vec<Monomial> = by_degree.iter().flatten().cloned().collect();
    monomials.sort_by(|a, b| Reverse(a.degree()).cmp(&Reverse(b.degree())).then(a.cmp(b)));
    let column: std::collections::HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_sparse = |p: &Poly| -> SparseVec {
        p.terms().map(|(m, c)| (column[m], c.clone())).collect()
    };

    let generators = envelope_generators(fam, &basis, &alg, d)?;
    let mut relations = Echelon::new();
    for (_, r) in &generators {
        let mut orbit = Echelon::new();
        let mut cur = r.clone();
        while !cur.is_zero() && orbit.insert(to_sparse(&cur)) {
            let mut instances = Vec::new();
            contexts(&alg, &cur, d - cur.max_degree(), &by_degree, &mut instances);
            for p in instances {
                relations.insert(to_sparse(&p));
            }
            cur = alg.alpha_poly(&cur, 1);
        }
    }
    let description = format!(
        "enveloping Hom-algebra of {} up to degree {d} ({} generating relations)",
        spec.name,
        generators.len()
    );
    Ok(GradedQuotient::envelope(
        alg,
        monomials,
        relations,
        generators,
        d,
        description,
    ))
}

/// `π(s)`, the class of a basis element in the envelope.
pub fn unit_map(envelope: &GradedQuotient, s: &str) -> Result<Poly> {
    envelope.nf(&Poly::var(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub element: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BialgebraReport {
    pub counit: Vec<Outcome>,
    pub generators: Vec<Outcome>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.counit.iter().chain(&self.generators).all(|o| o.holds)
    }
}

/// Counit law on `samples`, and `Δ(r) ∈ B⊗I + I⊗B` for every generating
/// relation `r` of `quotient` (decided as `(nf ⊗ nf)Δ(r) = 0`).
pub fn check_bialgebra(
    alg: &FreeHomAlgebra,
    samples: &[Poly],
    quotient: Option<&GradedQuotient>,
) -> Result<BialgebraReport> {
    let mut report = BialgebraReport::default();
    for x in samples {
        let c = counit_check(alg, x)?;
        report.counit.push(Outcome {
            element: x.to_string(),
            holds: c.holds(x),
        });
    }
    if let Some(qt) = quotient {
        for (name, r) in qt.generator_relations() {
            report.generators.push(Outcome {
                element: name.clone(),
                holds: qt.induced_delta(r)?.is_zero(),
            });
        }
    }
    Ok(report)
}
