use super::check::is_morphism;
use super::multilinear::MultilinearMap;
use super::spec::AlgebraSpec;
use crate::error::{Error, Result};
use crate::linalg::{axpy, Matrix};
use crate::rational::q;

/// Yau twist: every arity-`a` operation becomes `β^{a-1} ∘ op`, and `α ← β α`.
pub fn yau_twist(spec: &AlgebraSpec, beta: &Matrix) -> Result<AlgebraSpec> {
    let report = is_morphism(spec, beta)?;
    if let Some(w) = report.witnesses.first() {
        return Err(Error::NotMorphism(format!(
            "{} fails on {:?}",
            w.label,
            w.assignment.iter().map(|(_, b)| b.as_str()).collect::<Vec<_>>()
        )));
    }
    if beta.mul(&spec.alpha) != spec.alpha.mul(beta) {
        return Err(Error::NotMorphism("map does not commute with the twisting map".into()));
    }
    let mut out = spec.clone();
    out.name = format!("{}_twisted", spec.name);
    for op in out.ops.values_mut() {
        *op = op.post_compose(&beta.pow(op.arity() as u32 - 1));
    }
    out.alpha = beta.mul(&spec.alpha);
    Ok(out)
}

/// Commutator `[a,b] = ab - ba` and Hom-associator `(ab)α(c) - α(a)(bc)`
/// of the binary product, under the algebra's own twisting map.
pub fn akivis_of(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    let mu = spec.binary_product()?;
    let dim = spec.dim();
    let e: Vec<_> = (0..dim).map(|i| spec.basis_vector(i)).collect();
    let ae: Vec<_> = e.iter().map(|v| spec.alpha.apply(v)).collect();
    let bracket = MultilinearMap::from_fn(2, dim, |t| {
        let mut v = mu.get(&[t[0], t[1]]).clone();
        axpy(&mut v, &q(-1), mu.get(&[t[1], t[0]]));
        v
    });
    let assoc = MultilinearMap::from_fn(3, dim, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut v = mu.eval(&[mu.get(&[a, b]), &ae[c]]);
        axpy(&mut v, &q(-1), &mu.eval(&[&ae[a], mu.get(&[b, c])]));
        v
    });
    let mut out = AlgebraSpec::new(&format!("{}_akivis", spec.name), spec.basis.clone())
        .with_op("B", bracket)
        .with_op("T", assoc)
        .with_alpha(spec.alpha.clone());
    out.unit = None;
    Ok(out)
}
