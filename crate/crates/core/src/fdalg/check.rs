use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::multilinear::{tuple_at, tuples};
use super::spec::{AlgebraSpec, Evaluator};
use crate::error::{Error, Result};
use crate::expr::Poly;
use crate::homify::IdentitySystem;
use crate::linalg::{basis_vector, is_zero_vector, Matrix, Vector};

/// A basis tuple on which something failed, with the nonzero defect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// Which identity, operation or axiom instance failed.
    pub label: String,
    /// `(variable, basis element)` pairs, in variable order.
    pub assignment: Vec<(String, String)>,
    pub tuple: Vec<usize>,
    #[serde(serialize_with = "crate::rational::serde_q::serialize_vec")]
    pub defect: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    /// Number of basis tuples evaluated.
    pub tuples: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.tuples += other.tuples;
        self.witnesses.extend(other.witnesses);
    }
}

/// Checks `β(op(b…)) = op(βb…)` on every basis tuple of every operation.
pub fn is_morphism(spec: &AlgebraSpec, beta: &Matrix) -> Result<CheckReport> {
    let dim = spec.dim();
    if beta.nrows() != dim || beta.ncols() != dim {
        return Err(Error::Dimension {
            expected: dim,
            got: beta.nrows(),
        });
    }
    let images: Vec<Vector> = (0..dim).map(|j| beta.column(j)).collect();
    let mut report = CheckReport::default();
    for (name, op) in &spec.ops {
        for t in tuples(dim, op.arity()) {
            report.tuples += 1;
            let lhs = beta.apply(op.get(&t));
            let args: Vec<&[crate::rational::Q]> = t.iter().map(|&i| images[i].as_slice()).collect();
            let rhs = op.eval(&args);
            if lhs != rhs {
                let defect = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                report.witnesses.push(Witness {
                    label: name.clone(),
                    assignment: t
                        .iter()
                        .enumerate()
                        .map(|(p, &i)| (format!("#{}", p + 1), spec.basis[i].clone()))
                        .collect(),
                    tuple: t,
                    defect,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Evaluates one multilinear identity on every basis tuple of its variables
/// (sorted by name) and returns the lexicographically first failure.
pub fn check_poly(
    ev: &Evaluator<'_>,
    basis: &[String],
    p: &Poly,
    label: &str,
    jobs: usize,
) -> Result<CheckReport> {
    let vars: Vec<String> = p.variables().into_iter().collect();
    let dim = ev.dim();
    let total = dim.pow(vars.len() as u32);
    let probe = |idx: usize| -> Result<Option<Witness>> {
        let t = tuple_at(dim, vars.len(), idx);
        let assign: BTreeMap<String, Vector> = vars
            .iter()
            .zip(&t)
            .map(|(v, &i)| (v.clone(), basis_vector(dim, i)))
            .collect();
        let defect = ev.eval(p, &assign)?;
        Ok((!is_zero_vector(&defect)).then(|| Witness {
            label: label.to_string(),
            assignment: vars
                .iter()
                .zip(&t)
                .map(|(v, &i)| (v.clone(), basis[i].clone()))
                .collect(),
            tuple: t,
            defect,
        }))
    };
    let first = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Invalid(e.to_string()))?;
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .map(probe)
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                })
        })
        .transpose()?
        .flatten()
    } else {
        let mut found = None;
        for idx in 0..total {
            if let Some(w) = probe(idx)? {
                found = Some(w);
                break;
            }
        }
        found
    };
    Ok(CheckReport {
        tuples: total,
        witnesses: first.into_iter().collect(),
    })
}

/// Checks every identity of `sys` on all basis tuples.
pub fn check_identity(spec: &AlgebraSpec, sys: &IdentitySystem, jobs: usize) -> Result<CheckReport> {
    let ev = spec.evaluator(&sys.signature)?;
    let mut report = CheckReport::default();
    for (i, id) in sys.identities.iter().enumerate() {
        let label = format!("{}[{}]", sys.name, i + 1);
        report.merge(check_poly(&ev, &spec.basis, id, &label, jobs)?);
    }
    Ok(report)
}
