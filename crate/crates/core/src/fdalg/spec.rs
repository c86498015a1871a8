use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::multilinear::MultilinearMap;
use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly, Signature, PRODUCT};
use crate::linalg::{basis_vector, is_zero_vector, zero_vector, Matrix, Vector};
use crate::rational::{format_q, parse_q, Q};

/// A finite-dimensional Hom-algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub basis: Vec<String>,
    pub ops: BTreeMap<String, MultilinearMap>,
    pub alpha: Matrix,
    pub unit: Option<Vector>,
}

impl AlgebraSpec {
    /// An algebra with no operations and `α = id`.
    pub fn new<S: Into<String>>(name: &str, basis: impl IntoIterator<Item = S>) -> Self {
        let basis: Vec<String> = basis.into_iter().map(Into::into).collect();
        let dim = basis.len();
        AlgebraSpec {
            name: name.to_string(),
            basis,
            ops: BTreeMap::new(),
            alpha: Matrix::identity(dim),
            unit: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn with_op(mut self, name: &str, op: MultilinearMap) -> Self {
        self.ops.insert(name.to_string(), op);
        self
    }

    pub fn with_alpha(mut self, alpha: Matrix) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn op(&self, name: &str) -> Result<&MultilinearMap> {
        self.ops.get(name).ok_or_else(|| Error::UnknownOp(name.to_string()))
    }

    pub fn basis_index(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::Invalid(format!("no basis element `{name}`")))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        basis_vector(self.dim(), i)
    }

    /// Sets one structure constant of a binary op by basis names.
    pub fn set(&mut self, op: &str, args: &[&str], out: &[(&str, Q)]) -> Result<()> {
        let idx = args
            .iter()
            .map(|a| self.basis_index(a))
            .collect::<Result<Vec<_>>>()?;
        let mut v = zero_vector(self.dim());
        for (b, c) in out {
            v[self.basis_index(b)?] += c;
        }
        let dim = self.dim();
        self.ops
            .entry(op.to_string())
            .or_insert_with(|| MultilinearMap::zero(args.len(), dim))
            .set(&idx, v);
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let dim = self.dim();
        if dim == 0 {
            return Err(Error::Invalid("algebra of dimension zero".into()));
        }
        if self.alpha.nrows() != dim || self.alpha.ncols() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: self.alpha.nrows(),
            });
        }
        for (name, m) in &self.ops {
            if m.dim() != dim || m.arity() < 2 {
                return Err(Error::Invalid(format!("bad table for `{name}`")));
            }
        }
        if let Some(u) = &self.unit {
            if u.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: u.len(),
                });
            }
            let mu = self.binary_product()?;
            for i in 0..dim {
                let e = self.basis_vector(i);
                let ae = self.alpha.apply(&e);
                if mu.eval(&[u, &e]) != ae || mu.eval(&[&e, u]) != ae {
                    return Err(Error::Invalid(format!(
                        "unit axiom fails at `{}`",
                        self.basis[i]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The unique binary operation (or the one named `mu` / `*`).
    pub fn binary_product(&self) -> Result<&MultilinearMap> {
        let name = resolve_op(self, PRODUCT, 2)?;
        self.op(&name)
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.ops.iter().map(|(n, m)| (n.clone(), m.arity())), self.unit.is_some())
            .unwrap()
    }

    /// Evaluator binding each symbol of `sig` to an operation of this algebra.
    pub fn evaluator(&self, sig: &Signature) -> Result<Evaluator<'_>> {
        let mut ev = Evaluator::new(self.dim(), &self.alpha);
        ev.unit = self.unit.as_ref();
        for op in sig.ops() {
            let name = resolve_op(self, &op.symbol, op.arity)?;
            ev.bind(&op.symbol, self.op(&name)?);
        }
        Ok(ev)
    }

    pub fn format_vector(&self, v: &[Q]) -> String {
        format_vector(&self.basis, v)
    }

    pub fn from_json(src: &str) -> Result<AlgebraSpec> {
        let file: SpecFile = serde_json::from_str(src)?;
        file.into_spec()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SpecFile::from_spec(self)).unwrap()
    }
}

/// Picks the algebra operation matching an identity symbol: same name, then
/// `*` ↔ `mu`, then the unique operation of that arity.
pub fn resolve_op(spec: &AlgebraSpec, symbol: &str, arity: usize) -> Result<String> {
    let fits = |n: &str| spec.ops.get(n).is_some_and(|m| m.arity() == arity);
    if fits(symbol) {
        return Ok(symbol.to_string());
    }
    if symbol == PRODUCT && fits("mu") {
        return Ok("mu".into());
    }
    let same: Vec<&String> = spec
        .ops
        .iter()
        .filter(|(_, m)| m.arity() == arity)
        .map(|(n, _)| n)
        .collect();
    match same.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::UnknownOp(format!(
            "{symbol} (arity {arity}) in algebra `{}`",
            spec.name
        ))),
    }
}

pub fn format_vector(basis: &[String], v: &[Q]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(basis)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, b)| format!("{}*{b}", format_q(c)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// Evaluates expressions once symbols are bound to multilinear maps.
pub struct Evaluator<'a> {
    dim: usize,
    alpha: &'a Matrix,
    ops: HashMap<String, &'a MultilinearMap>,
    unit: Option<&'a Vector>,
    powers: OnceLock<Vec<Matrix>>,
}

const CACHED_POWERS: u32 = 8;

impl<'a> Evaluator<'a> {
    pub fn new(dim: usize, alpha: &'a Matrix) -> Self {
        Evaluator {
            dim,
            alpha,
            ops: HashMap::new(),
            unit: None,
            powers: OnceLock::new(),
        }
    }

    pub fn bind(&mut self, symbol: &str, map: &'a MultilinearMap) {
        self.ops.insert(symbol.to_string(), map);
    }

    pub fn set_unit(&mut self, unit: &'a Vector) {
        self.unit = Some(unit);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_bound(&self, symbol: &str) -> bool {
        self.ops.contains_key(symbol)
    }

    pub fn alpha_pow(&self, v: &[Q], k: u32) -> Vector {
        let powers = self.powers.get_or_init(|| {
            let mut p = vec![Matrix::identity(self.dim)];
            for _ in 1..=CACHED_POWERS {
                p.push(self.alpha.mul(p.last().unwrap()));
            }
            p
        });
        match powers.get(k as usize) {
            Some(m) => m.apply(v),
            None => (0..k).fold(v.to_vec(), |acc, _| self.alpha.apply(&acc)),
        }
    }

    pub fn eval_monomial(&self, m: &Monomial, assign: &BTreeMap<String, Vector>) -> Result<Vector> {
        match m {
            Monomial::Unit => self
                .unit
                .cloned()
                .ok_or_else(|| Error::Invalid("algebra has no unit".into())),
            Monomial::Leaf(g) => {
                let v = assign
                    .get(&g.base)
                    .ok_or_else(|| Error::UnboundVariable(g.base.clone()))?;
                if v.len() != self.dim {
                    return Err(Error::Dimension {
                        expected: self.dim,
                        got: v.len(),
                    });
                }
                Ok(self.alpha_pow(v, g.alpha_exp))
            }
            Monomial::Node(s, ch) => {
                let map = self
                    .ops
                    .get(s)
                    .ok_or_else(|| Error::UnknownOp(s.clone()))?;
                if map.arity() != ch.len() {
                    return Err(Error::Arity {
                        symbol: s.clone(),
                        expected: map.arity(),
                        got: ch.len(),
                    });
                }
                let args = ch
                    .iter()
                    .map(|c| self.eval_monomial(c, assign))
                    .collect::<Result<Vec<_>>>()?;
                if args.iter().any(|a| is_zero_vector(a)) {
                    return Ok(zero_vector(self.dim));
                }
                let refs: Vec<&[Q]> = args.iter().map(Vec::as_slice).collect();
                Ok(map.eval(&refs))
            }
        }
    }

    pub fn eval(&self, p: &Poly, assign: &BTreeMap<String, Vector>) -> Result<Vector> {
        let mut out = zero_vector(self.dim);
        for (m, c) in p.terms() {
            let v = self.eval_monomial(m, assign)?;
            crate::linalg::axpy(&mut out, c, &v);
        }
        Ok(out)
    }
}

/// Evaluates `p` in `spec`, binding identity symbols to algebra operations.
pub fn eval(spec: &AlgebraSpec, p: &Poly, assign: &BTreeMap<String, Vector>) -> Result<Vector> {
    let mut ops = BTreeMap::new();
    for m in p.monomials() {
        m.for_each_node(&mut |s, a| {
            ops.insert(s.to_string(), a);
        });
    }
    let sig = Signature::new(ops, spec.unit.is_some())?;
    spec.evaluator(&sig)?.eval(p, assign)
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    basis: Vec<String>,
    ops: Vec<OpFile>,
    alpha: Matrix,
    #[serde(default)]
    unit: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct OpFile {
    name: String,
    arity: usize,
    entries: Vec<Vec<Value>>,
}

impl SpecFile {
    fn from_spec(spec: &AlgebraSpec) -> Self {
        SpecFile {
            name: Some(spec.name.clone()),
            dim: spec.dim(),
            basis: spec.basis.clone(),
            ops: spec
                .ops
                .iter()
                .map(|(name, m)| OpFile {
                    name: name.clone(),
                    arity: m.arity(),
                    entries: m
                        .entries()
                        .map(|(t, k, c)| {
                            let mut row: Vec<Value> = t.into_iter().map(Value::from).collect();
                            row.push(Value::from(k));
                            row.push(Value::from(format_q(c)));
                            row
                        })
                        .collect(),
                })
                .collect(),
            alpha: spec.alpha.clone(),
            unit: spec.unit.as_ref().map(|u| u.iter().map(format_q).collect()),
        }
    }

    fn into_spec(self) -> Result<AlgebraSpec> {
        if self.basis.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: self.basis.len(),
            });
        }
        let mut spec = AlgebraSpec::new(self.name.as_deref().unwrap_or("algebra"), self.basis);
        spec.alpha = self.alpha;
        let dim = self.dim;
        for op in self.ops {
            if op.arity < 2 {
                return Err(Error::Invalid(format!("operation `{}` has arity < 2", op.name)));
            }
            let mut m = MultilinearMap::zero(op.arity, dim);
            for e in &op.entries {
                if e.len() != op.arity + 2 {
                    return Err(Error::Invalid(format!("bad entry {e:?} in `{}`", op.name)));
                }
                let idx = e[..=op.arity]
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|i| i as usize)
                            .filter(|&i| i < dim)
                            .ok_or_else(|| Error::Invalid(format!("bad index {x}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let c = match &e[op.arity + 1] {
                    Value::String(s) => parse_q(s)?,
                    Value::Number(n) if n.is_i64() => Q::from_integer(n.as_i64().unwrap().into()),
                    other => return Err(Error::Invalid(format!("bad coefficient {other}"))),
                };
                m.add_entry(&idx[..op.arity], idx[op.arity], &c);
            }
            spec.ops.insert(op.name, m);
        }
        spec.unit = self
            .unit
            .map(|u| u.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>())
            .transpose()?;
        spec.validate()?;
        Ok(spec)
    }
}
