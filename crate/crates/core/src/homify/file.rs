use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly, Signature};
use crate::rational::{format_q, parse_q};

/// On-disk form of an identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityFile {
    pub signature: Signature,
    pub variables: Vec<String>,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub tree: Value,
}

impl IdentityFile {
    pub fn from_poly(sig: &Signature, p: &Poly) -> Self {
        IdentityFile {
            signature: sig.clone(),
            variables: p.variables().into_iter().collect(),
            terms: p
                .terms()
                .map(|(m, c)| Term {
                    coeff: format_q(c),
                    tree: tree_to_json(m),
                })
                .collect(),
        }
    }

    /// Decodes the terms, checking operations against the signature and
    /// leaves against the declared variables.
    pub fn to_poly(&self) -> Result<(Signature, Poly)> {
        self.signature.validate()?;
        let mut p = Poly::zero();
        for t in &self.terms {
            let m = tree_from_json(&t.tree, &self.signature)?;
            for g in m.leaves() {
                if !self.variables.contains(&g.base) {
                    return Err(Error::UnboundVariable(g.base.clone()));
                }
            }
            p.add_term(m, parse_q(&t.coeff)?);
        }
        Ok((self.signature.clone(), p))
    }
}

pub fn identity_to_json(sig: &Signature, p: &Poly) -> String {
    serde_json::to_string_pretty(&IdentityFile::from_poly(sig, p)).unwrap()
}

pub fn identity_from_json(src: &str) -> Result<(Signature, Poly)> {
    serde_json::from_str::<IdentityFile>(src)?.to_poly()
}

fn tree_to_json(m: &Monomial) -> Value {
    match m {
        Monomial::Unit => json!("1"),
        Monomial::Leaf(g) => json!({"var": g.base, "exp": g.alpha_exp}),
        Monomial::Node(s, ch) => {
            let mut v = vec![json!(s)];
            v.extend(ch.iter().map(tree_to_json));
            Value::Array(v)
        }
    }
}

fn tree_from_json(v: &Value, sig: &Signature) -> Result<Monomial> {
    let bad = |msg: &str| Error::Invalid(format!("{msg}: {v}"));
    match v {
        Value::String(s) if s == "1" => Ok(Monomial::Unit),
        Value::Object(o) => {
            let name = o
                .get("var")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("leaf without `var`"))?;
            let exp = match o.get("exp") {
                None => 0,
                Some(e) => e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("bad exponent"))?,
            };
            Ok(Monomial::gen(name, exp))
        }
        Value::Array(items) => {
            let (head, rest) = items.split_first().ok_or_else(|| bad("empty node"))?;
            let sym = head.as_str().ok_or_else(|| bad("operation must be a string"))?;
            let arity = sig.arity(sym).ok_or_else(|| Error::UnknownOp(sym.to_string()))?;
            if arity != rest.len() {
                return Err(Error::Arity {
                    symbol: sym.to_string(),
                    expected: arity,
                    got: rest.len(),
                });
            }
            let ch = rest
                .iter()
                .map(|c| tree_from_json(c, sig))
                .collect::<Result<Vec<_>>>()?;
            Ok(Monomial::node(sym, ch))
        }
        _ => Err(bad("unrecognized tree")),
    }
}
