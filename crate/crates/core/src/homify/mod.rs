//! Turning ordinary multilinear identities into Hom-type identities.
//!
//! For every internal node of arity `a`, each leaf that does not descend
//! from that node receives `a - 1` further applications of the twisting
//! map. Exponents accumulate over all such nodes.

mod catalog;
mod file;
mod sabinin;

use std::collections::BTreeSet;

pub use catalog::{catalog, catalog_names, polarize, teichmuller_terms, IdentitySystem};
pub use file::{identity_from_json, identity_to_json, IdentityFile};
pub use sabinin::{
    hsab1, hsab2, hsab3, hsab4, phi_symbol, sab_symbol, sabinin_axiom_instances,
    sabinin_signature, SabininInstances,
};

use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly, Signature};

/// Computes the homified monomial `(x1 ⊗ … ⊗ xn)^α_τ` of an undecorated tree.
pub fn homify_monomial(m: &Monomial, sig: &Signature) -> Result<Monomial> {
    if m.is_decorated() {
        return Err(Error::AlreadyDecorated(m.to_string()));
    }
    check_arities(m, sig)?;
    let total = twist_weight(m);
    Ok(assign(m, total, 0))
}

fn check_arities(m: &Monomial, sig: &Signature) -> Result<()> {
    match m {
        Monomial::Node(s, ch) => {
            let arity = sig.arity(s).ok_or_else(|| Error::UnknownOp(s.clone()))?;
            if arity != ch.len() {
                return Err(Error::Arity {
                    symbol: s.clone(),
                    expected: arity,
                    got: ch.len(),
                });
            }
            ch.iter().try_for_each(|c| check_arities(c, sig))
        }
        Monomial::Unit if !sig.unitary => Err(Error::Signature(
            "unit in a non-unitary signature".into(),
        )),
        _ => Ok(()),
    }
}

/// Sum of `arity - 1` over the internal nodes.
fn twist_weight(m: &Monomial) -> u32 {
    match m {
        Monomial::Node(_, ch) => {
            (ch.len() as u32 - 1) + ch.iter().map(twist_weight).sum::<u32>()
        }
        _ => 0,
    }
}

// `on_path` is the weight of the nodes already passed on the way down; a
// leaf is comparable exactly to those, so it receives the rest.
fn assign(m: &Monomial, total: u32, on_path: u32) -> Monomial {
    match m {
        Monomial::Unit => Monomial::Unit,
        Monomial::Leaf(g) => Monomial::gen(g.base.clone(), total - on_path),
        Monomial::Node(s, ch) => {
            let here = on_path + ch.len() as u32 - 1;
            Monomial::node(
                s.clone(),
                ch.iter().map(|c| assign(c, total, here)).collect(),
            )
        }
    }
}

/// Homifies every monomial of a multilinear identity; coefficients are kept.
pub fn homify_identity(id: &Poly, sig: &Signature) -> Result<Poly> {
    check_multilinear(id)?;
    let mut out = Poly::zero();
    for (m, c) in id.terms() {
        out.add_term(homify_monomial(m, sig)?, c.clone());
    }
    Ok(out)
}

/// Every variable occurs exactly once in each monomial, and all monomials
/// share one variable set.
pub fn check_multilinear(id: &Poly) -> Result<()> {
    let mut vars: Option<BTreeSet<&str>> = None;
    for m in id.monomials() {
        let leaves = m.leaves();
        let set: BTreeSet<&str> = leaves.iter().map(|g| g.base.as_str()).collect();
        if set.len() != leaves.len() {
            return Err(Error::NotMultilinear(format!("repeated variable in {m}")));
        }
        match &vars {
            None => vars = Some(set),
            Some(v) if *v != set => {
                return Err(Error::NotMultilinear(format!(
                    "{m} uses variables {set:?}, expected {v:?}"
                )))
            }
            _ => {}
        }
    }
    Ok(())
}

/// The left-combed tree `(…((x1 x2) x3)…) xn`, undecorated.
pub fn right_normed<S: AsRef<str>>(word: &[S]) -> Result<Monomial> {
    let mut it = word.iter();
    let first = it.next().ok_or(Error::EmptyWord)?;
    Ok(it.fold(Monomial::var(first.as_ref()), |acc, x| {
        Monomial::mul(acc, Monomial::var(x.as_ref()))
    }))
}

/// `[u]_α`: the homified right-normed word, `((x1 x2) α(x3)) α²(x4) …`.
pub fn right_normed_homified<S: AsRef<str>>(word: &[S]) -> Result<Monomial> {
    homify_monomial(&right_normed(word)?, &Signature::magmatic(false))
}

/// Replaces every twisting exponent by zero (reads α as the identity).
pub fn erase_exponents(p: &Poly) -> Poly {
    p.map_monomials(Monomial::strip_exponents)
}
