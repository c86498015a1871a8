use std::collections::BTreeMap;

use itertools::Itertools;

use crate::expr::{unshuffle_splits, Poly, Signature};

/// Symbol of the Sabinin bracket `<x1…xn; a, b>` (arity `n + 2`).
pub fn sab_symbol(n: usize) -> String {
    format!("S{n}")
}

/// Symbol of `Φ(n,m)` (arity `n + m`).
pub fn phi_symbol(n: usize, m: usize) -> String {
    format!("Phi{n}_{m}")
}

/// Brackets `S0..=S{max}` and every `Φ(n,m)` with `n ≥ 1`, `m ≥ 2`, `n + m ≤ max + 2`.
pub fn sabinin_signature(max: usize) -> Signature {
    let mut ops: Vec<(String, usize)> = (0..=max).map(|n| (sab_symbol(n), n + 2)).collect();
    for n in 1..=max + 1 {
        for m in 2..=max + 2 - n {
            ops.push((phi_symbol(n, m), n + m));
        }
    }
    Signature::new(ops, false).unwrap()
}

/// Axiom instances for one prefix length.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SabininInstances {
    pub hsab1: Vec<Poly>,
    /// One instance per split of the prefix length into `|x| + |y|`.
    pub hsab2: Vec<Poly>,
    pub hsab3: Vec<Poly>,
    /// One instance per nontrivial pair of permutations.
    pub hsab4: Vec<Poly>,
}

impl SabininInstances {
    pub fn all(&self) -> impl Iterator<Item = &Poly> {
        self.hsab1
            .iter()
            .chain(&self.hsab2)
            .chain(&self.hsab3)
            .chain(&self.hsab4)
    }

    /// The smallest signature containing every operation used.
    pub fn signature(&self) -> Signature {
        let mut ops = BTreeMap::new();
        for p in self.all() {
            for m in p.monomials() {
                m.for_each_node(&mut |s, a| {
                    ops.insert(s.to_string(), a);
                });
            }
        }
        Signature::new(ops, false).unwrap()
    }
}

/// Hom-type axiom templates with prefix length `n`; `Φ` instances use `m`.
pub fn sabinin_axiom_instances(n: usize, m: usize) -> SabininInstances {
    instances_with(n, m, true)
}

pub(crate) fn instances_with(n: usize, m: usize, hom: bool) -> SabininInstances {
    SabininInstances {
        hsab1: vec![bracket_skew(n)],
        hsab2: (0..=n).map(|r| hsab2_with(n - r, r, hom)).collect(),
        hsab3: vec![hsab3_with(n, hom)],
        hsab4: if n >= 1 && m >= 2 { hsab4(n, m) } else { Vec::new() },
    }
}

fn vars(prefix: &str, n: usize) -> Vec<Poly> {
    (1..=n).map(|i| Poly::var(&format!("{prefix}{i}"))).collect()
}

fn bracket(prefix: &[Poly], a: &Poly, b: &Poly) -> Poly {
    let mut args = prefix.to_vec();
    args.push(a.clone());
    args.push(b.clone());
    Poly::op(&sab_symbol(prefix.len()), &args)
}

fn shift_all(ps: &[Poly], k: u32) -> Vec<Poly> {
    ps.iter().map(|p| p.apply_alpha(k)).collect()
}

fn bracket_skew(n: usize) -> Poly {
    let x = vars("x", n);
    let (a, b) = (Poly::var("a"), Poly::var("b"));
    bracket(&x, &a, &b) + bracket(&x, &b, &a)
}

/// `<x;a,b> + <x;b,a>`.
pub fn hsab1(n: usize) -> Poly {
    bracket_skew(n)
}

/// `<x[a,b]y;c,e> + Σ <α^k(x₁)<x₂;a,b>α^k(y); α^k(c), α^k(e)>` with `|x| = n`, `|y| = r`.
pub fn hsab2(n: usize, r: usize) -> Poly {
    hsab2_with(n, r, true)
}

fn hsab2_with(n: usize, r: usize, hom: bool) -> Poly {
    let x = vars("x", n);
    let y = vars("y", r);
    let [a, b, c, e] = ["a", "b", "c", "e"].map(Poly::var);
    let word = |mid: &[Poly]| [x.as_slice(), mid, y.as_slice()].concat();
    let mut out = bracket(&word(&[a.clone(), b.clone()]), &c, &e)
        - bracket(&word(&[b.clone(), a.clone()]), &c, &e);
    for (x1, x2) in unshuffle_splits(&x) {
        let k = if hom { x2.len() as u32 + 1 } else { 0 };
        let inner = bracket(&x2, &a, &b);
        let mut prefix = shift_all(&x1, k);
        prefix.push(inner);
        prefix.extend(shift_all(&y, k));
        out += &bracket(&prefix, &c.apply_alpha(k), &e.apply_alpha(k));
    }
    out
}

/// Cyclic sum over `(a,b,c)` of `<xc;a,b> + Σ <α^k(x₁); <x₂;a,b>, α^k(c)>`.
pub fn hsab3(n: usize) -> Poly {
    hsab3_with(n, true)
}

fn hsab3_with(n: usize, hom: bool) -> Poly {
    let x = vars("x", n);
    let [a, b, c] = ["a", "b", "c"].map(Poly::var);
    let mut out = Poly::zero();
    for (p, q, r) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
        let mut xr = x.clone();
        xr.push(r.clone());
        out += &bracket(&xr, p, q);
        for (x1, x2) in unshuffle_splits(&x) {
            let k = if hom { x2.len() as u32 + 1 } else { 0 };
            out += &bracket(&shift_all(&x1, k), &bracket(&x2, p, q), &r.apply_alpha(k));
        }
    }
    out
}

/// `Φ(x,y) - Φ(τx,σy)` for every `(τ,σ) ≠ (id,id)`.
pub fn hsab4(n: usize, m: usize) -> Vec<Poly> {
    let x = vars("x", n);
    let y = vars("y", m);
    let sym = phi_symbol(n, m);
    let base = Poly::op(&sym, &[x.clone(), y.clone()].concat());
    let mut out = Vec::new();
    for tau in (0..n).permutations(n) {
        for sigma in (0..m).permutations(m) {
            let identity = tau.iter().enumerate().all(|(i, &t)| i == t)
                && sigma.iter().enumerate().all(|(i, &s)| i == s);
            if identity {
                continue;
            }
            let args: Vec<Poly> = tau
                .iter()
                .map(|&i| x[i].clone())
                .chain(sigma.iter().map(|&j| y[j].clone()))
                .collect();
            out.push(&base - &Poly::op(&sym, &args));
        }
    }
    out
}
