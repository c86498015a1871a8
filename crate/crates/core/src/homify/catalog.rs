use super::{homify_identity, sabinin};
use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly, Signature};
use crate::rational::{one, Q};

/// A named family of identities over one signature.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentitySystem {
    pub name: String,
    pub signature: Signature,
    pub identities: Vec<Poly>,
    pub hom_form: bool,
}

impl IdentitySystem {
    /// Homifies an ordinary system; Hom-type systems are returned unchanged.
    pub fn homified(&self) -> Result<IdentitySystem> {
        if self.hom_form {
            return Ok(self.clone());
        }
        let identities = self
            .identities
            .iter()
            .map(|p| homify_identity(p, &self.signature))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdentitySystem {
            name: format!("hom_{}", self.name),
            signature: self.signature.clone(),
            identities,
            hom_form: true,
        })
    }
}

const NAMES: &[&str] = &[
    "associative",
    "hom_associative",
    "lie",
    "hom_lie",
    "jacobi",
    "hom_jacobi",
    "akivis",
    "hom_akivis",
    "btqq",
    "hom_btqq",
    "alternative",
    "hom_alternative",
    "malcev",
    "hom_malcev",
    "lts",
    "hom_lts",
    "three_lie",
    "hom_three_lie",
    "lts_fundamental",
    "hom_lts_fundamental",
    "bol",
    "hom_bol",
    "ly",
    "hom_ly",
    "teichmuller",
    "hom_teichmuller",
    "sabinin",
    "hom_sabinin",
];

pub fn catalog_names() -> &'static [&'static str] {
    NAMES
}

fn normalize(name: &str) -> String {
    let n = name.trim().to_ascii_lowercase().replace('-', "_");
    match n.as_str() {
        "3lie" | "3_lie" => "three_lie".into(),
        "hom_3lie" | "hom_3_lie" | "3_hom_lie" => "hom_three_lie".into(),
        "lie_yamaguti" => "ly".into(),
        "hom_lie_yamaguti" => "hom_ly".into(),
        _ => n,
    }
}

/// Looks up a builtin identity system by name (`-` and `_` are interchangeable).
pub fn catalog(name: &str) -> Result<IdentitySystem> {
    let key = normalize(name);
    let (base, hom) = match key.strip_prefix("hom_") {
        Some(rest) => (rest.to_string(), true),
        None => (key.clone(), false),
    };
    let k = Twist(hom);
    let (sig, identities) = match base.as_str() {
        "associative" => (product_sig(), vec![k.assoc(&v("x"), &v("y"), &v("z"))]),
        "lie" => (bracket_sig(), vec![skew("x", "y"), k.jacobi(&v("x"), &v("y"), &v("z"))]),
        "jacobi" => (bracket_sig(), vec![k.jacobi(&v("x"), &v("y"), &v("z"))]),
        "akivis" => (akivis_sig(), k.akivis()),
        "btqq" => (btqq_sig(), k.btqq()),
        "alternative" => (product_sig(), k.alternative()),
        "malcev" => (bracket_sig(), vec![skew("x", "y"), k.malcev()]),
        "lts" => (ternary_sig(), k.lts()),
        "three_lie" => (ternary_sig(), k.three_lie()),
        "lts_fundamental" => (ternary_sig(), vec![k.fundamental(["u", "v", "x", "y", "z"])]),
        "bol" => (akivis_sig(), k.bol()),
        "ly" => (akivis_sig(), k.ly()),
        "teichmuller" => {
            let p = Poly::from_terms(teichmuller_terms(hom).into_iter().map(|(c, m)| (m, c)));
            (product_sig(), vec![p])
        }
        "sabinin" => {
            let sig = sabinin::sabinin_signature(3);
            let mut ids = Vec::new();
            for n in 0..=1 {
                let inst = sabinin::instances_with(n, 2, hom);
                ids.extend(inst.hsab1);
                ids.extend(inst.hsab2);
                ids.extend(inst.hsab3);
                ids.extend(inst.hsab4);
            }
            (sig, ids)
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    Ok(IdentitySystem {
        name: key,
        signature: sig,
        identities,
        hom_form: hom,
    })
}

fn product_sig() -> Signature {
    Signature::magmatic(false)
}

fn bracket_sig() -> Signature {
    Signature::new([("B", 2)], false).unwrap()
}

fn ternary_sig() -> Signature {
    Signature::new([("T", 3)], false).unwrap()
}

fn akivis_sig() -> Signature {
    Signature::new([("B", 2), ("T", 3)], false).unwrap()
}

fn btqq_sig() -> Signature {
    Signature::new([("B", 2), ("T", 3), ("Q", 4), ("P", 4)], false).unwrap()
}

fn v(x: &str) -> Poly {
    Poly::var(x)
}

fn b(x: &Poly, y: &Poly) -> Poly {
    Poly::op("B", &[x.clone(), y.clone()])
}

fn t(x: &Poly, y: &Poly, z: &Poly) -> Poly {
    Poly::op("T", &[x.clone(), y.clone(), z.clone()])
}

fn skew(x: &str, y: &str) -> Poly {
    b(&v(x), &v(y)) + b(&v(y), &v(x))
}

fn t_skew() -> Poly {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    t(&x, &y, &z) + t(&y, &x, &z)
}

fn t_cyclic() -> Poly {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    t(&x, &y, &z) + t(&z, &x, &y) + t(&y, &z, &x)
}

/// Writes an identity either in ordinary form or with the twisting maps
/// placed exactly as in the Hom-type definition.
struct Twist(bool);

impl Twist {
    fn a(&self, p: &Poly, k: u32) -> Poly {
        if self.0 {
            p.apply_alpha(k)
        } else {
            p.clone()
        }
    }

    fn assoc(&self, x: &Poly, y: &Poly, z: &Poly) -> Poly {
        x.mul(y).mul(&self.a(z, 1)) - self.a(x, 1).mul(&y.mul(z))
    }

    fn jacobi(&self, x: &Poly, y: &Poly, z: &Poly) -> Poly {
        b(&b(x, y), &self.a(z, 1)) + b(&b(y, z), &self.a(x, 1)) + b(&b(z, x), &self.a(y, 1))
    }

    fn alternating_t(&self, a: &Poly, b_: &Poly, c: &Poly) -> Poly {
        t(a, b_, c) - t(a, c, b_) - t(b_, a, c) + t(b_, c, a) + t(c, a, b_) - t(c, b_, a)
    }

    fn akivis(&self) -> Vec<Poly> {
        let (a, b_, c) = (v("a"), v("b"), v("c"));
        vec![skew("a", "b"), self.jacobi(&a, &b_, &c) - self.alternating_t(&a, &b_, &c)]
    }

    fn btqq(&self) -> Vec<Poly> {
        let (a, b_, c, d) = (v("a"), v("b"), v("c"), v("d"));
        let q = |w: &Poly, x: &Poly, y: &Poly, z: &Poly| {
            Poly::op("Q", &[w.clone(), x.clone(), y.clone(), z.clone()])
        };
        let p = |w: &Poly, x: &Poly, y: &Poly, z: &Poly| {
            Poly::op("P", &[w.clone(), x.clone(), y.clone(), z.clone()])
        };
        let mut ids = self.akivis();
        ids.push(
            t(&b(&a, &b_), &self.a(&c, 1), &self.a(&d, 1)) - b(&self.a(&a, 2), &t(&b_, &c, &d))
                + b(&self.a(&b_, 2), &t(&a, &c, &d))
                - q(&a, &b_, &c, &d)
                + q(&b_, &a, &c, &d),
        );
        ids.push(
            t(&self.a(&a, 1), &b(&b_, &c), &self.a(&d, 1)) - b(&self.a(&b_, 2), &t(&a, &c, &d))
                + b(&self.a(&c, 2), &t(&a, &b_, &d))
                - p(&a, &b_, &c, &d)
                + p(&a, &c, &b_, &d),
        );
        ids.push(
            b(&self.a(&b_, 2), &t(&a, &c, &d)) - b(&self.a(&b_, 2), &t(&a, &d, &c))
                - t(&self.a(&a, 1), &self.a(&b_, 1), &b(&c, &d))
                - q(&a, &b_, &c, &d)
                + q(&a, &b_, &d, &c)
                + p(&a, &b_, &c, &d)
                - p(&a, &b_, &d, &c),
        );
        ids
    }

    // (x,x,y) = 0 and (y,x,x) = 0, polarized in x
    fn alternative(&self) -> Vec<Poly> {
        let (x, w, y) = (v("x"), v("w"), v("y"));
        vec![
            self.assoc(&x, &w, &y) + self.assoc(&w, &x, &y),
            self.assoc(&y, &x, &w) + self.assoc(&y, &w, &x),
        ]
    }

    // J(αx, αy, [x,z]) - [J(x,y,z), α²x], polarized in x
    fn malcev(&self) -> Poly {
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let quadratic = self.jacobi(&self.a(&x, 1), &self.a(&y, 1), &b(&x, &z))
            - b(&self.jacobi(&x, &y, &z), &self.a(&x, 2));
        polarize(&quadratic, "x", "w")
    }

    fn fundamental(&self, names: [&str; 5]) -> Poly {
        let [u, vv, x, y, z] = names.map(v);
        t(&self.a(&u, 2), &self.a(&vv, 2), &t(&x, &y, &z))
            - t(&t(&u, &vv, &x), &self.a(&y, 2), &self.a(&z, 2))
            - t(&self.a(&x, 2), &t(&u, &vv, &y), &self.a(&z, 2))
            - t(&self.a(&x, 2), &self.a(&y, 2), &t(&u, &vv, &z))
    }

    fn lts(&self) -> Vec<Poly> {
        vec![t_skew(), t_cyclic(), self.fundamental(["u", "v", "x", "y", "z"])]
    }

    fn three_lie(&self) -> Vec<Poly> {
        let (x, y, z) = (v("x"), v("y"), v("z"));
        vec![
            t_skew(),
            t(&x, &y, &z) - t(&y, &z, &x),
            self.fundamental(["u", "v", "x", "y", "z"]),
        ]
    }

    fn bol(&self) -> Vec<Poly> {
        let [x, y, u, vv, w] = ["x", "y", "u", "v", "w"].map(v);
        let fourth = t(&self.a(&x, 1), &self.a(&y, 1), &b(&u, &vv))
            - b(&t(&x, &y, &u), &self.a(&vv, 2))
            - b(&self.a(&u, 2), &t(&x, &y, &vv))
            - t(&self.a(&u, 1), &self.a(&vv, 1), &b(&x, &y))
            + b(&b(&self.a(&u, 1), &self.a(&vv, 1)), &b(&self.a(&x, 1), &self.a(&y, 1)));
        let fifth = t(&self.a(&x, 2), &self.a(&y, 2), &t(&u, &vv, &w))
            - t(&t(&x, &y, &u), &self.a(&vv, 2), &self.a(&w, 2))
            - t(&self.a(&u, 2), &t(&x, &y, &vv), &self.a(&w, 2))
            - t(&self.a(&u, 2), &self.a(&vv, 2), &t(&x, &y, &w));
        vec![skew("x", "y"), t_skew(), t_cyclic(), fourth, fifth]
    }

    fn ly(&self) -> Vec<Poly> {
        let [x, y, z, u, vv] = ["x", "y", "z", "u", "v"].map(v);
        let third = b(&b(&x, &y), &self.a(&z, 1))
            + b(&b(&z, &x), &self.a(&y, 1))
            + b(&b(&y, &z), &self.a(&x, 1))
            + t_cyclic();
        let fourth = t(&b(&x, &y), &self.a(&z, 1), &self.a(&u, 1))
            + t(&b(&z, &x), &self.a(&y, 1), &self.a(&u, 1))
            + t(&b(&y, &z), &self.a(&x, 1), &self.a(&u, 1));
        let fifth = t(&self.a(&x, 1), &self.a(&y, 1), &b(&u, &vv))
            - b(&t(&x, &y, &u), &self.a(&vv, 2))
            - b(&self.a(&u, 2), &t(&x, &y, &vv));
        vec![
            skew("x", "y"),
            t_skew(),
            third,
            fourth,
            fifth,
            self.fundamental(["u", "v", "x", "y", "z"]),
        ]
    }
}

/// Linearizes `p` in `var`: the sum over occurrences of `var` of `p` with
/// that single occurrence renamed to `new` (twisting exponents kept).
pub fn polarize(p: &Poly, var: &str, new: &str) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let count = m.leaves().iter().filter(|g| g.base == var).count();
        for target in 0..count {
            let mut seen = 0;
            let renamed = m.map_leaves(&mut |g| {
                let mut base = g.base.clone();
                if g.base == var {
                    if seen == target {
                        base = new.to_string();
                    }
                    seen += 1;
                }
                Monomial::gen(base, g.alpha_exp)
            });
            out.add_term(renamed, c.clone());
        }
    }
    out
}

/// The ten tree terms of the (Hom-)Teichmüller identity before cancellation.
pub fn teichmuller_terms(hom: bool) -> Vec<(Q, Monomial)> {
    let k = |e: u32| if hom { e } else { 0 };
    let x = |n: &str, e: u32| Monomial::gen(n, k(e));
    let m = Monomial::mul;
    // (p, q, r)_α with the twisting of each slot already applied
    let assoc = |p: Monomial, q: Monomial, r: Monomial, extra: u32| {
        [
            (one(), m(m(p.clone(), q.clone()), r.shifted(k(extra)))),
            (-one(), m(p.shifted(k(extra)), m(q, r))),
        ]
    };
    let mut out = Vec::new();
    let mut push = |sign: i64, pair: [(Q, Monomial); 2]| {
        for (c, mono) in pair {
            out.push((c * Q::from_integer(sign.into()), mono));
        }
    };
    push(1, assoc(m(x("w", 0), x("x", 0)), x("y", 1), x("z", 1), 1));
    push(-1, assoc(x("w", 1), m(x("x", 0), x("y", 0)), x("z", 1), 1));
    push(1, assoc(x("w", 1), x("x", 1), m(x("y", 0), x("z", 0)), 1));
    for (c, mono) in assoc(x("x", 0), x("y", 0), x("z", 0), 1) {
        out.push((-c, m(x("w", 2), mono)));
    }
    for (c, mono) in assoc(x("w", 0), x("x", 0), x("y", 0), 1) {
        out.push((-c, m(mono, x("z", 2))));
    }
    out
}
