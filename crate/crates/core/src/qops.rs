//! The operations `q^α`, their symmetrizations `Φ`, and the Hom-Sabinin
//! structure they induce on any Hom-algebra.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{unshuffle_splits, Poly};
use crate::fdalg::{is_morphism, AlgebraSpec, MultilinearMap, OpFamily};
use crate::linalg::{axpy, Matrix, Vector};
use crate::rational::{q, Q};

/// A Hom-algebra in which the recursion can be carried out.
pub trait HomArith {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn alpha(&self, a: &Self::Elem, k: u32) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, c: &Q, a: &Self::Elem);
}

/// Free Hom-algebra expressions; with `twisted == false` every α is the identity.
pub struct Symbolic {
    pub twisted: bool,
}

impl HomArith for Symbolic {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn alpha(&self, a: &Poly, k: u32) -> Poly {
        if self.twisted {
            a.apply_alpha(k)
        } else {
            a.clone()
        }
    }
    fn add_scaled(&self, acc: &mut Poly, c: &Q, a: &Poly) {
        *acc += &a.scale(c);
    }
}

/// Coordinate vectors of a finite-dimensional Hom-algebra.
pub struct Numeric<'a> {
    mu: &'a MultilinearMap,
    powers: Vec<Matrix>,
    alpha: &'a Matrix,
}

impl<'a> Numeric<'a> {
    pub fn new(spec: &'a AlgebraSpec) -> Result<Self> {
        let powers = (0..6).map(|k| spec.alpha.pow(k)).collect();
        Ok(Numeric {
            mu: spec.binary_product()?,
            powers,
            alpha: &spec.alpha,
        })
    }
}

impl HomArith for Numeric<'_> {
    type Elem = Vector;
    fn zero(&self) -> Vector {
        vec![Q::zero(); self.mu.dim()]
    }
    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.mu.eval(&[a, b])
    }
    fn alpha(&self, a: &Vector, k: u32) -> Vector {
        match self.powers.get(k as usize) {
            Some(m) => m.apply(a),
            None => self.alpha.pow(k).apply(a),
        }
    }
    fn add_scaled(&self, acc: &mut Vector, c: &Q, a: &Vector) {
        axpy(acc, c, a);
    }
}

/// `(a b) α(c) - α(a) (b c)`.
pub fn hom_associator<A: HomArith>(alg: &A, a: &A::Elem, b: &A::Elem, c: &A::Elem) -> A::Elem {
    let mut out = alg.mul(&alg.mul(a, b), &alg.alpha(c, 1));
    alg.add_scaled(&mut out, &q(-1), &alg.mul(&alg.alpha(a, 1), &alg.mul(b, c)));
    out
}

/// `[u]_α = (…((u1 u2) α(u3)) α²(u4)…)`.
pub fn word_product<A: HomArith>(alg: &A, u: &[A::Elem]) -> A::Elem {
    let mut it = u.iter();
    let mut acc = it.next().expect("nonempty word").clone();
    for (k, x) in it.enumerate() {
        acc = alg.mul(&acc, &alg.alpha(x, k as u32));
    }
    acc
}

fn exp(n: usize) -> u32 {
    n as u32
}

/// Memoized solver for `q^α(u, v, z)` over fixed letters and a fixed `z`.
pub struct QSolver<'a, A: HomArith> {
    alg: &'a A,
    letters: Vec<A::Elem>,
    z: A::Elem,
    cache: HashMap<(Vec<usize>, Vec<usize>), A::Elem>,
}

impl<'a, A: HomArith> QSolver<'a, A> {
    pub fn new(alg: &'a A, letters: Vec<A::Elem>, z: A::Elem) -> Self {
        QSolver {
            alg,
            letters,
            z,
            cache: HashMap::new(),
        }
    }

    fn word(&self, idx: &[usize]) -> Vec<A::Elem> {
        idx.iter().map(|&i| self.letters[i].clone()).collect()
    }

    /// `q(u, v, z)` with `u`, `v` given as letter indices.
    pub fn q(&mut self, u: &[usize], v: &[usize]) -> A::Elem {
        let alg = self.alg;
        if u.is_empty() || v.is_empty() {
            return alg.zero();
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let (nu, nv) = (u.len(), v.len());
        let bu = alg.alpha(&word_product(alg, &self.word(u)), exp(nv - 1));
        let bv = alg.alpha(&word_product(alg, &self.word(v)), exp(nu - 1));
        let zz = alg.alpha(&self.z, exp(nu + nv - 2));
        let mut out = hom_associator(alg, &bu, &bv, &zz);
        for (u1, u2) in unshuffle_splits(u) {
            for (v1, v2) in unshuffle_splits(v) {
                if u1.len() + v1.len() == 0 || u2.is_empty() || v2.is_empty() {
                    continue;
                }
                let p = match (u1.is_empty(), v1.is_empty()) {
                    (false, false) => alg.mul(
                        &alg.alpha(&word_product(alg, &self.word(&u1)), exp(v1.len() - 1)),
                        &alg.alpha(&word_product(alg, &self.word(&v1)), exp(u1.len() - 1)),
                    ),
                    (false, true) => word_product(alg, &self.word(&u1)),
                    _ => word_product(alg, &self.word(&v1)),
                };
                let inner = self.q(&u2, &v2);
                let term = alg.mul(
                    &alg.alpha(&p, exp(u2.len() + v2.len())),
                    &alg.alpha(&inner, exp(u1.len() + v1.len() - 1)),
                );
                alg.add_scaled(&mut out, &q(-1), &term);
            }
        }
        self.cache.insert(key, out.clone());
        out
    }
}

/// `q^α(u, v, z)` on explicit words.
pub fn q_alpha<A: HomArith>(alg: &A, u: &[A::Elem], v: &[A::Elem], z: &A::Elem) -> A::Elem {
    let letters: Vec<A::Elem> = u.iter().chain(v).cloned().collect();
    let ui: Vec<usize> = (0..u.len()).collect();
    let vi: Vec<usize> = (u.len()..u.len() + v.len()).collect();
    QSolver::new(alg, letters, z.clone()).q(&ui, &vi)
}

fn factorial(n: usize) -> Q {
    (1..=n as i64).map(q).fold(Q::one(), |a, b| a * b)
}

/// `Φ(u, v)`: the average over permutations σ of `u` and τ of `v` of
/// `q^α(uσ, vτ without its last letter, last letter of vτ)`.
pub fn phi<A: HomArith>(alg: &A, u: &[A::Elem], v: &[A::Elem]) -> Result<A::Elem> {
    if u.is_empty() || v.len() < 2 {
        return Err(Error::Invalid(format!(
            "phi needs |u| >= 1 and |v| >= 2, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    let (n, m) = (u.len(), v.len());
    let weight = (factorial(n) * factorial(m)).recip();
    let mut out = alg.zero();
    for s in (0..n).permutations(n) {
        for t in (0..m).permutations(m) {
            let us: Vec<A::Elem> = s.iter().map(|&i| u[i].clone()).collect();
            let vt: Vec<A::Elem> = t.iter().map(|&j| v[j].clone()).collect();
            let val = q_alpha(alg, &us, &vt[..m - 1], &vt[m - 1]);
            alg.add_scaled(&mut out, &weight, &val);
        }
    }
    Ok(out)
}

fn vars(prefix: &str, n: usize) -> Vec<Poly> {
    (1..=n).map(|i| Poly::var(&format!("{prefix}{i}"))).collect()
}

/// Symbolic `q^α_{n,m}(x1…xn; y1…ym; z)`.
pub fn q_symbolic(n: usize, m: usize, twisted: bool) -> Poly {
    let alg = Symbolic { twisted };
    q_alpha(&alg, &vars("x", n), &vars("y", m), &Poly::var("z"))
}

/// Symbolic `Φ(x1…xn; y1…ym)`.
pub fn phi_symbolic(n: usize, m: usize) -> Result<Poly> {
    phi(&Symbolic { twisted: true }, &vars("x", n), &vars("y", m))
}

/// The Hom-Sabinin operations of a multiplicative Hom-algebra:
/// `<a,b> = -(ab - ba)`, `<u;a,b> = -q(u,a,b) + q(u,b,a)` for `|u| ≤ cutoff`,
/// and `Φ(n,m)` whenever `n + m - 1 ≤ cutoff`.
pub fn yiii_hom(spec: &AlgebraSpec, cutoff: usize) -> Result<OpFamily> {
    let report = is_morphism(spec, &spec.alpha)?;
    if !report.passed() {
        return Err(Error::NotMorphism("the twisting map is not multiplicative".into()));
    }
    let alg = Numeric::new(spec)?;
    let dim = spec.dim();
    let e: Vec<Vector> = (0..dim).map(|i| spec.basis_vector(i)).collect();
    let mut fam = OpFamily::zero(dim, cutoff);
    fam.brackets.insert(
        0,
        MultilinearMap::from_fn(2, dim, |t| {
            let mut v = alg.mul(&e[t[1]], &e[t[0]]);
            axpy(&mut v, &q(-1), &alg.mul(&e[t[0]], &e[t[1]]));
            v
        }),
    );
    for n in 1..=cutoff {
        let table = MultilinearMap::from_fn(n + 2, dim, |t| {
            let (a, b) = (t[n], t[n + 1]);
            let mut letters: Vec<Vector> = t[..n].iter().map(|&i| e[i].clone()).collect();
            letters.push(e[a].clone());
            letters.push(e[b].clone());
            let u: Vec<usize> = (0..n).collect();
            let mut ab = QSolver::new(&alg, letters.clone(), e[b].clone());
            let mut ba = QSolver::new(&alg, letters, e[a].clone());
            let mut v = ba.q(&u, &[n + 1]);
            axpy(&mut v, &q(-1), &ab.q(&u, &[n]));
            v
        });
        fam.brackets.insert(n, table);
    }
    for n in 1..=cutoff {
        for m in 2..=cutoff + 1 - n {
            let table = MultilinearMap::from_fn(n + m, dim, |t| {
                let u: Vec<Vector> = t[..n].iter().map(|&i| e[i].clone()).collect();
                let v: Vec<Vector> = t[n..].iter().map(|&i| e[i].clone()).collect();
                phi(&alg, &u, &v).unwrap()
            });
            fam.phi.insert((n, m), table);
        }
    }
    Ok(fam)
}

#[cfg(test)]
mod tests;
