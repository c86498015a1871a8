use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

use super::{Monomial, Signature, PRODUCT};

/// Finite rational combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn unit() -> Self {
        Poly::from(Monomial::Unit)
    }

    pub fn var(name: &str) -> Self {
        Poly::from(Monomial::var(name))
    }

    pub fn term(c: Q, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Applies the twisting map `k` times (pushed to the leaves).
    pub fn apply_alpha(&self, k: u32) -> Poly {
        self.map_monomials(|m| m.shifted(k))
    }

    /// Linear extension of a monomial map (images may collide and cancel).
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Linear extension of a monomial-to-polynomial map.
    pub fn flat_map(&self, mut f: impl FnMut(&Monomial) -> Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out += &f(m).scale(c);
        }
        out
    }

    /// Multilinear expansion of `symbol(args...)`; arity is `args.len()`.
    pub fn op(symbol: &str, args: &[Poly]) -> Poly {
        let mut acc: Vec<(Vec<Monomial>, Q)> = vec![(Vec::new(), Q::one())];
        for arg in args {
            let mut next = Vec::with_capacity(acc.len() * arg.len());
            for (prefix, c) in &acc {
                for (m, k) in arg.terms() {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    next.push((p, c * k));
                }
            }
            acc = next;
        }
        Poly::from_terms(
            acc.into_iter()
                .map(|(ch, c)| (Monomial::node(symbol, ch), c)),
        )
    }

    /// Bilinear product `(a*b)`; the unit is an ordinary leaf here.
    pub fn mul(&self, other: &Poly) -> Poly {
        Poly::op(PRODUCT, &[self.clone(), other.clone()])
    }

    /// Names of all generator leaves.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.leaves().into_iter().map(|g| g.base.clone()))
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes each generator leaf `g` (with exponent) by `f(g)`.
    pub fn substitute(&self, f: &mut impl FnMut(&super::GeneratorRef) -> Poly) -> Poly {
        self.flat_map(|m| substitute_monomial(m, f))
    }
}

fn substitute_monomial(
    m: &Monomial,
    f: &mut impl FnMut(&super::GeneratorRef) -> Poly,
) -> Poly {
    match m {
        Monomial::Unit => Poly::unit(),
        Monomial::Leaf(g) => f(g),
        Monomial::Node(s, ch) => {
            let args: Vec<Poly> = ch.iter().map(|c| substitute_monomial(c, f)).collect();
            Poly::op(s, &args)
        }
    }
}

/// Multilinear `symbol(args...)`, checking the arity against `sig`.
pub fn apply_op(sig: &Signature, symbol: &str, args: &[Poly]) -> Result<Poly> {
    let arity = sig
        .arity(symbol)
        .ok_or_else(|| Error::UnknownOp(symbol.into()))?;
    if arity != args.len() {
        return Err(Error::Arity {
            symbol: symbol.into(),
            expected: arity,
            got: args.len(),
        });
    }
    Ok(Poly::op(symbol, args))
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        Poly::term(Q::one(), m)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{m}")?;
            } else if m.is_unit() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {}", m.to_nested_string())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn bilinear_expansion() {
        let x = Poly::var("x");
        let y = Poly::var("y");
        let z = Poly::var("z");
        let p = x.mul(&(&y + &z));
        assert_eq!(p.len(), 2);
        assert_eq!(p, &x.mul(&y) + &x.mul(&z));
        let p = x.scale(&q(2)).mul(&y.scale(&q(3)));
        assert_eq!(p, x.mul(&y).scale(&q(6)));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let p = Poly::var("x").mul(&Poly::var("y")) + Poly::var("z");
        assert!((&p + &p.scale(&q(-1))).is_zero());
    }

    #[test]
    fn arity_checked() {
        let sig = Signature::magmatic(false);
        let x = Poly::var("x");
        assert!(matches!(
            apply_op(&sig, "*", &[x.clone()]),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            apply_op(&sig, "T", &[x.clone(), x.clone(), x]),
            Err(Error::UnknownOp(_))
        ));
    }

    #[test]
    fn alpha_on_polys() {
        let x = Poly::var("x");
        let y = Poly::var("y");
        assert_eq!(x.mul(&y).apply_alpha(1).to_string(), "A^1(x)*A^1(y)");
        assert_eq!(Poly::unit().apply_alpha(5), Poly::unit());
        let p = x.apply_alpha(1).mul(&Poly::var("z"));
        assert_eq!(p.apply_alpha(2).to_string(), "A^3(x)*A^2(z)");
    }

    #[test]
    fn display_coefficients() {
        let x = Poly::var("x");
        let y = Poly::var("y");
        let p = x.mul(&y).scale(&q(-2)) + x.clone();
        assert_eq!(p.to_string(), "x - 2 (x*y)");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
