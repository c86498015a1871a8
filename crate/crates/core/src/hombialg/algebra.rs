use num_traits::Zero;

use crate::expr::{GeneratorRef, Monomial, Poly, PRODUCT};
use crate::linalg::Matrix;
use crate::qops::HomArith;
use crate::rational::Q;

/// How the twisting map acts on generator leaves.
#[derive(Clone, Debug, PartialEq)]
pub enum Twist {
    /// `α` is free: it raises the exponent of a leaf.
    Free,
    /// `α` is the linear extension of a matrix on the named basis; leaves
    /// carry no exponents.
    Linear { basis: Vec<String>, alpha: Matrix },
}

/// The free unitary Hom-algebra over a set of generators: trees with the
/// rule `u·m = m·u = α(m)` and `u·u = u`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeHomAlgebra {
    pub twist: Twist,
}

impl FreeHomAlgebra {
    pub fn free() -> Self {
        FreeHomAlgebra { twist: Twist::Free }
    }

    pub fn linear(basis: Vec<String>, alpha: Matrix) -> Self {
        FreeHomAlgebra {
            twist: Twist::Linear { basis, alpha },
        }
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Poly {
        match (a, b) {
            (Monomial::Unit, Monomial::Unit) => Poly::unit(),
            (Monomial::Unit, m) | (m, Monomial::Unit) => self.alpha_monomial(m, 1),
            _ => Poly::from(Monomial::mul(a.clone(), b.clone())),
        }
    }

    pub fn product(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out += &self.mul_monomials(ma, mb).scale(&(ca * cb));
            }
        }
        out
    }

    /// Re-evaluates every product so that units inside trees are absorbed.
    pub fn normalize(&self, p: &Poly) -> Poly {
        p.flat_map(|m| self.normalize_monomial(m))
    }

    fn normalize_monomial(&self, m: &Monomial) -> Poly {
        match m {
            Monomial::Node(s, ch) if s == PRODUCT && ch.len() == 2 => self.product(
                &self.normalize_monomial(&ch[0]),
                &self.normalize_monomial(&ch[1]),
            ),
            _ => Poly::from(m.clone()),
        }
    }

    pub fn alpha_monomial(&self, m: &Monomial, k: u32) -> Poly {
        match &self.twist {
            Twist::Free => Poly::from(m.shifted(k)),
            Twist::Linear { basis, alpha } => {
                if k == 0 {
                    return Poly::from(m.clone());
                }
                let a = alpha.pow(k);
                Poly::from(m.clone()).substitute(&mut |g: &GeneratorRef| linear_image(basis, &a, g))
            }
        }
    }

    pub fn alpha_poly(&self, p: &Poly, k: u32) -> Poly {
        match &self.twist {
            Twist::Free => p.apply_alpha(k),
            Twist::Linear { basis, alpha } => {
                if k == 0 {
                    return p.clone();
                }
                let a = alpha.pow(k);
                p.substitute(&mut |g: &GeneratorRef| linear_image(basis, &a, g))
            }
        }
    }
}

fn linear_image(basis: &[String], a: &Matrix, g: &GeneratorRef) -> Poly {
    let j = basis
        .iter()
        .position(|b| *b == g.base)
        .unwrap_or_else(|| panic!("leaf `{}` is not a basis element", g.base));
    Poly::from_terms(
        basis
            .iter()
            .enumerate()
            .filter(|(i, _)| !a.get(*i, j).is_zero())
            .map(|(i, b)| (Monomial::var(b.clone()), a.get(i, j).clone())),
    )
}

impl HomArith for FreeHomAlgebra {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.product(a, b)
    }
    fn alpha(&self, a: &Poly, k: u32) -> Poly {
        self.alpha_poly(a, k)
    }
    fn add_scaled(&self, acc: &mut Poly, c: &Q, a: &Poly) {
        *acc += &a.scale(c);
    }
}
