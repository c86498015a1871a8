use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::algebra::FreeHomAlgebra;
use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly, PRODUCT};
use crate::rational::{format_q, q, Q};

/// Rational combination of pure tensors `m1 ⊗ m2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Q>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn pure(a: Monomial, b: Monomial) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(a, b, Q::one());
        t
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · (a ⊗ b)` for polynomials `a`, `b`.
    pub fn add_product(&mut self, a: &Poly, b: &Poly, c: &Q) {
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.add_term(ma.clone(), mb.clone(), c * ca * cb);
            }
        }
    }

    pub fn add(&mut self, other: &TensorElement, c: &Q) {
        for ((a, b), x) in &other.terms {
            self.add_term(a.clone(), b.clone(), c * x);
        }
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

    pub fn coeff(&self, a: &Monomial, b: &Monomial) -> Q {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Q)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn swap(&self) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn is_cocommutative(&self) -> bool {
        *self == self.swap()
    }

    /// `(a1 ⊗ a2)(b1 ⊗ b2) = a1·b1 ⊗ a2·b2`.
    pub fn mul(&self, other: &TensorElement, alg: &FreeHomAlgebra) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                let left = alg.mul_monomials(a1, b1);
                let right = alg.mul_monomials(a2, b2);
                out.add_product(&left, &right, &(ca * cb));
            }
        }
        out
    }

    /// Applies a linear map to each factor.
    pub fn map_factors(&self, mut f: impl FnMut(&Monomial) -> Poly) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_product(&f(a), &f(b), c);
        }
        out
    }

    /// Cocommutative elements written with `a ∘ b = a⊗b + b⊗a`; `None` if
    /// the element is not swap-invariant.
    pub fn to_circ_string(&self) -> Option<String> {
        if !self.is_cocommutative() {
            return None;
        }
        let mut parts: Vec<(Q, String)> = Vec::new();
        for ((a, b), c) in &self.terms {
            if a > b {
                continue;
            }
            let c = if a == b { c / q(2) } else { c.clone() };
            let fmt = |m: &Monomial| {
                if m.is_unit() {
                    "u".to_string()
                } else {
                    m.to_nested_string()
                }
            };
            parts.push((c, format!("{} ∘ {}", fmt(b), fmt(a))));
        }
        if parts.is_empty() {
            return Some("0".into());
        }
        let mut out = String::new();
        for (i, (c, s)) in parts.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !c.abs().is_one() {
                out.push_str(&format!("{} ", format_q(&c.abs())));
            }
            out.push_str(s);
        }
        Some(out)
    }

    /// `Σ c · μ(m1, m2)`.
    pub fn multiply_out(&self, alg: &FreeHomAlgebra) -> Poly {
        let mut out = Poly::zero();
        for ((a, b), c) in &self.terms {
            out += &alg.mul_monomials(a, b).scale(c);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{} ", format_q(&abs))?;
            }
            write!(f, "{} ⊗ {}", a.to_nested_string(), b.to_nested_string())?;
        }
        Ok(())
    }
}

fn product_children(m: &Monomial) -> Result<(&Monomial, &Monomial)> {
    match m {
        Monomial::Node(s, ch) if s == PRODUCT && ch.len() == 2 => Ok((&ch[0], &ch[1])),
        Monomial::Node(s, _) => Err(Error::UnknownOp(s.clone())),
        _ => unreachable!("leaves have no children"),
    }
}

/// `Δ` extended multiplicatively from `Δ(g) = u⊗g + g⊗u` and `Δ(u) = u⊗u`.
pub fn delta_in(alg: &FreeHomAlgebra, m: &Monomial) -> Result<TensorElement> {
    match m {
        Monomial::Unit => Ok(TensorElement::pure(Monomial::Unit, Monomial::Unit)),
        Monomial::Leaf(_) => {
            let mut t = TensorElement::pure(Monomial::Unit, m.clone());
            t.add_term(m.clone(), Monomial::Unit, Q::one());
            Ok(t)
        }
        Monomial::Node(..) => {
            let (a, b) = product_children(m)?;
            Ok(delta_in(alg, a)?.mul(&delta_in(alg, b)?, alg))
        }
    }
}

/// Coproduct of the free unitary Hom-algebra with a free twisting map.
pub fn delta(m: &Monomial) -> Result<TensorElement> {
    delta_in(&FreeHomAlgebra::free(), m)
}

pub fn delta_poly_in(alg: &FreeHomAlgebra, p: &Poly) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (m, c) in p.terms() {
        out.add(&delta_in(alg, m)?, c);
    }
    Ok(out)
}

pub fn delta_poly(p: &Poly) -> Result<TensorElement> {
    delta_poly_in(&FreeHomAlgebra::free(), p)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Left,
    Right,
    Mixed,
}

struct Labelled {
    label: Label,
    node: LNode,
}

enum LNode {
    Leaf { leaf: Monomial, shift: u32 },
    Pair(Box<Labelled>, Box<Labelled>),
}

fn label_tree(m: &Monomial, pos: &mut usize, left: &BTreeSet<usize>) -> Result<Labelled> {
    match m {
        Monomial::Leaf(_) => {
            let label = if left.contains(pos) {
                Label::Left
            } else {
                Label::Right
            };
            *pos += 1;
            Ok(Labelled {
                label,
                node: LNode::Leaf {
                    leaf: m.clone(),
                    shift: 0,
                },
            })
        }
        Monomial::Unit => Err(Error::Invalid("unit inside a product".into())),
        Monomial::Node(..) => {
            let (a, b) = product_children(m)?;
            let a = label_tree(a, pos, left)?;
            let b = label_tree(b, pos, left)?;
            let label = if a.label == b.label {
                a.label
            } else {
                Label::Mixed
            };
            Ok(Labelled {
                label,
                node: LNode::Pair(Box::new(a), Box::new(b)),
            })
        }
    }
}

fn opposite(l: Label) -> Label {
    match l {
        Label::Left => Label::Right,
        Label::Right => Label::Left,
        Label::Mixed => Label::Mixed,
    }
}

fn shift_labelled(t: &mut Labelled, target: Label) {
    match &mut t.node {
        LNode::Leaf { shift, .. } => {
            if t.label == target {
                *shift += 1;
            }
        }
        LNode::Pair(a, b) => {
            shift_labelled(a, target);
            shift_labelled(b, target);
        }
    }
}

fn decorate(t: &mut Labelled) {
    if let LNode::Pair(a, b) = &mut t.node {
        if t.label == Label::Mixed {
            if a.label != Label::Mixed {
                shift_labelled(b, opposite(a.label));
            }
            if b.label != Label::Mixed {
                shift_labelled(a, opposite(b.label));
            }
        }
        decorate(a);
        decorate(b);
    }
}

fn restrict(t: &Labelled, side: Label) -> Option<Monomial> {
    match &t.node {
        LNode::Leaf { leaf, shift } => (t.label == side).then(|| leaf.shifted(*shift)),
        LNode::Pair(a, b) => match (restrict(a, side), restrict(b, side)) {
            (Some(x), Some(y)) => Some(Monomial::mul(x, y)),
            (x, y) => x.or(y),
        },
    }
}

/// The summand of `Δ(m)` for the leaf partition whose left part is the set
/// of leaf positions `left` (counted left to right from 0), computed by
/// labelling the tree.
pub fn delta_summand(m: &Monomial, left: &BTreeSet<usize>) -> Result<(Monomial, Monomial)> {
    let n = m.degree();
    if let Some(bad) = left.iter().find(|&&i| i >= n) {
        return Err(Error::Invalid(format!(
            "leaf position {bad} out of range for a monomial with {n} leaves"
        )));
    }
    if m.is_unit() {
        return Ok((Monomial::Unit, Monomial::Unit));
    }
    let mut tree = label_tree(m, &mut 0, left)?;
    decorate(&mut tree);
    Ok((
        restrict(&tree, Label::Left).unwrap_or(Monomial::Unit),
        restrict(&tree, Label::Right).unwrap_or(Monomial::Unit),
    ))
}

/// Sum of [`delta_summand`] over all `2^n` leaf partitions.
pub fn delta_by_partitions(m: &Monomial) -> Result<TensorElement> {
    let n = m.degree();
    let mut out = TensorElement::zero();
    for mask in 0usize..1 << n {
        let left: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let (a, b) = delta_summand(m, &left)?;
        out.add_term(a, b, Q::one());
    }
    Ok(out)
}

/// `ε(u) = 1`, `ε` of every other monomial is 0.
pub fn counit(m: &Monomial) -> Q {
    if m.is_unit() {
        Q::one()
    } else {
        Q::zero()
    }
}

pub fn counit_poly(p: &Poly) -> Q {
    p.coeff(&Monomial::Unit)
}

pub fn is_primitive_in(alg: &FreeHomAlgebra, p: &Poly) -> Result<bool> {
    let mut d = delta_poly_in(alg, p)?;
    let minus = q(-1);
    d.add_product(&Poly::unit(), p, &minus);
    d.add_product(p, &Poly::unit(), &minus);
    Ok(d.is_zero())
}

/// `Δ(p) = u⊗p + p⊗u` in the free Hom-bialgebra.
pub fn is_primitive(p: &Poly) -> Result<bool> {
    is_primitive_in(&FreeHomAlgebra::free(), p)
}

/// Both sides of the counit law for one element.
#[derive(Clone, Debug, PartialEq)]
pub struct CounitCheck {
    pub left_factor: Poly,
    pub right_factor: Poly,
    pub left_product: Poly,
    pub right_product: Poly,
    pub alpha_image: Poly,
}

impl CounitCheck {
    /// `(ε⊗id)Δ(x) = 1⊗x`, `(id⊗ε)Δ(x) = x⊗1` and
    /// `Σ x1·u(ε(x2)) = Σ u(ε(x1))·x2 = α(x)`.
    pub fn holds(&self, x: &Poly) -> bool {
        self.left_factor == *x
            && self.right_factor == *x
            && self.left_product == self.alpha_image
            && self.right_product == self.alpha_image
    }
}

pub fn counit_check(alg: &FreeHomAlgebra, x: &Poly) -> Result<CounitCheck> {
    let d = delta_poly_in(alg, x)?;
    let mut left_factor = Poly::zero();
    let mut right_factor = Poly::zero();
    let mut left_product = Poly::zero();
    let mut right_product = Poly::zero();
    for (a, b, c) in d.terms() {
        let (ea, eb) = (counit(a), counit(b));
        if !ea.is_zero() {
            left_factor += &Poly::term(c * &ea, b.clone());
            right_product += &alg.mul_monomials(&Monomial::Unit, b).scale(&(c * &ea));
        }
        if !eb.is_zero() {
            right_factor += &Poly::term(c * &eb, a.clone());
            left_product += &alg.mul_monomials(a, &Monomial::Unit).scale(&(c * &eb));
        }
    }
    Ok(CounitCheck {
        left_factor,
        right_factor,
        left_product,
        right_product,
        alpha_image: alg.alpha_poly(x, 1),
    })
}

/// `S(u) = u`, `S(g) = -g`, `S(ab) = S(b)S(a)`.
pub fn antipode_in(alg: &FreeHomAlgebra, m: &Monomial) -> Result<Poly> {
    match m {
        Monomial::Unit => Ok(Poly::unit()),
        Monomial::Leaf(_) => Ok(Poly::term(q(-1), m.clone())),
        Monomial::Node(..) => {
            let (a, b) = product_children(m)?;
            Ok(alg.product(&antipode_in(alg, b)?, &antipode_in(alg, a)?))
        }
    }
}

pub fn antipode(m: &Monomial) -> Result<Poly> {
    antipode_in(&FreeHomAlgebra::free(), m)
}

/// `Σ u(1)·S(u(2))` in the free Hom-algebra, before any quotient.
pub fn antipode_sum(m: &Monomial) -> Result<Poly> {
    let alg = FreeHomAlgebra::free();
    let mut out = Poly::zero();
    for (a, b, c) in delta(m)?.terms() {
        out += &alg.product(&Poly::from(a.clone()), &antipode_in(&alg, b)?).scale(c);
    }
    Ok(out)
}
