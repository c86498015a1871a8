use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Symbol of the binary product; printed infix as `(a*b)`.
pub const PRODUCT: &str = "*";

/// A generator together with the number of twisting-map applications.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorRef {
    pub base: String,
    pub alpha_exp: u32,
}

impl GeneratorRef {
    pub fn new(base: impl Into<String>, alpha_exp: u32) -> Self {
        GeneratorRef {
            base: base.into(),
            alpha_exp,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    /// The unit `u(1)`; fixed by the twisting map.
    Unit,
    Leaf(GeneratorRef),
    Node(String, Vec<Monomial>),
}

impl Monomial {
    pub fn var(base: impl Into<String>) -> Self {
        Monomial::Leaf(GeneratorRef::new(base, 0))
    }

    pub fn gen(base: impl Into<String>, alpha_exp: u32) -> Self {
        Monomial::Leaf(GeneratorRef::new(base, alpha_exp))
    }

    pub fn node(symbol: impl Into<String>, children: Vec<Monomial>) -> Self {
        Monomial::Node(symbol.into(), children)
    }

    /// Binary product node `(a*b)`.
    pub fn mul(a: Monomial, b: Monomial) -> Self {
        Monomial::Node(PRODUCT.into(), vec![a, b])
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Monomial::Unit)
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            Monomial::Unit => 0,
            Monomial::Leaf(_) => 1,
            Monomial::Node(_, ch) => ch.iter().map(Monomial::degree).sum(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            Monomial::Node(_, ch) => 1 + ch.iter().map(Monomial::internal_nodes).sum::<usize>(),
            _ => 0,
        }
    }

    /// Generator leaves, left to right.
    pub fn leaves(&self) -> Vec<&GeneratorRef> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a GeneratorRef>) {
        match self {
            Monomial::Unit => {}
            Monomial::Leaf(g) => out.push(g),
            Monomial::Node(_, ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// Applies the twisting map `k` times: every leaf exponent grows by `k`.
    pub fn shifted(&self, k: u32) -> Monomial {
        if k == 0 {
            return self.clone();
        }
        match self {
            Monomial::Unit => Monomial::Unit,
            Monomial::Leaf(g) => Monomial::gen(g.base.clone(), g.alpha_exp + k),
            Monomial::Node(s, ch) => {
                Monomial::Node(s.clone(), ch.iter().map(|c| c.shifted(k)).collect())
            }
        }
    }

    /// Inverse of [`Monomial::shifted`] when every leaf exponent is at least `k`.
    pub fn unshifted(&self, k: u32) -> Option<Monomial> {
        match self {
            Monomial::Unit => Some(Monomial::Unit),
            Monomial::Leaf(g) => g
                .alpha_exp
                .checked_sub(k)
                .map(|e| Monomial::gen(g.base.clone(), e)),
            Monomial::Node(s, ch) => ch
                .iter()
                .map(|c| c.unshifted(k))
                .collect::<Option<Vec<_>>>()
                .map(|ch| Monomial::Node(s.clone(), ch)),
        }
    }

    pub fn min_exp(&self) -> Option<u32> {
        self.leaves().iter().map(|g| g.alpha_exp).min()
    }

    pub fn max_exp(&self) -> u32 {
        self.leaves().iter().map(|g| g.alpha_exp).max().unwrap_or(0)
    }

    pub fn is_decorated(&self) -> bool {
        self.leaves().iter().any(|g| g.alpha_exp > 0)
    }

    pub fn strip_exponents(&self) -> Monomial {
        self.map_leaves(&mut |g| Monomial::var(g.base.clone()))
    }

    /// Rebuilds the tree with every leaf replaced by `f(leaf)`.
    pub fn map_leaves(&self, f: &mut impl FnMut(&GeneratorRef) -> Monomial) -> Monomial {
        match self {
            Monomial::Unit => Monomial::Unit,
            Monomial::Leaf(g) => f(g),
            Monomial::Node(s, ch) => {
                Monomial::Node(s.clone(), ch.iter().map(|c| c.map_leaves(f)).collect())
            }
        }
    }

    /// Visits every internal node as `(symbol, arity)`, preorder.
    pub fn for_each_node(&self, f: &mut impl FnMut(&str, usize)) {
        if let Monomial::Node(s, ch) = self {
            f(s, ch.len());
            ch.iter().for_each(|c| c.for_each_node(f));
        }
    }

    pub fn children(&self) -> &[Monomial] {
        match self {
            Monomial::Node(_, ch) => ch,
            _ => &[],
        }
    }

    fn shape(&self, out: &mut Vec<usize>) {
        match self {
            Monomial::Leaf(_) => out.push(0),
            Monomial::Unit => out.push(1),
            Monomial::Node(_, ch) => {
                out.push(ch.len());
                ch.iter().for_each(|c| c.shape(out));
            }
        }
    }

    fn symbols<'a>(&'a self, out: &mut Vec<&'a str>) {
        if let Monomial::Node(s, ch) = self {
            out.push(s);
            ch.iter().for_each(|c| c.symbols(out));
        }
    }

    fn fmt_nested(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Node(s, ch) if s == PRODUCT && ch.len() == 2 => {
                write!(f, "(")?;
                self.fmt_top(f)?;
                write!(f, ")")
            }
            _ => self.fmt_top(f),
        }
    }

    fn fmt_top(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Unit => write!(f, "1"),
            Monomial::Leaf(g) if g.alpha_exp == 0 => write!(f, "{}", g.base),
            Monomial::Leaf(g) => write!(f, "A^{}({})", g.alpha_exp, g.base),
            Monomial::Node(s, ch) if s == PRODUCT && ch.len() == 2 => {
                ch[0].fmt_nested(f)?;
                write!(f, "*")?;
                ch[1].fmt_nested(f)
            }
            Monomial::Node(s, ch) => {
                write!(f, "{s}(")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    c.fmt_nested(f)?;
                }
                write!(f, ")")
            }
        }
    }

    /// Parenthesised form, safe to embed after a coefficient.
    pub fn to_nested_string(&self) -> String {
        struct Nested<'a>(&'a Monomial);
        impl fmt::Display for Nested<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_nested(f)
            }
        }
        Nested(self).to_string()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_top(f)
    }
}

/// Canonical order: total degree, then tree shape (preorder arity
/// sequence, left-combed trees first), then leaves by (base, exponent),
/// then operation symbols.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                self.shape(&mut a);
                other.shape(&mut b);
                b.cmp(&a)
            })
            .then_with(|| self.leaves().cmp(&other.leaves()))
            .then_with(|| {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                self.symbols(&mut a);
                other.symbols(&mut b);
                a.cmp(&b)
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
