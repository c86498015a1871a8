use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::check::{check_identity, check_poly, CheckReport};
use super::multilinear::MultilinearMap;
use super::spec::{resolve_op, AlgebraSpec, Evaluator};
use crate::error::{Error, Result};
use crate::expr::unshuffle_splits;
use crate::homify::{catalog, hsab4, phi_symbol, sab_symbol, sabinin_axiom_instances};
use crate::linalg::{axpy, zero_vector, Matrix, Vector};
use crate::rational::{frac, q, Q};

/// Sabinin brackets `<x1…xn; a, b>` for `n ≤ cutoff` and any `Φ(n,m)` tables.
#[derive(Clone, Debug, PartialEq)]
pub struct OpFamily {
    pub dim: usize,
    pub cutoff: usize,
    pub brackets: BTreeMap<usize, MultilinearMap>,
    pub phi: BTreeMap<(usize, usize), MultilinearMap>,
}

impl OpFamily {
    pub fn zero(dim: usize, cutoff: usize) -> Self {
        OpFamily {
            dim,
            cutoff,
            brackets: (0..=cutoff).map(|n| (n, MultilinearMap::zero(n + 2, dim))).collect(),
            phi: BTreeMap::new(),
        }
    }

    pub fn bracket(&self, n: usize) -> Result<&MultilinearMap> {
        self.brackets.get(&n).ok_or(Error::Cutoff {
            need: n,
            have: self.cutoff,
        })
    }

    /// `<x; a, b>` on vectors.
    pub fn eval_bracket(&self, x: &[&[Q]], a: &[Q], b: &[Q]) -> Result<Vector> {
        let mut args: Vec<&[Q]> = x.to_vec();
        args.push(a);
        args.push(b);
        Ok(self.bracket(x.len())?.eval(&args))
    }

    /// `<x;a,b> ← β^{n+1} ∘ <x;a,b>` and `Φ(n,m) ← β^{n+m-1} ∘ Φ(n,m)`.
    pub fn twisted(&self, beta: &Matrix) -> OpFamily {
        OpFamily {
            dim: self.dim,
            cutoff: self.cutoff,
            brackets: self
                .brackets
                .iter()
                .map(|(&n, m)| (n, m.post_compose(&beta.pow(n as u32 + 1))))
                .collect(),
            phi: self
                .phi
                .iter()
                .map(|(&(n, k), m)| ((n, k), m.post_compose(&beta.pow((n + k - 1) as u32))))
                .collect(),
        }
    }

    fn evaluator<'a>(&'a self, alpha: &'a Matrix) -> Evaluator<'a> {
        let mut ev = Evaluator::new(self.dim, alpha);
        for (&n, m) in &self.brackets {
            ev.bind(&sab_symbol(n), m);
        }
        for (&(n, k), m) in &self.phi {
            ev.bind(&phi_symbol(n, k), m);
        }
        ev
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SabininClass {
    Lie,
    Malcev,
    Bol,
    Ly,
}

impl SabininClass {
    fn identities(self) -> &'static str {
        match self {
            SabininClass::Lie => "hom_lie",
            SabininClass::Malcev => "hom_malcev",
            SabininClass::Bol => "hom_bol",
            SabininClass::Ly => "hom_ly",
        }
    }
}

impl FromStr for SabininClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "lie" | "hom_lie" => Ok(SabininClass::Lie),
            "malcev" | "hom_malcev" => Ok(SabininClass::Malcev),
            "bol" | "hom_bol" => Ok(SabininClass::Bol),
            "ly" | "hom_ly" | "lie_yamaguti" => Ok(SabininClass::Ly),
            _ => Err(Error::UnknownCatalog(s.to_string())),
        }
    }
}

impl fmt::Display for SabininClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SabininClass::Lie => "lie",
            SabininClass::Malcev => "malcev",
            SabininClass::Bol => "bol",
            SabininClass::Ly => "ly",
        };
        f.write_str(s)
    }
}

struct Ctx<'a> {
    spec: &'a AlgebraSpec,
    bracket: &'a MultilinearMap,
    ternary: Option<&'a MultilinearMap>,
    /// `alpha_e[k][i] = α^k(e_i)`.
    alpha_e: Vec<Vec<Vector>>,
}

impl Ctx<'_> {
    fn ae(&self, k: usize, i: usize) -> &Vector {
        &self.alpha_e[k][i]
    }

    fn br(&self, a: &[Q], b: &[Q]) -> Vector {
        self.bracket.eval(&[a, b])
    }

    fn jacobiator(&self, a: usize, b: usize, c: usize) -> Vector {
        let mut v = zero_vector(self.spec.dim());
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            axpy(&mut v, &q(1), &self.br(&self.br(self.ae(0, x), self.ae(0, y)), self.ae(1, z)));
        }
        v
    }
}

/// Builds the Sabinin brackets of a Hom-Lie, Hom-Malcev, Hom-Bol or
/// Hom-Lie-Yamaguti algebra up to prefix length `cutoff`; `Φ` is zero.
pub fn sabinin_from(spec: &AlgebraSpec, class: SabininClass, cutoff: usize) -> Result<OpFamily> {
    let ids = catalog(class.identities())?;
    let report = check_identity(spec, &ids, 1)?;
    if let Some(w) = report.witnesses.first() {
        return Err(Error::ClassIdentity {
            class: class.to_string(),
            detail: format!("{} on {:?}", w.label, w.assignment),
        });
    }
    let dim = spec.dim();
    let bracket = spec.op(&resolve_op(spec, "B", 2)?)?;
    let ternary = match class {
        SabininClass::Bol | SabininClass::Ly => Some(spec.op(&resolve_op(spec, "T", 3)?)?),
        _ => None,
    };
    let mut alpha_e = vec![(0..dim).map(|i| spec.basis_vector(i)).collect::<Vec<_>>()];
    for k in 1..=cutoff + 1 {
        let next = alpha_e[k - 1].iter().map(|v| spec.alpha.apply(v)).collect();
        alpha_e.push(next);
    }
    let ctx = Ctx {
        spec,
        bracket,
        ternary,
        alpha_e,
    };
    let mut fam = OpFamily {
        dim,
        cutoff,
        brackets: BTreeMap::new(),
        phi: BTreeMap::new(),
    };
    fam.brackets.insert(0, bracket.scale(&q(-1)));
    for n in 1..=cutoff {
        let table = MultilinearMap::from_fn(n + 2, dim, |t| {
            let (word, a, b) = (&t[..n], t[n], t[n + 1]);
            match (class, n) {
                (SabininClass::Lie, _) => zero_vector(dim),
                (SabininClass::Malcev, 1) => {
                    let mut v = ctx.jacobiator(a, b, word[0]);
                    v.iter_mut().for_each(|x| *x *= frac(-1, 3));
                    v
                }
                (SabininClass::Bol, 1) => {
                    let mut v = ctx.ternary.unwrap().get(&[a, b, word[0]]).clone();
                    let ab = ctx.br(ctx.ae(0, a), ctx.ae(0, b));
                    axpy(&mut v, &q(-1), &ctx.br(&ab, ctx.ae(1, word[0])));
                    v
                }
                (SabininClass::Ly, 1) => ctx.ternary.unwrap().get(&[a, b, word[0]]).clone(),
                (SabininClass::Malcev, _) => {
                    coproduct_sum(&fam, &ctx, &word[..n - 1], word[n - 1], a, b)
                }
                (SabininClass::Bol, _) => {
                    let mut v = coproduct_sum(&fam, &ctx, &word[1..], word[0], a, b);
                    v.iter_mut().for_each(|x| *x = -x.clone());
                    v
                }
                (SabininClass::Ly, _) => {
                    let x = &word[..n - 1];
                    let c = word[n - 1];
                    let mut v = coproduct_sum(&fam, &ctx, x, c, a, b);
                    let ax: Vec<&[Q]> = x.iter().map(|&i| ctx.ae(1, i).as_slice()).collect();
                    let ab = ctx.br(ctx.ae(0, a), ctx.ae(0, b));
                    let lead = fam.eval_bracket(&ax, ctx.ae(1, c), &ab).unwrap();
                    axpy(&mut v, &q(1), &lead);
                    v
                }
            }
        });
        fam.brackets.insert(n, table);
    }
    Ok(fam)
}

// Σ over unshuffles (x1, x2) of x of <α^k(x1); α^k(c), <x2; a, b>>, k = |x2| + 1
fn coproduct_sum(fam: &OpFamily, ctx: &Ctx<'_>, x: &[usize], c: usize, a: usize, b: usize) -> Vector {
    let mut v = zero_vector(ctx.spec.dim());
    for (x1, x2) in unshuffle_splits(x) {
        let k = x2.len() + 1;
        let inner = fam.bracket(x2.len()).unwrap().get(&[x2.as_slice(), &[a, b]].concat()).clone();
        let outer_prefix: Vec<&[Q]> = x1.iter().map(|&i| ctx.ae(k, i).as_slice()).collect();
        let term = fam.eval_bracket(&outer_prefix, ctx.ae(k, c), &inner).unwrap();
        axpy(&mut v, &q(1), &term);
    }
    v
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SabininReport {
    /// `(axiom instance label, basis tuples evaluated)`.
    pub checked: Vec<(String, usize)>,
    /// Instances needing brackets beyond the family's cutoff.
    pub skipped: Vec<String>,
    pub report: CheckReport,
}

impl SabininReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Evaluates every axiom instance with prefix length `n ≤ cutoff` whose
/// operations the family provides, over all basis tuples.
pub fn check_sabinin_axioms(
    fam: &OpFamily,
    spec: &AlgebraSpec,
    cutoff: usize,
    jobs: usize,
) -> Result<SabininReport> {
    if fam.dim != spec.dim() {
        return Err(Error::Dimension {
            expected: spec.dim(),
            got: fam.dim,
        });
    }
    let ev = fam.evaluator(&spec.alpha);
    let mut out = SabininReport::default();
    for n in 0..=cutoff {
        let inst = sabinin_axiom_instances(n, 0);
        let mut labelled: Vec<(String, crate::expr::Poly)> = Vec::new();
        labelled.extend(inst.hsab1.into_iter().map(|p| (format!("Hsab1(n={n})"), p)));
        for (r, p) in inst.hsab2.into_iter().enumerate() {
            labelled.push((format!("Hsab2(|x|={},|y|={r})", n - r), p));
        }
        labelled.extend(inst.hsab3.into_iter().map(|p| (format!("Hsab3(n={n})"), p)));
        for &(pn, m) in fam.phi.keys().filter(|(pn, _)| *pn == n) {
            for (i, p) in hsab4(pn, m).into_iter().enumerate() {
                labelled.push((format!("Hsab4(n={pn},m={m})#{}", i + 1), p));
            }
        }
        for (label, p) in labelled {
            let mut bound = true;
            for mono in p.monomials() {
                mono.for_each_node(&mut |s, _| bound &= ev.is_bound(s));
            }
            if !bound {
                out.skipped.push(label);
                continue;
            }
            let r = check_poly(&ev, &spec.basis, &p, &label, jobs)?;
            out.checked.push((label, r.tuples));
            out.report.merge(r);
        }
    }
    Ok(out)
}
