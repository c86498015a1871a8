use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::FreeHomAlgebra;
use super::coproduct::{counit, delta, TensorElement};
use crate::error::{Error, Result};
use crate::expr::{Monomial, Poly};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::{q, Q};

/// All binary product trees with `n` leaves drawn from `leaves`.
pub fn binary_trees(n: usize, leaves: &[Monomial]) -> Vec<Monomial> {
    let mut memo: Vec<Vec<Monomial>> = vec![Vec::new(), leaves.to_vec()];
    for k in 2..=n {
        let mut level = Vec::new();
        for i in 1..k {
            for a in &memo[i] {
                for b in &memo[k - i] {
                    level.push(Monomial::mul(a.clone(), b.clone()));
                }
            }
        }
        memo.push(level);
    }
    if n == 0 {
        return vec![Monomial::Unit];
    }
    memo.swap_remove(n)
}

/// Left-to-right leaves as `(generator, exponent + depth)`. Hom-associativity
/// preserves this sequence, so it splits the free Hom-associative quotient
/// into finite blocks.
fn block_key(m: &Monomial) -> Vec<(String, u32)> {
    fn walk(m: &Monomial, depth: u32, out: &mut Vec<(String, u32)>) {
        match m {
            Monomial::Unit => {}
            Monomial::Leaf(g) => out.push((g.base.clone(), g.alpha_exp + depth)),
            Monomial::Node(_, ch) => ch.iter().for_each(|c| walk(c, depth + 1, out)),
        }
    }
    let mut out = Vec::new();
    walk(m, 0, &mut out);
    out
}

fn leaf_depths(m: &Monomial, depth: u32, out: &mut Vec<u32>) {
    match m {
        Monomial::Node(_, ch) => ch.iter().for_each(|c| leaf_depths(c, depth + 1, out)),
        _ => out.push(depth),
    }
}

/// Every way to rewrite one subtree `α(a)(bc)` of `m` as `(ab)α(c)`.
fn hom_assoc_partners(m: &Monomial) -> Vec<Monomial> {
    let Monomial::Node(s, ch) = m else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let (Some(a), Monomial::Node(_, bc)) = (ch[0].unshifted(1), &ch[1]) {
        out.push(Monomial::mul(
            Monomial::mul(a, bc[0].clone()),
            bc[1].shifted(1),
        ));
    }
    for i in 0..ch.len() {
        for p in hom_assoc_partners(&ch[i]) {
            let mut c = ch.clone();
            c[i] = p;
            out.push(Monomial::Node(s.clone(), c));
        }
    }
    out
}

struct Block {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: Echelon,
}

impl Block {
    fn build(key: &[(String, u32)], exp_bound: u32) -> Block {
        let shape = binary_trees(key.len(), &[Monomial::var("_")]);
        let mut monomials = Vec::new();
        'shapes: for t in shape {
            let mut depths = Vec::new();
            leaf_depths(&t, 0, &mut depths);
            let mut exps = Vec::with_capacity(depths.len());
            for ((_, w), d) in key.iter().zip(&depths) {
                match w.checked_sub(*d) {
                    Some(e) if e <= exp_bound => exps.push(e),
                    _ => continue 'shapes,
                }
            }
            let mut i = 0;
            monomials.push(t.map_leaves(&mut |_| {
                let m = Monomial::gen(key[i].0.clone(), exps[i]);
                i += 1;
                m
            }));
        }
        monomials.sort();
        let index: HashMap<Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut relations = Echelon::new();
        for (i, m) in monomials.iter().enumerate() {
            for p in hom_assoc_partners(m) {
                if let Some(&j) = index.get(&p) {
                    let mut row = SparseVec::new();
                    row.insert(i, Q::one());
                    row.insert(j, q(-1));
                    relations.insert(row);
                }
            }
        }
        Block {
            monomials,
            index,
            relations,
        }
    }

    fn vector(&self, terms: &[(&Monomial, &Q)]) -> SparseVec {
        terms
            .iter()
            .map(|(m, c)| (self.index[*m], (*c).clone()))
            .collect()
    }

    fn to_poly(&self, v: &SparseVec) -> Poly {
        Poly::from_terms(v.iter().map(|(&i, c)| (self.monomials[i].clone(), c.clone())))
    }

    fn quotient_dim(&self) -> usize {
        self.monomials.len() - self.relations.rank()
    }
}

type BlockCache = Mutex<HashMap<(Vec<(String, u32)>, u32), Arc<Block>>>;

struct Envelope {
    alg: FreeHomAlgebra,
    columns: HashMap<Monomial, usize>,
    monomials: Vec<Monomial>,
    relations: Echelon,
    generators: Vec<(String, Poly)>,
}

enum Model {
    HomAssociative { generators: Vec<String>, blocks: BlockCache },
    Envelope(Box<Envelope>),
}

/// A free algebra modulo an ideal, truncated at degree `d` and leaf
/// exponent `E`, with exact normal forms.
pub struct GradedQuotient {
    pub degree_bound: usize,
    pub exp_bound: u32,
    pub description: String,
    model: Model,
}

/// Dimension of the quotient and rank of the relations in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeInfo {
    pub dimension: usize,
    pub relation_rank: usize,
}

/// The free Hom-associative algebra on `generators`: free trees with
/// `α(x_i) = x_{i+1}` modulo `α(a)(bc) - (ab)α(c)`.
pub fn free_hom_associative(generators: &[&str], d: usize, e: u32) -> Result<GradedQuotient> {
    if d == 0 {
        return Err(Error::Bounds("degree bound must be at least 1".into()));
    }
    Ok(GradedQuotient {
        degree_bound: d,
        exp_bound: e,
        description: format!(
            "free Hom-associative algebra on {{{}}}, relations a(x)(yz) - (xy)a(z)",
            generators.join(", ")
        ),
        model: Model::HomAssociative {
            generators: generators.iter().map(|s| s.to_string()).collect(),
            blocks: Mutex::new(HashMap::new()),
        },
    })
}

impl GradedQuotient {
    pub(crate) fn envelope(
        alg: FreeHomAlgebra,
        monomials: Vec<Monomial>,
        relations: Echelon,
        generators: Vec<(String, Poly)>,
        degree_bound: usize,
        description: String,
    ) -> Self {
        let columns = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GradedQuotient {
            degree_bound,
            exp_bound: 0,
            description,
            model: Model::Envelope(Box::new(Envelope {
                alg,
                columns,
                monomials,
                relations,
                generators,
            })),
        }
    }

    pub fn algebra(&self) -> FreeHomAlgebra {
        match &self.model {
            Model::HomAssociative { .. } => FreeHomAlgebra::free(),
            Model::Envelope(env) => env.alg.clone(),
        }
    }

    fn block(&self, key: &[(String, u32)], exp_bound: u32) -> Arc<Block> {
        let Model::HomAssociative { blocks, .. } = &self.model else {
            unreachable!("blocks exist only for the Hom-associative model");
        };
        let k = (key.to_vec(), exp_bound);
        if let Some(b) = blocks.lock().expect("block cache poisoned").get(&k) {
            return b.clone();
        }
        let b = Arc::new(Block::build(key, exp_bound));
        blocks
            .lock()
            .expect("block cache poisoned")
            .entry(k)
            .or_insert(b)
            .clone()
    }

    fn check_bounds(&self, m: &Monomial) -> Result<()> {
        if m.degree() > self.degree_bound {
            return Err(Error::Bounds(format!(
                "{m} has degree {} > {}",
                m.degree(),
                self.degree_bound
            )));
        }
        if let Model::HomAssociative { generators, .. } = &self.model {
            if m.max_exp() > self.exp_bound {
                return Err(Error::Bounds(format!(
                    "{m} has an exponent above {}",
                    self.exp_bound
                )));
            }
            if let Some(g) = m.leaves().iter().find(|g| !generators.contains(&g.base)) {
                return Err(Error::UnboundVariable(g.base.clone()));
            }
        }
        Ok(())
    }

    /// Normal form: the unique representative with no relation-leading monomial.
    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        if let Model::Envelope(env) = &self.model {
            if let super::algebra::Twist::Linear { basis, .. } = &env.alg.twist {
                if let Some(v) = p.variables().into_iter().find(|v| !basis.contains(v)) {
                    return Err(Error::UnboundVariable(v));
                }
            }
        }
        let p = &self.algebra().normalize(p);
        for m in p.monomials() {
            self.check_bounds(m)?;
        }
        match &self.model {
            Model::HomAssociative { .. } => {
                let mut groups: BTreeMap<Vec<(String, u32)>, Vec<(&Monomial, &Q)>> =
                    BTreeMap::new();
                for (m, c) in p.terms() {
                    groups.entry(block_key(m)).or_default().push((m, c));
                }
                let mut out = Poly::zero();
                for (key, terms) in groups {
                    if key.is_empty() {
                        for (m, c) in terms {
                            out += &Poly::term(c.clone(), m.clone());
                        }
                        continue;
                    }
                    let b = self.block(&key, self.exp_bound);
                    out += &b.to_poly(&b.relations.reduce(b.vector(&terms)));
                }
                Ok(out)
            }
            Model::Envelope(env) => {
                let v: SparseVec = p
                    .terms()
                    .map(|(m, c)| {
                        env.columns
                            .get(m)
                            .map(|&i| (i, c.clone()))
                            .ok_or_else(|| Error::UnboundVariable(m.to_string()))
                    })
                    .collect::<Result<_>>()?;
                let r = env.relations.reduce(v);
                Ok(Poly::from_terms(
                    r.into_iter().map(|(i, c)| (env.monomials[i].clone(), c)),
                ))
            }
        }
    }

    pub fn is_zero_in_quotient(&self, p: &Poly) -> Result<bool> {
        Ok(self.nf(p)?.is_zero())
    }

    /// The coproduct pushed to the quotient, `(nf ⊗ nf) ∘ Δ`.
    pub fn induced_delta(&self, p: &Poly) -> Result<TensorElement> {
        let d = super::coproduct::delta_poly_in(&self.algebra(), p)?;
        let mut out = TensorElement::zero();
        for (a, b, c) in d.terms() {
            out.add_product(
                &self.nf(&Poly::from(a.clone()))?,
                &self.nf(&Poly::from(b.clone()))?,
                c,
            );
        }
        Ok(out)
    }

    /// Generator relations of the ideal, when the model records them.
    pub fn generator_relations(&self) -> &[(String, Poly)] {
        match &self.model {
            Model::HomAssociative { .. } => &[],
            Model::Envelope(env) => &env.generators,
        }
    }

    /// Per-degree dimensions of the quotient (for filtered models, of the
    /// associated graded) and relation ranks. The Hom-associative model
    /// enumerates every bounded monomial, so keep the bounds small there.
    pub fn dimensions(&self) -> BTreeMap<usize, DegreeInfo> {
        let mut out = BTreeMap::new();
        match &self.model {
            Model::HomAssociative { generators, .. } => {
                for n in 1..=self.degree_bound {
                    let keys = self.block_keys(generators, n, self.exp_bound);
                    let mut info = DegreeInfo {
                        dimension: 0,
                        relation_rank: 0,
                    };
                    for key in keys {
                        let b = self.block(&key, self.exp_bound);
                        info.dimension += b.quotient_dim();
                        info.relation_rank += b.relations.rank();
                    }
                    out.insert(n, info);
                }
            }
            Model::Envelope(env) => {
                for (i, m) in env.monomials.iter().enumerate() {
                    let info = out.entry(m.degree()).or_insert(DegreeInfo {
                        dimension: 0,
                        relation_rank: 0,
                    });
                    if env.relations.is_pivot(i) {
                        info.relation_rank += 1;
                    } else {
                        info.dimension += 1;
                    }
                }
            }
        }
        out
    }

    fn block_keys(&self, generators: &[String], n: usize, e: u32) -> Vec<Vec<(String, u32)>> {
        let leaves: Vec<Monomial> = generators
            .iter()
            .flat_map(|g| (0..=e).map(move |k| Monomial::gen(g.clone(), k)))
            .collect();
        let mut keys: Vec<_> = binary_trees(n, &leaves).iter().map(block_key).collect();
        keys.sort();
        keys.dedup();
        keys
    }

    /// Checks, block by block up to `max_degree`, that `α(p) ∈ I ⇒ p ∈ I`
    /// for elements whose shift stays within the exponent bound.
    pub fn alpha_injectivity(&self, max_degree: usize) -> Result<InjectivityReport> {
        let Model::HomAssociative { generators, .. } = &self.model else {
            return Err(Error::Invalid(
                "injectivity probe needs the free Hom-associative model".into(),
            ));
        };
        if self.exp_bound == 0 {
            return Err(Error::Bounds("exponent bound must be at least 1".into()));
        }
        let mut report = InjectivityReport {
            degrees: BTreeMap::new(),
            failures: Vec::new(),
        };
        for n in 1..=max_degree.min(self.degree_bound) {
            let mut blocks = 0;
            for key in self.block_keys(generators, n, self.exp_bound - 1) {
                let src = self.block(&key, self.exp_bound - 1);
                let shifted: Vec<(String, u32)> =
                    key.iter().map(|(g, w)| (g.clone(), w + 1)).collect();
                let dst = self.block(&shifted, self.exp_bound);
                let mut images = Echelon::new();
                let mut rank = 0;
                for (i, m) in src.monomials.iter().enumerate() {
                    if src.relations.is_pivot(i) {
                        continue;
                    }
                    let img = m.shifted(1);
                    let v = dst.relations.reduce(dst.vector(&[(&img, &q(1))]));
                    rank += 1;
                    if !images.insert(v) {
                        report.failures.push(m.to_string());
                    }
                }
                debug_assert_eq!(rank, src.quotient_dim());
                blocks += 1;
            }
            report.degrees.insert(n, blocks);
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    /// Blocks examined per degree.
    pub degrees: BTreeMap<usize, usize>,
    /// Normal-form monomials whose images became dependent.
    pub failures: Vec<String>,
}

impl InjectivityReport {
    pub fn injective(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AntipodeStatus {
    Holds,
    InconclusiveWithinBounds,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AntipodeReport {
    pub monomial: String,
    pub status: AntipodeStatus,
    pub degree_bound: usize,
    pub exp_bound: u32,
    /// Number of summands of the coproduct.
    pub summands: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl AntipodeReport {
    pub fn holds(&self) -> bool {
        self.status == AntipodeStatus::Holds
    }
}

/// Default bounds for checking the antipode on `u`: `d = |u|`, `E = 2|u|`.
pub fn default_antipode_bounds(u: &Monomial) -> (usize, u32) {
    let n = u.degree().max(1);
    (n, 2 * n as u32)
}

/// Reduces `α(Σ u(1)·S(u(2))) - α(u(ε(u)))` in the bounded free
/// Hom-associative quotient.
pub fn check_antipode(u: &Monomial, quotient: &GradedQuotient) -> Result<AntipodeReport> {
    let alg = FreeHomAlgebra::free();
    let d = delta(u)?;
    let mut sum = Poly::zero();
    for (a, b, c) in d.terms() {
        let s = super::coproduct::antipode_in(&alg, b)?;
        sum += &alg.product(&Poly::from(a.clone()), &s).scale(c);
    }
    let mut target = alg.alpha_poly(&sum, 1);
    let eps = counit(u);
    if !eps.is_zero() {
        target -= &Poly::term(eps, Monomial::Unit);
    }
    let mut report = AntipodeReport {
        monomial: u.to_string(),
        status: AntipodeStatus::Holds,
        degree_bound: quotient.degree_bound,
        exp_bound: quotient.exp_bound,
        summands: d.len(),
        normal_form: None,
        reason: None,
    };
    match quotient.nf(&target) {
        Ok(nf) if nf.is_zero() => {}
        Ok(nf) => {
            report.status = AntipodeStatus::InconclusiveWithinBounds;
            report.normal_form = Some(nf.to_string());
        }
        Err(Error::Bounds(msg)) => {
            report.status = AntipodeStatus::InconclusiveWithinBounds;
            report.reason = Some(msg);
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// [`check_antipode`] at the default bounds, over the generators of `u`.
pub fn check_antipode_default(u: &Monomial) -> Result<AntipodeReport> {
    let (d, e) = default_antipode_bounds(u);
    let mut gens: Vec<String> = u.leaves().iter().map(|g| g.base.clone()).collect();
    gens.sort();
    gens.dedup();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    check_antipode(u, &free_hom_associative(&refs, d, e)?)
}
