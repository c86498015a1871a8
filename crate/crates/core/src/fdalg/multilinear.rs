use num_traits::Zero;

use crate::linalg::{axpy, is_zero_vector, zero_vector, Matrix, Vector};
use crate::rational::Q;

/// A multilinear map `V^{⊗arity} → V` stored as a dense table of images of
/// basis tuples (first argument most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearMap {
    arity: usize,
    dim: usize,
    table: Vec<Vector>,
}

impl MultilinearMap {
    pub fn zero(arity: usize, dim: usize) -> Self {
        MultilinearMap {
            arity,
            dim,
            table: vec![zero_vector(dim); dim.pow(arity as u32)],
        }
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(arity: usize, dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut m = MultilinearMap::zero(arity, dim);
        for (idx, tuple) in tuples(dim, arity).enumerate() {
            m.table[idx] = f(&tuple);
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, tuple: &[usize]) -> &Vector {
        &self.table[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: Vector) {
        let i = self.index(tuple);
        self.table[i] = v;
    }

    pub fn add_entry(&mut self, tuple: &[usize], k: usize, c: &Q) {
        let i = self.index(tuple);
        self.table[i][k] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// Nonzero structure constants as `(tuple, output index, coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize, &Q)> + '_ {
        tuples(self.dim, self.arity)
            .zip(&self.table)
            .flat_map(|(t, v)| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (t.clone(), k, c))
            })
    }

    pub fn eval(&self, args: &[&[Q]]) -> Vector {
        assert_eq!(args.len(), self.arity, "arity mismatch");
        let supports: Vec<Vec<(usize, &Q)>> = args
            .iter()
            .map(|a| a.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        let mut out = zero_vector(self.dim);
        self.accumulate(&supports, 0, 0, None, &mut out);
        out
    }

    fn accumulate(
        &self,
        supports: &[Vec<(usize, &Q)>],
        depth: usize,
        idx: usize,
        coeff: Option<Q>,
        out: &mut Vector,
    ) {
        if depth == supports.len() {
            let c = coeff.unwrap_or_else(|| Q::from_integer(1.into()));
            axpy(out, &c, &self.table[idx]);
            return;
        }
        for &(i, c) in &supports[depth] {
            let next = match &coeff {
                None => c.clone(),
                Some(p) => p * c,
            };
            self.accumulate(supports, depth + 1, idx * self.dim + i, Some(next), out);
        }
    }

    /// `β ∘ self`.
    pub fn post_compose(&self, beta: &Matrix) -> MultilinearMap {
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            table: self.table.iter().map(|v| beta.apply(v)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> MultilinearMap {
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|v| v.iter().map(|x| x * c).collect())
                .collect(),
        }
    }
}

/// All `dim^arity` index tuples in lexicographic order.
pub fn tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(arity as u32);
    (0..total).map(move |idx| tuple_at(dim, arity, idx))
}

/// The `idx`-th tuple of [`tuples`].
pub fn tuple_at(dim: usize, arity: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = idx % dim;
        idx /= dim;
    }
    t
}
