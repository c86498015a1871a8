//! Dense rational matrices and an incremental sparse echelon form.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};
use num_traits::{One, Zero};

pub type Vector = Vec<Q>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Square or rectangular matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Q>>,
    cols: usize,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: cols,
                got: r.len(),
            });
        }
        Ok(Matrix { rows, cols })
    }

    pub fn zeros(n: usize, m: usize) -> Self {
        Matrix {
            rows: vec![zero_vector(m); n],
            cols: m,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Q::one();
        }
        m
    }

    /// Matrix whose `j`-th column is `images[j]`.
    pub fn from_columns(images: &[Vector]) -> Result<Self> {
        let n = images.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(n, images.len());
        for (j, col) in images.iter().enumerate() {
            if col.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: col.len(),
                });
            }
            for i in 0..n {
                m.rows[i][j] = col[i].clone();
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.rows[i][j] = x;
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.nrows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, a) in r.iter().enumerate() {
                if !a.is_zero() {
                    axpy(&mut out.rows[i], a, &other.rows[k]);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.nrows()), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.nrows())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| is_zero_vector(r))
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
            cols: self.cols,
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_q).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}

pub type SparseVec = BTreeMap<usize, Q>;

pub fn sparse_axpy(acc: &mut SparseVec, c: &Q, v: &SparseVec) {
    for (&k, x) in v {
        let e = acc.entry(k).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(&k);
        }
    }
}

/// Row space kept in echelon form: every row is stored under its smallest
/// column, with coefficient one there. Normal forms are unique because no
/// nonzero vector of the span avoids all pivot columns.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` to the unique representative with no pivot columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut from = 0;
        loop {
            let hit = v
                .range(from..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(&c, x)| (c, x.clone()));
            let Some((c, x)) = hit else { return v };
            sparse_axpy(&mut v, &-x, &self.rows[&c]);
            from = c + 1;
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&lead, x)) = r.iter().next() else {
            return false;
        };
        let inv = x.recip();
        for y in r.values_mut() {
            *y *= &inv;
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }
}

/// Kernel of a dense matrix as a list of basis vectors.
pub fn kernel(m: &Matrix) -> Vec<Vector> {
    // eliminate on the transpose problem: rows of m, columns = unknowns
    let n = m.ncols();
    let mut ech = Echelon::new();
    for r in m.rows() {
        let v: SparseVec = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        ech.insert(v);
    }
    // back-substitute to a fully reduced form
    let pivots: Vec<usize> = ech.pivots().collect();
    let mut full: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for &p in pivots.iter().rev() {
        let mut row = ech.rows[&p].clone();
        let later: Vec<(usize, Q)> = row
            .iter()
            .filter(|(c, _)| **c != p && full.contains_key(c))
            .map(|(&c, x)| (c, x.clone()))
            .collect();
        for (c, x) in later {
            sparse_axpy(&mut row, &-x, &full[&c]);
        }
        full.insert(p, row);
    }
    (0..n)
        .filter(|j| !full.contains_key(j))
        .map(|free| {
            let mut v = zero_vector(n);
            v[free] = Q::one();
            for (&p, row) in &full {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}
