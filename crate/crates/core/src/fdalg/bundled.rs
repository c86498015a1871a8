//! Small algebras used as examples and regression fixtures.

use std::path::{Path, PathBuf};

use super::multilinear::MultilinearMap;
use super::spec::AlgebraSpec;
use super::twist::{akivis_of, yau_twist};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::q;

pub const CATALOG_ENV: &str = "HOMFORGE_CATALOG";

fn matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

/// `sl2` over Q with `[h,x] = 2x`, `[h,y] = -2y`, `[x,y] = h`.
pub fn sl2() -> AlgebraSpec {
    let mut s = AlgebraSpec::new("sl2", ["h", "x", "y"]);
    s.set("mu", &["h", "x"], &[("x", q(2))]).unwrap();
    s.set("mu", &["x", "h"], &[("x", q(-2))]).unwrap();
    s.set("mu", &["h", "y"], &[("y", q(-2))]).unwrap();
    s.set("mu", &["y", "h"], &[("y", q(2))]).unwrap();
    s.set("mu", &["x", "y"], &[("h", q(1))]).unwrap();
    s.set("mu", &["y", "x"], &[("h", q(-1))]).unwrap();
    s
}

/// `h ↦ -h`, `x ↦ y`, `y ↦ x`.
pub fn sl2_swap() -> Matrix {
    matrix(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
}

/// The 3-dimensional Heisenberg Lie algebra, `[x,y] = z`.
pub fn heisenberg() -> AlgebraSpec {
    let mut s = AlgebraSpec::new("heisenberg", ["x", "y", "z"]);
    s.set("mu", &["x", "y"], &[("z", q(1))]).unwrap();
    s.set("mu", &["y", "x"], &[("z", q(-1))]).unwrap();
    s
}

/// `x ↦ 2x`, `y ↦ y`, `z ↦ 2z`.
pub fn heisenberg_scale() -> Matrix {
    matrix(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 2]])
}

pub fn abelian() -> AlgebraSpec {
    AlgebraSpec::new("abelian", ["e1", "e2"]).with_op("mu", MultilinearMap::zero(2, 2))
}

/// Two-dimensional Akivis algebra with zero bracket and
/// `(x,x,y) = -2x - 4y = -(y,x,x) = 2(y,y,x) = -2(x,y,y)`.
pub fn c_example() -> AlgebraSpec {
    let mut s = AlgebraSpec::new("c_example", ["x", "y"]).with_op("B", MultilinearMap::zero(2, 2));
    let v = |a: i64, b: i64| [("x", q(a)), ("y", q(b))];
    s.set("T", &["x", "x", "y"], &v(-2, -4)).unwrap();
    s.set("T", &["y", "x", "x"], &v(2, 4)).unwrap();
    s.set("T", &["y", "y", "x"], &v(-1, -2)).unwrap();
    s.set("T", &["x", "y", "y"], &v(1, 2)).unwrap();
    s
}

/// `x ↦ -2x`, `y ↦ x`.
pub fn c_example_morphism() -> Matrix {
    matrix(&[&[-2, 1], &[0, 0]])
}

// imaginary units e1..e7 with e_i e_{i+1} = e_{i+3} (indices mod 7)
fn fano_lines() -> Vec<[usize; 3]> {
    (0..7).map(|i| [i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]).collect()
}

/// The real octonions with basis `1, e1, …, e7`.
pub fn octonion() -> AlgebraSpec {
    let names: Vec<String> = std::iter::once("1".to_string())
        .chain((1..=7).map(|i| format!("e{i}")))
        .collect();
    let mut mu = MultilinearMap::zero(2, 8);
    for i in 0..8 {
        mu.add_entry(&[0, i], i, &q(1));
        if i > 0 {
            mu.add_entry(&[i, 0], i, &q(1));
            mu.add_entry(&[i, i], 0, &q(-1));
        }
    }
    for [a, b, c] in fano_lines() {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            mu.add_entry(&[x, y], z, &q(1));
            mu.add_entry(&[y, x], z, &q(-1));
        }
    }
    let mut s = AlgebraSpec::new("octonion", names).with_op("mu", mu);
    s.unit = Some(s.basis_vector(0));
    s
}

/// `1 ↦ 1`, `e_i ↦ e_{i+1}`.
pub fn octonion_cycle() -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    m.set(0, 0, q(1));
    for i in 1..=7 {
        m.set(i % 7 + 1, i, q(1));
    }
    m
}

/// `M2(Q)` with basis of matrix units.
pub fn m2() -> AlgebraSpec {
    let names = ["e11", "e12", "e21", "e22"];
    let mut mu = MultilinearMap::zero(2, 4);
    for (a, (i, j)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        for (b, (k, l)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            if j == k {
                mu.add_entry(&[a, b], 2 * i + l, &q(1));
            }
        }
    }
    let mut s = AlgebraSpec::new("m2", names).with_op("mu", mu);
    s.unit = Some(vec![q(1), q(0), q(0), q(1)]);
    s
}

/// Conjugation `X ↦ P X P⁻¹` with `P = [[1,1],[0,1]]`.
pub fn m2_conjugation() -> Matrix {
    // columns are the images of e11, e12, e21, e22
    let images: Vec<Vector> = [[1, -1, 0, 0], [0, 1, 0, 0], [1, -1, 1, -1], [0, 1, 0, 1]]
        .iter()
        .map(|c| c.iter().map(|&x| q(x)).collect())
        .collect();
    Matrix::from_columns(&images).unwrap()
}

pub const BUILTIN_ALGEBRAS: &[&str] = &[
    "sl2",
    "sl2_hom_lie",
    "sl2_akivis",
    "heisenberg",
    "abelian",
    "c_example",
    "c_example_twisted",
    "octonion",
    "hom_octonion",
    "m2",
    "hom_m2",
];

pub const BUILTIN_MORPHISMS: &[&str] = &["sl2_swap", "heisenberg_scale", "c_example_morphism", "octonion_cycle", "m2_conjugation"];

pub fn builtin_algebra(name: &str) -> Result<AlgebraSpec> {
    let mut spec = match name.replace('-', "_").as_str() {
        "sl2" => sl2(),
        "sl2_hom_lie" => yau_twist(&sl2(), &sl2_swap())?,
        "sl2_akivis" => akivis_of(&sl2().with_alpha(sl2_swap()))?,
        "heisenberg" => heisenberg(),
        "abelian" => abelian(),
        "c_example" => c_example(),
        "c_example_twisted" => yau_twist(&c_example(), &c_example_morphism())?,
        "octonion" => octonion(),
        "hom_octonion" => yau_twist(&octonion(), &octonion_cycle())?,
        "m2" => m2(),
        "hom_m2" => yau_twist(&m2(), &m2_conjugation())?,
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    spec.name = name.to_string();
    Ok(spec)
}

pub fn builtin_morphism(name: &str) -> Result<Matrix> {
    match name.replace('-', "_").as_str() {
        "sl2_swap" => Ok(sl2_swap()),
        "heisenberg_scale" => Ok(heisenberg_scale()),
        "c_example_morphism" => Ok(c_example_morphism()),
        "octonion_cycle" => Ok(octonion_cycle()),
        "m2_conjugation" => Ok(m2_conjugation()),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn catalog_file(name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CATALOG_ENV)?;
    let p = Path::new(&dir).join(format!("{name}.json"));
    p.is_file().then_some(p)
}

/// Resolves an algebra argument: an existing file path, then
/// `$HOMFORGE_CATALOG/NAME.json`, then a builtin name.
pub fn load_algebra(arg: &str) -> Result<AlgebraSpec> {
    let path = Path::new(arg);
    if path.is_file() {
        return AlgebraSpec::from_json(&std::fs::read_to_string(path)?);
    }
    if let Some(p) = catalog_file(arg) {
        return AlgebraSpec::from_json(&std::fs::read_to_string(p)?);
    }
    builtin_algebra(arg)
}

/// Resolves a twisting-map argument: a JSON matrix file or a builtin name.
pub fn load_morphism(arg: &str) -> Result<Matrix> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?);
    }
    builtin_morphism(arg)
}

/// `(class, algebra of that class, endomorphism)` triples for twisting tests.
pub fn twisting_pairs() -> Vec<(&'static str, AlgebraSpec, Matrix)> {
    let id3 = Matrix::identity(3);
    vec![
        ("lie", sl2(), sl2_swap()),
        ("lie", sl2(), id3.clone()),
        ("lie", heisenberg(), heisenberg_scale()),
        ("associative", m2(), m2_conjugation()),
        ("associative", abelian(), Matrix::from_rows(vec![vec![q(3), q(1)], vec![q(0), q(2)]]).unwrap()),
        ("akivis", akivis_of(&sl2()).unwrap(), sl2_swap()),
        ("akivis", c_example(), c_example_morphism()),
        ("akivis", akivis_of(&octonion()).unwrap(), octonion_cycle()),
    ]
}
