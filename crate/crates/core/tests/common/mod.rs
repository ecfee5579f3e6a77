#![allow(dead_code)]

use quiverhom::algebra::{parse_algebra, parse_algebra_with_field, Algebra};
use quiverhom::fixtures;
use quiverhom::homological::{Engine, EngineConfig};
use quiverhom::linalg::{FieldSpec, Matrix, Scalar};
use quiverhom::module::{direct_sum, Named, Rep};
use quiverhom::orthogonal::{nakayama_ambient, standard_ambient};

pub fn alg(text: &str) -> Algebra {
    parse_algebra(text).expect("fixture parses")
}

pub fn alg_f2(text: &str) -> Algebra {
    parse_algebra_with_field(text, Some(FieldSpec::Prime(2))).expect("fixture parses over F2")
}

pub fn engine() -> Engine {
    Engine::new(EngineConfig::default())
}

/// Every fixture algebra, with a short role name.
pub fn fixture_algebras() -> Vec<(String, Algebra)> {
    let mut out = vec![
        ("linear A3, radical square zero".to_string(), alg(fixtures::LINEAR_N2)),
        ("commutative square with tail".to_string(), alg(fixtures::COMMUTATIVE_SQUARE)),
        ("hereditary A2".to_string(), alg(fixtures::HEREDITARY_A2)),
        ("dual numbers".to_string(), alg(fixtures::DUAL_NUMBERS)),
        ("semisimple".to_string(), alg(fixtures::SEMISIMPLE)),
    ];
    for n in 3..=4 {
        out.push((format!("linear radical square zero, n = {n}"), alg(&fixtures::linear_radical_square_zero(n))));
    }
    out
}

/// Simples, indecomposable projectives and injectives, plus every uniserial
/// module when the algebra is Nakayama.
pub fn sample_modules(a: &Algebra) -> Vec<Named> {
    let mut out = standard_ambient(a);
    if let Ok(extra) = nakayama_ambient(a) {
        for m in extra {
            if !out.iter().any(|x| x.rep == m.rep) {
                out.push(m);
            }
        }
    }
    out
}

/// A direct sum of sample modules, chosen by index with repetition.
pub fn sum_of(a: &Algebra, pool: &[Named], picks: &[usize]) -> Rep {
    let parts: Vec<Rep> = picks.iter().map(|&i| pool[i % pool.len()].rep.clone()).collect();
    direct_sum(a, &parts).module
}

fn f2_matrix(rows: usize, cols: usize, bits: u64) -> Matrix {
    let f = FieldSpec::Prime(2);
    let data = (0..rows * cols).map(|k| f.from_i64(((bits >> k) & 1) as i64)).collect();
    Matrix::from_entries(f, rows, cols, data).expect("shape")
}

fn dim_vectors(n: usize, max_total: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max_total {
        for mut rest in dim_vectors(n - 1, max_total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every representation over F2 with total dimension between 1 and `max_total`,
/// one per choice of matrices (no isomorphism reduction).
pub fn all_f2_modules(a: &Algebra, max_total: usize) -> Vec<Rep> {
    let mut out = Vec::new();
    for dims in dim_vectors(a.num_vertices(), max_total) {
        if dims.iter().sum::<usize>() == 0 {
            continue;
        }
        let shapes: Vec<(usize, usize)> = a.arrows().iter().map(|ar| (dims[ar.target], dims[ar.source])).collect();
        let bits: u32 = shapes.iter().map(|(r, c)| (r * c) as u32).sum();
        for mask in 0..(1u64 << bits) {
            let mut offset = 0;
            let maps = shapes
                .iter()
                .map(|&(r, c)| {
                    let m = f2_matrix(r, c, mask >> offset);
                    offset += r * c;
                    m
                })
                .collect();
            if let Ok(rep) = Rep::new(a, dims.clone(), maps) {
                out.push(rep);
            }
        }
    }
    out
}

type Bits = Vec<Vec<u8>>;

fn bits_of(m: &Matrix) -> Bits {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| match m.get(r, c) {
                    Scalar::Modular { value, .. } => *value as u8,
                    Scalar::Rational(_) => panic!("expected an F2 matrix"),
                })
                .collect()
        })
        .collect()
}

fn mul(x: &Bits, y: &Bits, inner: usize, cols: usize) -> Bits {
    x.iter()
        .map(|row| (0..cols).map(|c| (0..inner).fold(0, |acc, k| acc ^ (row[k] & y[k][c]))).collect())
        .collect()
}

/// Number of module maps `m -> n` over F2, by trying every family of linear maps.
pub fn brute_force_hom_count(m: &Rep, n: &Rep) -> u64 {
    let a = m.algebra();
    let verts = a.num_vertices();
    let mm: Vec<Bits> = (0..a.arrows().len()).map(|k| bits_of(m.map(k))).collect();
    let nm: Vec<Bits> = (0..a.arrows().len()).map(|k| bits_of(n.map(k))).collect();
    let sizes: Vec<usize> = (0..verts).map(|v| n.dim(v) * m.dim(v)).collect();
    let total: usize = sizes.iter().sum();
    assert!(total <= 20, "brute force too large");
    let mut count = 0;
    for mask in 0..(1u64 << total) {
        let mut offset = 0;
        let f: Vec<Bits> = (0..verts)
            .map(|v| {
                let (r, c) = (n.dim(v), m.dim(v));
                let block = (0..r).map(|i| (0..c).map(|j| ((mask >> (offset + i * c + j)) & 1) as u8).collect()).collect();
                offset += r * c;
                block
            })
            .collect();
        let commutes = a.arrows().iter().enumerate().all(|(k, ar)| {
            let (s, t) = (ar.source, ar.target);
            let left = mul(&nm[k], &f[s], n.dim(s), m.dim(s));
            let right = mul(&f[t], &mm[k], m.dim(t), m.dim(s));
            left == right
        });
        if commutes {
            count += 1;
        }
    }
    count
}
