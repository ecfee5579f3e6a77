use std::collections::HashMap;

use super::{AlgebraError, BasisPath, Quiver, Relation};
use crate::linalg::{FieldSpec, Matrix, Scalar};

const MAX_PATHS: usize = 20_000;

pub(super) struct Built {
    pub basis: Vec<BasisPath>,
    pub mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub loewy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

/// Works in `KQ/J^N` for growing `N`: reduces paths of length `< N` modulo the
/// image of the ideal and stops once every path of length `N - 1` vanishes,
/// which forces `J^(N-1) ⊆ I`.
pub(super) fn build_basis(field: FieldSpec, quiver: &Quiver, relations: &[Relation], bound: usize) -> Result<Built, AlgebraError> {
    let n = quiver.vertices.len();
    let target = |p: &Path| p.arrows.last().map_or(p.source, |&a| quiver.arrows[a].target);
    let mut by_len: Vec<Vec<Path>> = vec![(0..n).map(|v| Path { source: v, arrows: Vec::new() }).collect()];
    let mut total = n;

    for big_n in 2..=bound + 1 {
        while by_len.len() < big_n {
            let next: Vec<Path> = by_len
                .last()
                .unwrap()
                .iter()
                .flat_map(|p| {
                    let t = target(p);
                    quiver.arrows.iter().enumerate().filter(move |(_, a)| a.source == t).map(move |(i, _)| {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        Path { source: p.source, arrows }
                    })
                })
                .collect();
            total += next.len();
            if total > MAX_PATHS {
                return Err(AlgebraError::NonAdmissible(format!(
                    "more than {MAX_PATHS} paths of length below {big_n}; the quotient does not look finite-dimensional"
                )));
            }
            by_len.push(next);
        }

        // Longest paths first, so pivots land on long paths and the surviving
        // normal forms are as short as possible.
        let columns: Vec<&Path> = by_len.iter().rev().flat_map(|ps| ps.iter()).collect();
        let col_of: HashMap<&Path, usize> = columns.iter().enumerate().map(|(i, p)| (*p, i)).collect();

        let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for rel in relations {
            let (_, first) = &rel.terms[0];
            let s = quiver.arrows[first[0]].source;
            let t = quiver.arrows[*first.last().unwrap()].target;
            let befores = by_len.iter().flatten().filter(|p| target(p) == s);
            for v in befores {
                for u in by_len.iter().flatten().filter(|p| p.source == t) {
                    let mut row = Vec::new();
                    for (c, term) in &rel.terms {
                        let len = v.arrows.len() + term.len() + u.arrows.len();
                        if len >= big_n {
                            continue;
                        }
                        let mut arrows = v.arrows.clone();
                        arrows.extend(term);
                        arrows.extend(&u.arrows);
                        let p = Path { source: v.source, arrows };
                        row.push((col_of[&p], c.clone()));
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let mut m = Matrix::zeros(field, rows.len(), columns.len());
        for (i, row) in rows.iter().enumerate() {
            for (c, v) in row {
                let cur = m.get(i, *c) + v;
                m.set(i, *c, cur);
            }
        }
        let (r, pivots) = m.rref();
        let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        let top = &by_len[big_n - 1];
        let vanishes = top.iter().all(|p| {
            let c = col_of[p];
            pivot_row.get(&c).is_some_and(|&row| (0..columns.len()).all(|k| k == c || r.get(row, k).is_zero()))
        });
        if !vanishes {
            continue;
        }

        let basis_cols: Vec<usize> = (0..columns.len()).filter(|c| !pivot_row.contains_key(c)).collect();
        let mut basis_cols_sorted = basis_cols.clone();
        // Present the basis shortest first, then by source and arrows.
        basis_cols_sorted.sort_by_key(|&c| (columns[c].arrows.len(), columns[c].source, columns[c].arrows.clone()));
        let basis_index: HashMap<usize, usize> = basis_cols_sorted.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let basis: Vec<BasisPath> = basis_cols_sorted
            .iter()
            .map(|&c| {
                let p = columns[c];
                BasisPath { source: p.source, target: target(p), arrows: p.arrows.clone() }
            })
            .collect();

        let reduce = |p: &Path| -> Vec<(usize, Scalar)> {
            if p.arrows.len() >= big_n {
                return Vec::new();
            }
            let c = col_of[p];
            if let Some(&b) = basis_index.get(&c) {
                return vec![(b, field.one())];
            }
            let row = pivot_row[&c];
            basis_cols
                .iter()
                .filter(|&&k| !r.get(row, k).is_zero())
                .map(|&k| (basis_index[&k], -r.get(row, k)))
                .collect()
        };

        let dim = basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (a, pa) in basis.iter().enumerate() {
            for (b, pb) in basis.iter().enumerate() {
                if pb.target != pa.source {
                    continue;
                }
                let mut arrows = pb.arrows.clone();
                arrows.extend(&pa.arrows);
                mult[a][b] = reduce(&Path { source: pb.source, arrows });
            }
        }
        return Ok(Built { basis, mult, loewy: big_n - 1 });
    }
    Err(AlgebraError::NonAdmissible(format!("paths of length {bound} do not vanish modulo the relations")))
}
