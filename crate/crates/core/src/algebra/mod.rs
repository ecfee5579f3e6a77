//! Bound quiver algebras `KQ/I` with an explicit path basis.
//!
//! Paths compose in function order: the product `pq` means "first `q`, then
//! `p`". Internally a path stores its arrows in the order they are applied.

mod build;
mod parse;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{FieldSpec, LinalgError, Scalar};

pub use parse::{parse_algebra, parse_algebra_with_field, parse_field_name};

/// Path length at which basis construction gives up.
pub const DEFAULT_LENGTH_BOUND: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: undeclared vertex `{label}`")]
    UndeclaredVertex { pos: Pos, label: String },
    #[error("{pos}: undeclared arrow `{label}`")]
    UndeclaredArrow { pos: Pos, label: String },
    #[error("{pos}: duplicate label `{label}`")]
    DuplicateLabel { pos: Pos, label: String },
    #[error("{pos}: relation terms are not parallel")]
    NonParallel { pos: Pos },
    #[error("{pos}: `{path}` is not a composable path")]
    NotComposable { pos: Pos, path: String },
    #[error("{pos}: relation term `{path}` has length below 2, so the ideal is not admissible")]
    ShortTerm { pos: Pos, path: String },
    #[error("non-admissible ideal: {0}")]
    NonAdmissible(String),
    #[error(transparent)]
    Field(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A linear combination of parallel paths; each path lists arrows in application order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

/// A basis element of the algebra: a path that survives reduction modulo the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    /// Arrow indices in application order.
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn length(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Debug)]
struct AlgebraData {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<BasisPath>,
    /// `mult[a][b]` holds the coordinates of `a * b` (first `b`, then `a`).
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    trivial: Vec<usize>,
    arrow_basis: Vec<usize>,
    /// `by_ends[s][t]`: basis paths from `s` to `t`.
    by_ends: Vec<Vec<Vec<usize>>>,
    loewy: usize,
}

#[derive(Debug)]
struct AlgebraPair {
    sides: [AlgebraData; 2],
}

/// A bound quiver algebra. Cloning is cheap; the opposite algebra shares storage,
/// so `a.opposite().opposite() == a`.
#[derive(Clone)]
pub struct Algebra {
    pair: Arc<AlgebraPair>,
    side: usize,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pair, &other.pair) && self.side == other.side
    }
}

impl Eq for Algebra {}

impl Hash for Algebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (Arc::as_ptr(&self.pair) as usize).hash(state);
        self.side.hash(state);
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.data().quiver.vertices)
            .field("dim", &self.dim())
            .field("opposite", &self.is_opposite())
            .finish()
    }
}

impl Algebra {
    fn data(&self) -> &AlgebraData {
        &self.pair.sides[self.side]
    }

    pub(crate) fn from_parts(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>, bound: usize) -> Result<Self, AlgebraError> {
        let built = build::build_basis(field, &quiver, &relations, bound)?;
        let n = quiver.vertices.len();
        let by_ends = group_by_ends(&built.basis, n);
        let trivial: Vec<usize> = (0..n)
            .map(|v| built.basis.iter().position(|b| b.is_trivial() && b.source == v).expect("trivial path"))
            .collect();
        let arrow_basis: Vec<usize> = (0..quiver.arrows.len())
            .map(|a| built.basis.iter().position(|b| b.arrows == [a]).expect("arrows survive admissible relations"))
            .collect();

        let op_basis: Vec<BasisPath> = built
            .basis
            .iter()
            .map(|b| BasisPath { source: b.target, target: b.source, arrows: b.arrows.iter().rev().copied().collect() })
            .collect();
        let dim = built.basis.len();
        let mut op_mult = vec![vec![Vec::new(); dim]; dim];
        for (a, row) in built.mult.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                op_mult[b][a] = v.clone();
            }
        }
        let op_relations = relations
            .iter()
            .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.iter().rev().copied().collect())).collect() })
            .collect();
        let op = AlgebraData {
            field,
            quiver: quiver.opposite(),
            relations: op_relations,
            by_ends: group_by_ends(&op_basis, n),
            basis: op_basis,
            mult: op_mult,
            trivial: trivial.clone(),
            arrow_basis: arrow_basis.clone(),
            loewy: built.loewy,
        };
        let main = AlgebraData {
            field,
            quiver,
            relations,
            basis: built.basis,
            mult: built.mult,
            trivial,
            arrow_basis,
            by_ends,
            loewy: built.loewy,
        };
        Ok(Algebra { pair: Arc::new(AlgebraPair { sides: [main, op] }), side: 0 })
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { pair: Arc::clone(&self.pair), side: 1 - self.side }
    }

    /// True for the algebra obtained by reversing the parsed quiver.
    pub fn is_opposite(&self) -> bool {
        self.side == 1
    }

    pub fn field(&self) -> FieldSpec {
        self.data().field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.data().quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.data().relations
    }

    pub fn num_vertices(&self) -> usize {
        self.data().quiver.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.data().quiver.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.data().quiver.vertex_index(label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.data().quiver.arrows
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.data().basis
    }

    pub fn dim(&self) -> usize {
        self.data().basis.len()
    }

    /// Coordinates of `a * b` (first `b`, then `a`).
    pub fn mult(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.data().mult[a][b]
    }

    pub fn trivial(&self, v: usize) -> usize {
        self.data().trivial[v]
    }

    pub fn arrow_basis(&self, arrow: usize) -> usize {
        self.data().arrow_basis[arrow]
    }

    /// Basis paths from `source` to `target`.
    pub fn paths(&self, source: usize, target: usize) -> &[usize] {
        &self.data().by_ends[source][target]
    }

    /// Smallest `L` with `J^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.data().loewy
    }

    /// Human-readable name of a basis element in function order, e.g. `b1*b2` or `e3`.
    pub fn path_name(&self, b: usize) -> String {
        let p = &self.data().basis[b];
        if p.is_trivial() {
            return format!("e{}", self.vertex_label(p.source));
        }
        p.arrows
            .iter()
            .rev()
            .map(|&a| self.data().quiver.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Product of two elements given in basis coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (k, v) in self.mult(a, b) {
                    out[*k] = &out[*k] + &(&c * v);
                }
            }
        }
        out
    }
}

fn group_by_ends(basis: &[BasisPath], n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_ends = vec![vec![Vec::new(); n]; n];
    for (i, b) in basis.iter().enumerate() {
        by_ends[b.source][b.target].push(i);
    }
    by_ends
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn linear_rad_square_zero_dimension() {
        let a = parse_algebra(&fixtures::linear_radical_square_zero(2)).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn single_vertex_is_one_dimensional() {
        let a = parse_algebra("field Q\nvertices 1\n").unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn commutative_square_dimension() {
        let a = parse_algebra(fixtures::COMMUTATIVE_SQUARE).unwrap();
        assert_eq!(a.dim(), 15);
        // b*a and d*c merge into one basis vector from 6 to 3
        let six = a.vertex_index("6").unwrap();
        let three = a.vertex_index("3").unwrap();
        assert_eq!(a.paths(six, three).len(), 1);
        assert_eq!(a.opposite().dim(), 15);
    }

    #[test]
    fn acyclic_without_relations_keeps_all_paths() {
        let a = parse_algebra("field Q\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        assert_eq!(a.dim(), 6);
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = parse_algebra(&fixtures::linear_radical_square_zero(2)).unwrap();
        let op = a.opposite();
        assert_ne!(op, a);
        assert_eq!(op.opposite(), a);
        let b1 = a.quiver().arrow_index("b1").unwrap();
        assert_eq!(a.arrows()[b1].source, a.vertex_index("2").unwrap());
        assert_eq!(op.arrows()[b1].source, a.vertex_index("1").unwrap());
    }

    #[test]
    fn rejects_non_admissible_inputs() {
        let short = parse_algebra("field Q\nvertices 1 2\narrow a : 1 -> 2\nrelation a\n");
        assert!(matches!(short, Err(AlgebraError::ShortTerm { .. })));
        let loop_free = parse_algebra("field Q\nvertices 1\narrow x : 1 -> 1\n");
        assert!(matches!(loop_free, Err(AlgebraError::NonAdmissible(_))));
        let nonparallel = parse_algebra("field Q\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 1 -> 2\narrow d : 2 -> 1\nrelation b*a - d*c\n");
        assert!(matches!(nonparallel, Err(AlgebraError::NonParallel { .. })));
    }

    #[test]
    fn reports_positions() {
        let err = parse_algebra("field Q\nvertices 1 2\narrow a : 1 -> 7\n").unwrap_err();
        assert_eq!(err.to_string(), "3:16: undeclared vertex `7`");
    }
}
