//! Finite-dimensional left modules as quiver representations.
//!
//! An arrow `a : i -> j` acts by a matrix `M_i -> M_j` with `dim M_j` rows.

mod decompose;
mod free;
mod hom;
mod nakayama;
mod ops;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{FieldSpec, Matrix, Scalar};

pub use decompose::{
    add_member, basic, decompose, indecomposables_isomorphic, is_isomorphic, is_summand_of_local, Decomposition,
    SplitConfig,
};
pub use free::{dual_regular, injective, map_from_free, projective, projective_map, regular, simple, FreeModule};
pub use hom::{hom_basis, HomSpace};
pub use nakayama::{is_uniserial, nakayama_indecomposables};
pub use ops::{direct_sum, dualize, dualize_map, DirectSum};
pub(crate) use ops::radical_spaces;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("relation {index} does not act as zero on the module")]
    RelationViolated { index: usize },
    #[error("arrow `{arrow}` needs a {rows}x{cols} matrix")]
    Shape { arrow: String, rows: usize, cols: usize },
    #[error("expected {expected} dimensions, one per vertex, found {found}")]
    DimCount { expected: usize, found: usize },
    #[error("entries do not lie in {0}")]
    WrongField(FieldSpec),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("not a module homomorphism")]
    NotHomomorphism,
    #[error("decomposition not certified within budget {budget}")]
    NotCertified { budget: usize },
    #[error("algebra is not Nakayama: {0}")]
    NotNakayama(String),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RepData {
    algebra: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A representation of the algebra's quiver satisfying its relations.
/// Cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Rep(Arc<RepData>);

impl Hash for Rep {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)
    }
}

impl Rep {
    /// Validates shapes and relations.
    pub fn new(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep, ModuleError> {
        if dims.len() != algebra.num_vertices() {
            return Err(ModuleError::DimCount { expected: algebra.num_vertices(), found: dims.len() });
        }
        for (a, m) in algebra.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(ModuleError::Shape { arrow: a.label.clone(), rows: dims[a.target], cols: dims[a.source] });
            }
            if m.field() != algebra.field() {
                return Err(ModuleError::WrongField(algebra.field()));
            }
        }
        if maps.len() != algebra.arrows().len() {
            return Err(ModuleError::DimCount { expected: algebra.arrows().len(), found: maps.len() });
        }
        let rep = Rep::new_unchecked(algebra, dims, maps);
        for (index, rel) in algebra.relations().iter().enumerate() {
            let (_, first) = &rel.terms[0];
            let s = algebra.arrows()[first[0]].source;
            let t = algebra.arrows()[*first.last().unwrap()].target;
            let mut acc = Matrix::zeros(algebra.field(), rep.dim(t), rep.dim(s));
            for (c, path) in &rel.terms {
                acc.add_scaled(c, &rep.arrow_path(path));
            }
            if !acc.is_zero() {
                return Err(ModuleError::RelationViolated { index });
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Rep {
        Rep(Arc::new(RepData { algebra: algebra.clone(), dims, maps }))
    }

    pub fn zero(algebra: &Algebra) -> Rep {
        let f = algebra.field();
        let maps = algebra.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Rep::new_unchecked(algebra, vec![0; algebra.num_vertices()], maps)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.0.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    /// Action of a path given by arrows in application order.
    pub fn arrow_path(&self, arrows: &[usize]) -> Matrix {
        let alg = &self.0.algebra;
        let start = alg.arrows()[arrows[0]].source;
        let mut acc = Matrix::identity(self.field(), self.dim(start));
        for &a in arrows {
            acc = self.map(a).mul(&acc);
        }
        acc
    }

    /// Action of a basis element of the algebra, `M_source -> M_target`.
    pub fn path_action(&self, basis_index: usize) -> Matrix {
        let p = &self.0.algebra.basis()[basis_index];
        if p.is_trivial() {
            Matrix::identity(self.field(), self.dim(p.source))
        } else {
            self.arrow_path(&p.arrows)
        }
    }

    /// Dimension of the top `M / rad M` at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = ops::radical_spaces(self);
        (0..self.dims().len()).map(|v| self.dim(v) - rad[v].cols()).collect()
    }

    /// Dimension of the socle at each vertex.
    pub fn socle_dims(&self) -> Vec<usize> {
        ops::socle_spaces(self).iter().map(Matrix::cols).collect()
    }
}

/// A homomorphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    pub source: Rep,
    pub target: Rep,
    pub components: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(source: &Rep, target: &Rep, components: Vec<Matrix>) -> Result<ModuleMap, ModuleError> {
        if source.algebra() != target.algebra() {
            return Err(ModuleError::AlgebraMismatch);
        }
        let f = ModuleMap { source: source.clone(), target: target.clone(), components };
        if !f.commutes() {
            return Err(ModuleError::NotHomomorphism);
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: &Rep, target: &Rep, components: Vec<Matrix>) -> ModuleMap {
        ModuleMap { source: source.clone(), target: target.clone(), components }
    }

    pub fn zero(source: &Rep, target: &Rep) -> ModuleMap {
        let f = source.field();
        let components = (0..source.dims().len()).map(|v| Matrix::zeros(f, target.dim(v), source.dim(v))).collect();
        ModuleMap::new_unchecked(source, target, components)
    }

    pub fn identity(m: &Rep) -> ModuleMap {
        let f = m.field();
        let components = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap::new_unchecked(m, m, components)
    }

    /// Checks `target(a) * f_i = f_j * source(a)` for every arrow `a : i -> j`.
    pub fn commutes(&self) -> bool {
        let alg = self.source.algebra();
        (0..self.source.dims().len()).all(|v| self.components[v].shape() == (self.target.dim(v), self.source.dim(v)))
            && alg.arrows().iter().enumerate().all(|(k, a)| {
                self.target.map(k).mul(&self.components[a.source]) == self.components[a.target].mul(self.source.map(k))
            })
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        let components = self.components.iter().zip(&first.components).map(|(g, f)| g.mul(f)).collect();
        ModuleMap::new_unchecked(&first.source, &self.target, components)
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        ModuleMap::new_unchecked(&self.source, &self.target, components)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        let components = self.components.iter().map(|a| a.scale(s)).collect();
        ModuleMap::new_unchecked(&self.source, &self.target, components)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Matrix::rank).sum()
    }

    /// All entries, vertex by vertex in row-major order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.components.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    pub fn trace(&self) -> Scalar {
        let f = self.source.field();
        self.components.iter().fold(f.zero(), |acc, c| &acc + &c.trace())
    }
}

/// A module together with a name from the symbolic module grammar, such as `S(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Named {
    pub name: String,
    pub rep: Rep,
}

impl Named {
    pub fn new(name: impl Into<String>, rep: Rep) -> Named {
        Named { name: name.into(), rep }
    }

    pub fn simple(algebra: &Algebra, v: usize) -> Named {
        Named::new(format!("S({})", algebra.vertex_label(v)), free::simple(algebra, v))
    }

    pub fn projective(algebra: &Algebra, v: usize) -> Named {
        Named::new(format!("P({})", algebra.vertex_label(v)), free::projective(algebra, v))
    }

    pub fn injective(algebra: &Algebra, v: usize) -> Named {
        Named::new(format!("I({})", algebra.vertex_label(v)), free::injective(algebra, v))
    }

    pub fn regular(algebra: &Algebra) -> Named {
        Named::new("Lambda", free::regular(algebra))
    }

    pub fn dual_regular(algebra: &Algebra) -> Named {
        Named::new("DLambda", free::dual_regular(algebra))
    }
}

#[cfg(test)]
mod tests;
