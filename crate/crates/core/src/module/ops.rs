use super::{ModuleMap, Rep};
use crate::algebra::Algebra;
use crate::linalg::{Matrix, QuotientSpace};

/// Per vertex, a basis of `rad M` at that vertex: the sum of images of incoming arrows.
pub(crate) fn radical_spaces(m: &Rep) -> Vec<Matrix> {
    let alg = m.algebra();
    let f = m.field();
    (0..m.dims().len())
        .map(|v| {
            let mut span = Matrix::zeros(f, m.dim(v), 0);
            for (k, a) in alg.arrows().iter().enumerate() {
                if a.target == v {
                    span = span.hstack(m.map(k));
                }
            }
            span.column_space()
        })
        .collect()
}

/// Per vertex, a basis of the socle: vectors killed by every outgoing arrow.
pub(crate) fn socle_spaces(m: &Rep) -> Vec<Matrix> {
    let alg = m.algebra();
    let f = m.field();
    (0..m.dims().len())
        .map(|v| {
            let mut stacked = Matrix::zeros(f, 0, m.dim(v));
            for (k, a) in alg.arrows().iter().enumerate() {
                if a.source == v {
                    stacked = stacked.vstack(m.map(k));
                }
            }
            stacked.kernel_basis()
        })
        .collect()
}

impl Rep {
    /// The submodule spanned by the given per-vertex column bases, which must be
    /// linearly independent and closed under the arrows.
    pub fn submodule(&self, bases: Vec<Matrix>) -> (Rep, ModuleMap) {
        let alg = self.algebra();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let image = self.map(k).mul(&bases[a.source]);
                bases[a.target]
                    .solve(&image)
                    .expect("shapes agree")
                    .expect("subspaces are closed under the arrows")
            })
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        let sub = Rep::new_unchecked(alg, dims, maps);
        let incl = ModuleMap::new_unchecked(&sub, self, bases);
        (sub, incl)
    }

    /// The quotient by the submodule spanned by the given per-vertex columns.
    pub fn quotient(&self, spans: &[Matrix]) -> (Rep, ModuleMap) {
        let alg = self.algebra();
        let qs: Vec<QuotientSpace> = spans.iter().map(QuotientSpace::new).collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| qs[a.target].projection.mul(self.map(k)).mul(&qs[a.source].section))
            .collect();
        let dims = qs.iter().map(QuotientSpace::dim).collect();
        let quot = Rep::new_unchecked(alg, dims, maps);
        let proj = ModuleMap::new_unchecked(self, &quot, qs.into_iter().map(|q| q.projection).collect());
        (quot, proj)
    }

    pub fn radical(&self) -> (Rep, ModuleMap) {
        self.submodule(radical_spaces(self))
    }

    pub fn socle(&self) -> (Rep, ModuleMap) {
        self.submodule(socle_spaces(self))
    }

    pub fn top(&self) -> (Rep, ModuleMap) {
        self.quotient(&radical_spaces(self))
    }

    /// Per-vertex bases of `rad^k M` inside `M`.
    pub fn radical_power_spaces(&self, k: usize) -> Vec<Matrix> {
        let mut spaces: Vec<Matrix> = self.dims().iter().map(|&d| Matrix::identity(self.field(), d)).collect();
        let mut current = self.clone();
        for _ in 0..k {
            let (rad, incl) = current.radical();
            spaces = spaces.iter().zip(&incl.components).map(|(s, c)| s.mul(c)).collect();
            current = rad;
        }
        spaces
    }
}

impl ModuleMap {
    pub fn kernel(&self) -> (Rep, ModuleMap) {
        self.source.submodule(self.components.iter().map(Matrix::kernel_basis).collect())
    }

    pub fn image(&self) -> (Rep, ModuleMap) {
        self.target.submodule(self.components.iter().map(Matrix::column_space).collect())
    }

    pub fn cokernel(&self) -> (Rep, ModuleMap) {
        self.target.quotient(&self.components)
    }
}

/// A direct sum together with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Rep,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(algebra: &Algebra, parts: &[Rep]) -> DirectSum {
    let f = algebra.field();
    let n = algebra.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
    let maps = (0..algebra.arrows().len())
        .map(|k| Matrix::block_diag(f, &parts.iter().map(|p| p.map(k).clone()).collect::<Vec<_>>()))
        .collect();
    let module = Rep::new_unchecked(algebra, dims.clone(), maps);
    let mut offsets = vec![0; n];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dims[v], p.dim(v));
            i.paste(offsets[v], 0, &Matrix::identity(f, p.dim(v)));
            proj.push(i.transpose());
            inj.push(i);
            offsets[v] += p.dim(v);
        }
        injections.push(ModuleMap::new_unchecked(p, &module, inj));
        projections.push(ModuleMap::new_unchecked(&module, p, proj));
    }
    DirectSum { module, injections, projections }
}

/// The vector space dual, a module over the opposite algebra.
pub fn dualize(m: &Rep) -> Rep {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(Matrix::transpose).collect();
    Rep::new_unchecked(&op, m.dims().to_vec(), maps)
}

/// `D f : D(target) -> D(source)`.
pub fn dualize_map(f: &ModuleMap) -> ModuleMap {
    let components = f.components.iter().map(Matrix::transpose).collect();
    ModuleMap::new_unchecked(&dualize(&f.target), &dualize(&f.source), components)
}
