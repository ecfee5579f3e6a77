use super::{ModuleMap, Rep};
use crate::linalg::{Matrix, Scalar};

/// Basis of `Hom(m, n)`: the solution space of the commuting-square equations
/// `n_a f_i = f_j m_a` for every arrow `a : i -> j`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<ModuleMap> {
    assert_eq!(m.algebra(), n.algebra(), "hom between modules over different algebras");
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dim(v) + c;

    let rows: usize = alg.arrows().iter().map(|a| n.dim(a.target) * m.dim(a.source)).sum();
    let mut system = Matrix::zeros(f, rows, unknowns);
    let mut row = 0;
    for (k, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let na = n.map(k);
        let ma = m.map(k);
        for i in 0..n.dim(t) {
            for j in 0..m.dim(s) {
                // (n_a f_s)[i][j] - (f_t m_a)[i][j]
                for l in 0..n.dim(s) {
                    let c = na.get(i, l);
                    if !c.is_zero() {
                        let idx = var(s, l, j);
                        let cur = system.get(row, idx) + c;
                        system.set(row, idx, cur);
                    }
                }
                for l in 0..m.dim(t) {
                    let c = ma.get(l, j);
                    if !c.is_zero() {
                        let idx = var(t, i, l);
                        let cur = system.get(row, idx) - c;
                        system.set(row, idx, cur);
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|col| {
            let components = (0..nv)
                .map(|v| {
                    let mut c = Matrix::zeros(f, n.dim(v), m.dim(v));
                    for r in 0..n.dim(v) {
                        for cc in 0..m.dim(v) {
                            c.set(r, cc, kernel.get(var(v, r, cc), col).clone());
                        }
                    }
                    c
                })
                .collect();
            ModuleMap::new_unchecked(m, n, components)
        })
        .collect()
}

/// `Hom(m, n)` with a fixed basis and coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Rep,
    pub target: Rep,
    pub basis: Vec<ModuleMap>,
    flat: Matrix,
}

impl HomSpace {
    pub fn new(m: &Rep, n: &Rep) -> HomSpace {
        let basis = hom_basis(m, n);
        let len: usize = (0..m.dims().len()).map(|v| m.dim(v) * n.dim(v)).sum();
        let cols: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::flatten).collect();
        let flat = Matrix::from_columns(m.field(), len, &cols);
        HomSpace { source: m.clone(), target: n.clone(), basis, flat }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coordinates(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        let b = Matrix::from_columns(self.source.field(), self.flat.rows(), &[f.flatten()]);
        self.flat.solve(&b).ok().flatten().map(|x| x.column(0))
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> ModuleMap {
        let mut acc = ModuleMap::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}
