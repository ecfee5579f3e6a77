use super::ops::dualize;
use super::{ModuleMap, Rep};
use crate::algebra::Algebra;
use crate::linalg::{Matrix, Scalar};

/// A projective module `⊕_h P(v_h)` with its path coordinates: at vertex `w`
/// the coordinates run over generators `h`, then basis paths `v_h -> w`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub rep: Rep,
    /// Vertex of each generator.
    pub generators: Vec<usize>,
    offsets: Vec<Vec<usize>>,
}

impl FreeModule {
    pub fn new(algebra: &Algebra, generators: Vec<usize>) -> FreeModule {
        let f = algebra.field();
        let n = algebra.num_vertices();
        let mut offsets = vec![vec![0; generators.len()]; n];
        let mut dims = vec![0; n];
        for w in 0..n {
            for (h, &g) in generators.iter().enumerate() {
                offsets[w][h] = dims[w];
                dims[w] += algebra.paths(g, w).len();
            }
        }
        let maps = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                let ab = algebra.arrow_basis(k);
                for (h, &g) in generators.iter().enumerate() {
                    for (i, &p) in algebra.paths(g, a.source).iter().enumerate() {
                        for (r, c) in algebra.mult(ab, p) {
                            let row = offsets[a.target][h] + position(algebra.paths(g, a.target), *r);
                            m.set(row, offsets[a.source][h] + i, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        let rep = Rep::new_unchecked(algebra, dims, maps);
        FreeModule { rep, generators, offsets }
    }

    /// Coordinate at vertex `w` of the path `p` applied to generator `h`.
    pub fn coord(&self, w: usize, h: usize, p: usize) -> usize {
        let alg = self.rep.algebra();
        self.offsets[w][h] + position(alg.paths(self.generators[h], w), p)
    }

    /// Coordinate of generator `h` itself, at its own vertex.
    pub fn generator_coord(&self, h: usize) -> usize {
        let v = self.generators[h];
        self.coord(v, h, self.rep.algebra().trivial(v))
    }

    /// Splits a vector at vertex `w` into `(generator, path, coefficient)` terms.
    pub fn terms(&self, w: usize, vector: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        let alg = self.rep.algebra();
        let mut out = Vec::new();
        for (h, &g) in self.generators.iter().enumerate() {
            for (i, &p) in alg.paths(g, w).iter().enumerate() {
                let c = &vector[self.offsets[w][h] + i];
                if !c.is_zero() {
                    out.push((h, p, c.clone()));
                }
            }
        }
        out
    }

    /// Number of copies of each `P(v)`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.rep.algebra().num_vertices()];
        for &g in &self.generators {
            m[g] += 1;
        }
        m
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).expect("path between the expected vertices")
}

/// The map of free modules sending generator `h` of `source` to
/// `Σ c · p e_h'` for each `(h', p, c)` in `images[h]`.
pub fn projective_map(source: &FreeModule, target: &FreeModule, images: &[Vec<(usize, usize, Scalar)>]) -> ModuleMap {
    let alg = source.rep.algebra();
    let f = alg.field();
    let n = alg.num_vertices();
    let components = (0..n)
        .map(|w| {
            let mut m = Matrix::zeros(f, target.rep.dim(w), source.rep.dim(w));
            for (h, &g) in source.generators.iter().enumerate() {
                for &q in alg.paths(g, w) {
                    let col = source.coord(w, h, q);
                    for (h2, p, c) in &images[h] {
                        for (r, k) in alg.mult(q, *p) {
                            let row = target.coord(w, *h2, *r);
                            let v = m.get(row, col) + &(c * k);
                            m.set(row, col, v);
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleMap::new_unchecked(&source.rep, &target.rep, components)
}

/// The map `free -> m` sending generator `h` to `images[h] ∈ m` at vertex `v_h`.
pub fn map_from_free(free: &FreeModule, m: &Rep, images: &[Vec<Scalar>]) -> ModuleMap {
    let alg = m.algebra();
    let f = alg.field();
    let components = (0..alg.num_vertices())
        .map(|w| {
            let mut out = Matrix::zeros(f, m.dim(w), free.rep.dim(w));
            for (h, &g) in free.generators.iter().enumerate() {
                let x = Matrix::from_columns(f, m.dim(g), std::slice::from_ref(&images[h]));
                for &q in alg.paths(g, w) {
                    let col = free.coord(w, h, q);
                    out.paste(0, col, &m.path_action(q).mul(&x));
                }
            }
            out
        })
        .collect();
    ModuleMap::new_unchecked(&free.rep, m, components)
}

pub fn simple(algebra: &Algebra, v: usize) -> Rep {
    let f = algebra.field();
    let dims: Vec<usize> = (0..algebra.num_vertices()).map(|w| usize::from(w == v)).collect();
    let maps = algebra.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
    Rep::new_unchecked(algebra, dims, maps)
}

/// `P(v) = Λe_v`.
pub fn projective(algebra: &Algebra, v: usize) -> Rep {
    FreeModule::new(algebra, vec![v]).rep
}

/// `I(v) = D(e_v Λ)`, the dual of the opposite algebra's projective at `v`.
pub fn injective(algebra: &Algebra, v: usize) -> Rep {
    dualize(&projective(&algebra.opposite(), v))
}

/// `Λ` as a left module, presented as `P(1) ⊕ ... ⊕ P(n)`.
pub fn regular(algebra: &Algebra) -> Rep {
    FreeModule::new(algebra, (0..algebra.num_vertices()).collect()).rep
}

/// `DΛ^op`, presented as `I(1) ⊕ ... ⊕ I(n)`.
pub fn dual_regular(algebra: &Algebra) -> Rep {
    dualize(&regular(&algebra.opposite()))
}
