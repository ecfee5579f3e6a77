use crate::algebra::Algebra;
use crate::linalg::{Matrix, QuotientSpace, Scalar};
use crate::module::{dualize, dualize_map, map_from_free, radical_spaces, FreeModule, ModuleMap, Rep};

/// Image of one generator: `(target generator, basis path, coefficient)` terms.
pub type GeneratorImage = Vec<(usize, usize, Scalar)>;

/// The projective cover `P(top m) -> m`, generated by a complement of the radical.
pub fn projective_cover(m: &Rep) -> (FreeModule, ModuleMap) {
    let alg = m.algebra();
    let rad = radical_spaces(m);
    let mut generators = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let qs = QuotientSpace::new(r);
        for c in 0..qs.section.cols() {
            generators.push(v);
            images.push(qs.section.column(c));
        }
    }
    let free = FreeModule::new(alg, generators);
    let map = map_from_free(&free, m, &images);
    (free, map)
}

/// A prefix of the minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Rep,
    pub terms: Vec<FreeModule>,
    /// `differentials[0]` is the augmentation `P_0 -> M`, then `d_k : P_k -> P_{k-1}`.
    pub differentials: Vec<ModuleMap>,
    /// `images[k][h]` expresses `d_k` on generator `h` of `P_k`; empty for `k = 0`.
    pub images: Vec<Vec<GeneratorImage>>,
    /// `syzygies[k]` is `Ω^k M`, with `Ω^0 M = M`.
    pub syzygies: Vec<Rep>,
    inclusion: Option<ModuleMap>,
    /// The resolution has reached a zero kernel.
    pub complete: bool,
}

impl Resolution {
    pub fn new(m: &Rep) -> Resolution {
        Resolution {
            module: m.clone(),
            terms: Vec::new(),
            differentials: Vec::new(),
            images: Vec::new(),
            syzygies: vec![m.clone()],
            inclusion: None,
            complete: m.is_zero(),
        }
    }

    /// Index of the last computed term, if any.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Computes terms until `P_length` exists and its kernel is known, or the resolution stops.
    pub fn extend_to(&mut self, length: usize) {
        while !self.complete && self.terms.len() <= length {
            self.step();
        }
    }

    fn step(&mut self) {
        let k = self.terms.len();
        let omega = self.syzygies[k].clone();
        let (free, cover) = projective_cover(&omega);
        let d = match &self.inclusion {
            Some(incl) => incl.compose(&cover),
            None => cover.clone(),
        };
        let images = match self.terms.last() {
            Some(prev) => (0..free.generators.len())
                .map(|h| {
                    let v = free.generators[h];
                    prev.terms(v, &d.components[v].column(free.generator_coord(h)))
                })
                .collect(),
            None => Vec::new(),
        };
        let (kernel, incl) = cover.kernel();
        self.complete = kernel.is_zero();
        self.terms.push(free);
        self.differentials.push(d);
        self.images.push(images);
        self.syzygies.push(kernel);
        self.inclusion = Some(incl);
    }

    /// Projective dimension if the resolution has stopped.
    pub fn finite_length(&self) -> Option<usize> {
        self.complete.then(|| self.length())
    }

    /// Multiplicity of each `P(v)` in term `k` (zero past the end).
    pub fn multiplicities(&self, k: usize) -> Vec<usize> {
        match self.terms.get(k) {
            Some(t) => t.multiplicities(),
            None => vec![0; self.module.algebra().num_vertices()],
        }
    }

    /// Total dimension of each computed term.
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.rep.total_dim()).collect()
    }

    /// `Ω^k M`, or zero when `k` is past the computed range of a complete resolution.
    pub fn syzygy(&self, k: usize) -> Option<&Rep> {
        self.syzygies.get(k)
    }

    /// Whether every differential `d_k`, `k >= 1`, lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        self.images.iter().skip(1).all(|gens| {
            gens.iter().all(|terms| terms.iter().all(|(_, p, _)| !self.module.algebra().basis()[*p].is_trivial()))
        })
    }
}

/// A prefix of the minimal injective coresolution `0 -> M -> I^0 -> I^1 -> ...`.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub module: Rep,
    pub terms: Vec<Rep>,
    /// `maps[0]` is `M -> I^0`, then `I^{k-1} -> I^k`.
    pub maps: Vec<ModuleMap>,
    /// Multiplicity of each `I(v)` per term.
    pub multiplicities: Vec<Vec<usize>>,
    pub complete: bool,
}

impl Coresolution {
    /// Dual of the minimal projective resolution of `DM` over the opposite algebra.
    pub fn from_dual(module: &Rep, dual: &Resolution) -> Coresolution {
        Coresolution {
            module: module.clone(),
            terms: dual.terms.iter().map(|t| dualize(&t.rep)).collect(),
            maps: dual.differentials.iter().map(dualize_map).collect(),
            multiplicities: dual.terms.iter().map(FreeModule::multiplicities).collect(),
            complete: dual.complete,
        }
    }

    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Rep::total_dim).collect()
    }

    /// `I^k`, zero past the end of a complete coresolution.
    pub fn term(&self, algebra: &Algebra, k: usize) -> Rep {
        self.terms.get(k).cloned().unwrap_or_else(|| Rep::zero(algebra))
    }
}

/// Matrix of `Hom(d_k, N) : Hom(P_{k-1}, N) -> Hom(P_k, N)`, using `Hom(P(v), N) = N_v`.
pub(crate) fn pullback_matrix(res: &Resolution, k: usize, n: &Rep) -> Matrix {
    let f = n.field();
    let (Some(src), Some(tgt)) = (k.checked_sub(1).and_then(|j| res.terms.get(j)), res.terms.get(k)) else {
        return Matrix::zeros(f, 0, 0);
    };
    let offsets = |gens: &[usize]| {
        let mut out = Vec::with_capacity(gens.len() + 1);
        let mut acc = 0;
        for &g in gens {
            out.push(acc);
            acc += n.dim(g);
        }
        out.push(acc);
        out
    };
    let col_off = offsets(&src.generators);
    let row_off = offsets(&tgt.generators);
    let mut m = Matrix::zeros(f, *row_off.last().unwrap(), *col_off.last().unwrap());
    for (h, terms) in res.images[k].iter().enumerate() {
        for (h2, p, c) in terms {
            let block = n.path_action(*p).scale(c);
            for r in 0..block.rows() {
                for cc in 0..block.cols() {
                    let (row, col) = (row_off[h] + r, col_off[*h2] + cc);
                    let v = m.get(row, col) + block.get(r, cc);
                    m.set(row, col, v);
                }
            }
        }
    }
    m
}

/// `dim Hom(P_k, N)`.
pub(crate) fn hom_from_term(res: &Resolution, k: usize, n: &Rep) -> usize {
    res.terms.get(k).map_or(0, |t| t.generators.iter().map(|&g| n.dim(g)).sum())
}
