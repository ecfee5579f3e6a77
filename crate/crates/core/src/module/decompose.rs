//! Krull-Schmidt decomposition by Fitting splitting of sampled endomorphisms.
//!
//! A summand is accepted as indecomposable only with a certificate that its
//! endomorphism ring is local: over the rationals (or `F_p` with `p > dim`)
//! the trace form radical has codimension one; over small prime fields the
//! ring is enumerated and every element is checked to be nilpotent or invertible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::hom::hom_basis;
use super::ops::direct_sum;
use super::{ModuleError, ModuleMap, Rep};
use crate::linalg::{poly, FieldSpec, Matrix, QuotientSpace, Scalar};

/// Largest endomorphism ring (by cardinality) enumerated exhaustively.
const ENUMERATION_LIMIT: u64 = 1 << 16;
const ISO_TRIALS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitConfig {
    pub seed: u64,
    /// Random endomorphisms sampled before giving up on a split.
    pub budget: usize,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig { seed: 0, budget: 32 }
    }
}

/// Indecomposable summands up to isomorphism, with multiplicities.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<(Rep, usize)>,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }

    /// Every summand, repeated according to multiplicity.
    pub fn expanded(&self) -> Vec<Rep> {
        self.summands
            .iter()
            .flat_map(|(r, k)| std::iter::repeat_n(r.clone(), *k))
            .collect()
    }
}

enum Locality {
    Local,
    Split(ModuleMap),
    Unknown,
}

fn is_nilpotent(x: &ModuleMap) -> bool {
    x.components.iter().all(Matrix::is_nilpotent)
}

fn combine(end: &[ModuleMap], coeffs: &[Scalar]) -> ModuleMap {
    let mut acc = end[0].scale(&coeffs[0]);
    for (c, e) in coeffs.iter().zip(end).skip(1) {
        if !c.is_zero() {
            acc = acc.add(&e.scale(c));
        }
    }
    acc
}

/// All nonzero coefficient vectors of length `k` over `F_p`.
fn all_vectors(field: FieldSpec, k: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let p = field.characteristic();
    let total = p.pow(k as u32);
    (1..total).map(move |mut idx| {
        (0..k)
            .map(|_| {
                let v = idx % p;
                idx /= p;
                field.from_i64(v as i64)
            })
            .collect()
    })
}

fn small_enough(p: u64, k: usize) -> bool {
    (k as u32) < 64 && p.checked_pow(k as u32).is_some_and(|n| n <= ENUMERATION_LIMIT)
}

fn locality(m: &Rep, end: &[ModuleMap]) -> Locality {
    if end.len() <= 1 {
        return Locality::Local;
    }
    let field = m.field();
    let p = field.characteristic();
    let d = m.total_dim() as u64;
    if p == 0 || p > d {
        // x lies in the radical iff tr(xy) = 0 for all y.
        let k = end.len();
        let mut gram = Matrix::zeros(field, k, k);
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, end[i].compose(&end[j]).trace());
            }
        }
        let radical = gram.kernel_basis();
        let quotient_dim = k - radical.cols();
        if quotient_dim == 1 {
            return Locality::Local;
        }
        if p > 0 && small_enough(p, quotient_dim) {
            let qs = QuotientSpace::new(&radical);
            let complement: Vec<ModuleMap> = (0..qs.section.cols())
                .map(|c| {
                    let idx = (0..k).find(|&r| !qs.section.get(r, c).is_zero()).expect("unit column");
                    end[idx].clone()
                })
                .collect();
            for coeffs in all_vectors(field, complement.len()) {
                let x = combine(&complement, &coeffs);
                if !x.is_isomorphism() {
                    return Locality::Split(x);
                }
            }
            return Locality::Local;
        }
        return Locality::Unknown;
    }
    if small_enough(p, end.len()) {
        for coeffs in all_vectors(field, end.len()) {
            let x = combine(end, &coeffs);
            if !x.is_isomorphism() && !is_nilpotent(&x) {
                return Locality::Split(x);
            }
        }
        return Locality::Local;
    }
    Locality::Unknown
}

fn eigenvalues(x: &ModuleMap) -> Vec<Scalar> {
    let field = x.source.field();
    let mut out: Vec<Scalar> = Vec::new();
    for c in x.components.iter().filter(|c| c.rows() > 0) {
        for r in poly::roots(&poly::charpoly(c), field) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

fn splitting_shift(x: &ModuleMap) -> Option<ModuleMap> {
    let id = ModuleMap::identity(&x.source);
    eigenvalues(x).into_iter().find_map(|lambda| {
        let y = x.add(&id.scale(&-&lambda));
        (!is_nilpotent(&y) && !y.is_isomorphism()).then_some(y)
    })
}

fn search_split(m: &Rep, end: &[ModuleMap], cfg: &SplitConfig) -> Option<ModuleMap> {
    for e in end {
        if let Some(y) = splitting_shift(e) {
            return Some(y);
        }
    }
    let mut products = 0;
    'outer: for a in end {
        for b in end {
            if products >= cfg.budget {
                break 'outer;
            }
            products += 1;
            if let Some(y) = splitting_shift(&a.compose(b)) {
                return Some(y);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let field = m.field();
    for _ in 0..cfg.budget {
        let coeffs: Vec<Scalar> = end.iter().map(|_| field.random(&mut rng, 3)).collect();
        if coeffs.iter().all(Scalar::is_zero) {
            continue;
        }
        if let Some(y) = splitting_shift(&combine(end, &coeffs)) {
            return Some(y);
        }
    }
    None
}

/// `M = ker y^N ⊕ im y^N`.
fn fitting_split(m: &Rep, y: &ModuleMap) -> (Rep, Rep) {
    let n = m.dims().iter().copied().max().unwrap_or(0);
    let powers: Vec<Matrix> = y.components.iter().map(|c| c.power(n)).collect();
    let (ker, _) = m.submodule(powers.iter().map(Matrix::kernel_basis).collect());
    let (img, _) = m.submodule(powers.iter().map(Matrix::column_space).collect());
    (ker, img)
}

fn split_into(m: &Rep, cfg: &SplitConfig, out: &mut Vec<Rep>) -> Result<(), ModuleError> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_basis(m, m);
    let y = match locality(m, &end) {
        Locality::Local => {
            out.push(m.clone());
            return Ok(());
        }
        Locality::Split(x) => x,
        Locality::Unknown => search_split(m, &end, cfg).ok_or(ModuleError::NotCertified { budget: cfg.budget })?,
    };
    let (a, b) = fitting_split(m, &y);
    debug_assert!(!a.is_zero() && !b.is_zero());
    split_into(&a, cfg, out)?;
    split_into(&b, cfg, out)
}

/// Indecomposable summands grouped by isomorphism class, ordered by dimension vector.
pub fn decompose(m: &Rep, cfg: &SplitConfig) -> Result<Decomposition, ModuleError> {
    let mut parts = Vec::new();
    split_into(m, cfg, &mut parts)?;
    let mut groups: Vec<(Rep, usize)> = Vec::new();
    for part in parts {
        match groups.iter_mut().find(|(r, _)| indecomposables_isomorphic(r, &part)) {
            Some(g) => g.1 += 1,
            None => groups.push((part, 1)),
        }
    }
    groups.sort_by(|a, b| a.0.dims().cmp(b.0.dims()));
    Ok(Decomposition { summands: groups })
}

/// Exact isomorphism test for modules with local endomorphism rings: some
/// composite `g f` of basis homomorphisms must be invertible.
pub fn indecomposables_isomorphic(x: &Rep, y: &Rep) -> bool {
    x.dims() == y.dims() && is_summand_of_local(x, y)
}

/// Whether `x`, assumed to have a local endomorphism ring, is a direct summand of `g`.
pub fn is_summand_of_local(x: &Rep, g: &Rep) -> bool {
    if x.is_zero() {
        return true;
    }
    if x.dims().iter().zip(g.dims()).any(|(a, b)| a > b) {
        return false;
    }
    let to = hom_basis(x, g);
    if to.is_empty() {
        return false;
    }
    let back = hom_basis(g, x);
    to.iter().any(|f| back.iter().any(|h| h.compose(f).is_isomorphism()))
}

pub fn is_isomorphic(m: &Rep, n: &Rep, cfg: &SplitConfig) -> Result<bool, ModuleError> {
    if m.algebra() != n.algebra() {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let there = hom_basis(m, n);
    let back = hom_basis(n, m);
    if there.len() != back.len() || there.is_empty() {
        return Ok(false);
    }
    if there.iter().any(ModuleMap::is_isomorphism) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let field = m.field();
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<Scalar> = there.iter().map(|_| field.random(&mut rng, 16)).collect();
        if combine(&there, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let dm = decompose(m, cfg)?;
    let dn = decompose(n, cfg)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(false);
    }
    Ok(dm.summands.iter().all(|(x, k)| {
        dn.summands.iter().any(|(y, l)| k == l && indecomposables_isomorphic(x, y))
    }))
}

/// Whether every indecomposable summand of `x` is a summand of some generator.
pub fn add_member(x: &Rep, generators: &[Rep], cfg: &SplitConfig) -> Result<bool, ModuleError> {
    let d = decompose(x, cfg)?;
    Ok(d.summands.iter().all(|(s, _)| generators.iter().any(|g| is_summand_of_local(s, g))))
}

/// One copy of each indecomposable summand.
pub fn basic(m: &Rep, cfg: &SplitConfig) -> Result<Rep, ModuleError> {
    let d = decompose(m, cfg)?;
    let parts: Vec<Rep> = d.summands.into_iter().map(|(r, _)| r).collect();
    Ok(direct_sum(m.algebra(), &parts).module)
}
