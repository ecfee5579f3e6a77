//! Minimal resolutions, Ext, homological dimensions, the Auslander-Reiten
//! translate and approximations, with per-module caching.

mod approx;
mod conditions;
mod ext;
mod resolution;
mod transpose;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::module::{self, direct_sum, dual_regular, dualize, regular, Decomposition, ModuleError, Rep, SplitConfig};

pub use approx::Approximation;
pub use ext::ExtTable;
pub use resolution::{projective_cover, Coresolution, GeneratorImage, Resolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("premise violated: {0}")]
    Premise(String),
}

/// A homological dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomDim {
    Finite(usize),
    /// Certified infinite, e.g. by a repeating syzygy.
    Infinite,
    /// Not finite within the given cutoff.
    BeyondCutoff(usize),
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, HomDim::Finite(_))
    }

    pub fn is(self, n: usize) -> bool {
        self == HomDim::Finite(n)
    }

    /// `Some(self <= n)` when decidable.
    pub fn at_most(self, n: usize) -> Option<bool> {
        match self {
            HomDim::Finite(d) => Some(d <= n),
            HomDim::Infinite => Some(false),
            HomDim::BeyondCutoff(c) if c >= n => Some(false),
            HomDim::BeyondCutoff(_) => None,
        }
    }

    /// Maximum, with an uncertified cutoff dominating finite values.
    pub fn max(self, other: HomDim) -> HomDim {
        use HomDim::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (BeyondCutoff(a), BeyondCutoff(b)) => BeyondCutoff(a.min(b)),
            (BeyondCutoff(a), _) | (_, BeyondCutoff(a)) => BeyondCutoff(a),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite => f.write_str("inf"),
            HomDim::BeyondCutoff(c) => write!(f, ">{c}"),
        }
    }
}

/// Which side of the algebra a one-sided question refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The algebra whose left modules realise this side.
    pub fn algebra(self, a: &Algebra) -> Algebra {
        match self {
            Side::Left => a.clone(),
            Side::Right => a.opposite(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub seed: u64,
    /// Minimum resolution length before a dimension is reported as beyond cutoff.
    pub cutoff: usize,
    /// Sample budget for decomposition and orbit searches.
    pub budget: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { seed: 0, cutoff: 0, budget: 32 }
    }
}

impl EngineConfig {
    pub fn split(&self) -> SplitConfig {
        SplitConfig { seed: self.seed, budget: self.budget }
    }
}

/// Entry point for homological computations. Resolutions and decompositions
/// are cached per module; the engine can be shared across threads.
#[derive(Default)]
pub struct Engine {
    config: EngineConfig,
    resolutions: RwLock<HashMap<Rep, Arc<Resolution>>>,
    decompositions: RwLock<HashMap<Rep, Arc<Decomposition>>>,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Engine {
        Engine { config, ..Engine::default() }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Resolution length used to decide finiteness: `max(cutoff, 2 dim Λ)`.
    pub fn cutoff(&self, algebra: &Algebra) -> usize {
        self.config.cutoff.max(2 * algebra.dim())
    }

    /// Minimal projective resolution through `P_length` (or to its end).
    pub fn resolution(&self, m: &Rep, length: usize) -> Arc<Resolution> {
        if let Some(r) = self.resolutions.read().expect("cache poisoned").get(m) {
            if r.complete || r.terms.len() > length {
                return Arc::clone(r);
            }
        }
        let mut res = match self.resolutions.read().expect("cache poisoned").get(m) {
            Some(r) => (**r).clone(),
            None => Resolution::new(m),
        };
        res.extend_to(length);
        let res = Arc::new(res);
        let mut cache = self.resolutions.write().expect("cache poisoned");
        let keep = match cache.get(m) {
            Some(old) => old.complete || old.terms.len() >= res.terms.len(),
            None => false,
        };
        if keep {
            return Arc::clone(&cache[m]);
        }
        cache.insert(m.clone(), Arc::clone(&res));
        res
    }

    /// Minimal injective coresolution through `I^length`.
    pub fn coresolution(&self, m: &Rep, length: usize) -> Coresolution {
        let dm = dualize(m);
        Coresolution::from_dual(m, &self.resolution(&dm, length))
    }

    /// `Ω^k m`.
    pub fn syzygy(&self, m: &Rep, k: usize) -> Rep {
        if k == 0 {
            return m.clone();
        }
        let res = self.resolution(m, k - 1);
        res.syzygy(k).cloned().unwrap_or_else(|| Rep::zero(m.algebra()))
    }

    pub fn pd(&self, m: &Rep) -> HomDim {
        let cutoff = self.cutoff(m.algebra());
        let res = self.resolution(m, cutoff);
        if let Some(n) = res.finite_length() {
            return HomDim::Finite(n);
        }
        if self.has_repeating_syzygy(&res) {
            HomDim::Infinite
        } else {
            HomDim::BeyondCutoff(cutoff)
        }
    }

    fn has_repeating_syzygy(&self, res: &Resolution) -> bool {
        let syz = &res.syzygies;
        (0..syz.len()).any(|j| {
            !syz[j].is_zero()
                && (0..j).any(|i| {
                    syz[i].dims() == syz[j].dims()
                        && module::is_isomorphic(&syz[i], &syz[j], &self.config.split()).unwrap_or(false)
                })
        })
    }

    /// Injective dimension, computed as `pd` of the dual over the opposite algebra.
    pub fn id(&self, m: &Rep) -> HomDim {
        self.pd(&dualize(m))
    }

    pub fn gldim(&self, algebra: &Algebra) -> HomDim {
        (0..algebra.num_vertices())
            .map(|v| self.pd(&module::simple(algebra, v)))
            .fold(HomDim::Finite(0), HomDim::max)
    }

    /// `id` of the regular module on the given side.
    pub fn self_injective_dim(&self, algebra: &Algebra, side: Side) -> HomDim {
        self.id(&regular(&side.algebra(algebra)))
    }

    /// Least `i >= from` with `Ext^i(m, Λ) != 0`.
    fn first_nonvanishing(&self, m: &Rep, from: usize) -> HomDim {
        let alg = m.algebra();
        let (bound, certified) = match self.pd(m) {
            HomDim::Finite(d) => (d, true),
            _ => (self.cutoff(alg), false),
        };
        if bound >= from {
            let table = self.ext_dims(m, &regular(alg), bound);
            if let Some(i) = (from..=bound).find(|&i| table.values[i] != 0) {
                return HomDim::Finite(i);
            }
        }
        if certified {
            HomDim::Infinite
        } else {
            HomDim::BeyondCutoff(bound)
        }
    }

    /// `grade m = inf { i >= 0 : Ext^i(m, Λ) != 0 }`.
    pub fn grade(&self, m: &Rep) -> HomDim {
        self.first_nonvanishing(m, 0)
    }

    /// `r.grade m = inf { i >= 1 : Ext^i(m, Λ) != 0 }`.
    pub fn reduced_grade(&self, m: &Rep) -> HomDim {
        self.first_nonvanishing(m, 1)
    }

    pub fn decompose(&self, m: &Rep) -> Result<Arc<Decomposition>, ModuleError> {
        if let Some(d) = self.decompositions.read().expect("cache poisoned").get(m) {
            return Ok(Arc::clone(d));
        }
        let d = Arc::new(module::decompose(m, &self.config.split())?);
        self.decompositions.write().expect("cache poisoned").insert(m.clone(), Arc::clone(&d));
        Ok(d)
    }

    /// Indecomposable summands of all the modules, one per isomorphism class, in first-seen order.
    pub fn distinct_summands(&self, modules: &[Rep]) -> Result<Vec<Rep>, ModuleError> {
        let mut out: Vec<Rep> = Vec::new();
        for m in modules {
            for (s, _) in &self.decompose(m)?.summands {
                if !out.iter().any(|o| module::indecomposables_isomorphic(o, s)) {
                    out.push(s.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn is_isomorphic(&self, m: &Rep, n: &Rep) -> Result<bool, ModuleError> {
        module::is_isomorphic(m, n, &self.config.split())
    }

    /// Whether every indecomposable summand of `x` is a summand of some generator.
    pub fn add_member(&self, x: &Rep, generators: &[Rep]) -> Result<bool, ModuleError> {
        let d = self.decompose(x)?;
        Ok(d.summands.iter().all(|(s, _)| generators.iter().any(|g| module::is_summand_of_local(s, g))))
    }

    pub fn basic(&self, m: &Rep) -> Result<Rep, ModuleError> {
        let d = self.decompose(m)?;
        let parts: Vec<Rep> = d.summands.iter().map(|(r, _)| r.clone()).collect();
        Ok(direct_sum(m.algebra(), &parts).module)
    }

    /// Splits `m` into its projective-free part and its projective summands.
    pub fn split_projectives(&self, m: &Rep) -> Result<(Rep, Vec<Rep>), ModuleError> {
        let d = self.decompose(m)?;
        let (proj, rest): (Vec<Rep>, Vec<Rep>) = d.expanded().into_iter().partition(is_projective);
        Ok((direct_sum(m.algebra(), &rest).module, proj))
    }

    /// `DΛ` and `Λ` for the algebra, as left modules.
    pub fn regular_pair(&self, algebra: &Algebra) -> (Rep, Rep) {
        (regular(algebra), dual_regular(algebra))
    }
}

/// Projective iff the projective cover is an isomorphism, detected by dimensions.
pub fn is_projective(m: &Rep) -> bool {
    let alg = m.algebra();
    let top = m.top_dims();
    let mut dims = vec![0; alg.num_vertices()];
    for (v, &t) in top.iter().enumerate() {
        for (w, d) in dims.iter_mut().enumerate() {
            *d += t * alg.paths(v, w).len();
        }
    }
    dims == m.dims()
}

pub fn is_injective(m: &Rep) -> bool {
    is_projective(&dualize(m))
}

/// A name for an indecomposable in the symbolic module grammar when one
/// applies (`S(v)`, `P(v)`, `I(v)`), else its dimension vector.
pub fn describe(m: &Rep) -> String {
    let alg = m.algebra();
    if m.is_zero() {
        return "0".to_string();
    }
    let single = |dims: &[usize]| {
        let mut it = dims.iter().enumerate().filter(|(_, &d)| d > 0);
        match (it.next(), it.next()) {
            (Some((v, 1)), None) => Some(v),
            _ => None,
        }
    };
    if let Some(v) = single(m.dims()) {
        return format!("S({})", alg.vertex_label(v));
    }
    if is_projective(m) {
        if let Some(v) = single(&m.top_dims()) {
            return format!("P({})", alg.vertex_label(v));
        }
    }
    if is_injective(m) {
        if let Some(v) = single(&m.socle_dims()) {
            return format!("I({})", alg.vertex_label(v));
        }
    }
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    format!("M({})", dims.join(","))
}
