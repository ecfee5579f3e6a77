//! Cotilting modules, `add T`-coresolutions and `Ω^n τ`-orbits.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::homological::{describe, is_projective, AnalysisError, Engine, HomDim, Side};
use crate::module::{dual_regular, regular, ModuleMap, Named, Rep};
use crate::verdict::{Outcome, Verdict, Witness};

/// `Ext^i(m, t) = 0` for `1 ≤ i ≤ id t`; higher degrees vanish since `id t` bounds them.
pub fn in_perp_t(engine: &Engine, m: &Rep, t: &Rep) -> Result<bool, AnalysisError> {
    let bound = match engine.id(t) {
        HomDim::Finite(d) => d,
        other => return Err(AnalysisError::Undecided(format!("id of the test module is {other}"))),
    };
    Ok(bound == 0 || engine.ext_dims(m, t, bound).vanishes(1..=bound))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CotiltingStatus {
    Cotilting,
    NotCotilting,
    UndecidedAtDepth(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CotiltingReport {
    pub module: String,
    pub dims: Vec<usize>,
    pub id: HomDim,
    pub self_orthogonal: bool,
    pub first_failing_degree: Option<usize>,
    /// `DΛ ∈ add-T-hat`; `None` when the search was cut off.
    pub cogenerates: Option<bool>,
    /// Number of approximation steps used on `DΛ`.
    pub depth: usize,
    pub status: CotiltingStatus,
}

/// Tests the three cotilting conditions. `DΛ ∈ add-T-hat` is decided by
/// iterated minimal right `add T`-approximations, at most `id T + 2` deep.
pub fn check_cotilting(engine: &Engine, t: &Named) -> CotiltingReport {
    let alg = t.rep.algebra();
    let id = engine.id(&t.rep);
    let mut report = CotiltingReport {
        module: t.name.clone(),
        dims: t.rep.dims().to_vec(),
        id,
        self_orthogonal: false,
        first_failing_degree: None,
        cogenerates: None,
        depth: 0,
        status: CotiltingStatus::NotCotilting,
    };
    let n = match id {
        HomDim::Finite(n) => n,
        HomDim::Infinite => return report,
        HomDim::BeyondCutoff(c) => {
            report.status = CotiltingStatus::UndecidedAtDepth(c);
            return report;
        }
    };
    let ext = engine.ext_dims(&t.rep, &t.rep, n);
    report.first_failing_degree = (1..=n).find(|&i| ext.get(i) != 0);
    report.self_orthogonal = report.first_failing_degree.is_none();

    let bound = n + 2;
    let gens = [t.rep.clone()];
    let mut x = dual_regular(alg);
    let mut verdict = None;
    while report.depth < bound {
        report.depth += 1;
        let approx = match engine.minimal_right_approximation(&x, &gens) {
            Ok(a) => a,
            Err(_) => break,
        };
        if !approx.map.is_surjective() {
            verdict = Some(false);
            break;
        }
        x = approx.map.kernel().0;
        if x.is_zero() {
            verdict = Some(true);
            break;
        }
    }
    report.cogenerates = verdict;
    report.status = match verdict {
        Some(true) if report.self_orthogonal => CotiltingStatus::Cotilting,
        None if report.self_orthogonal => CotiltingStatus::UndecidedAtDepth(bound),
        _ => CotiltingStatus::NotCotilting,
    };
    report
}

/// `0 -> M -> T_0 -> ... -> T_k -> 0` with every `T_i ∈ add T`.
#[derive(Clone, Debug)]
pub struct AddCoresolution {
    pub terms: Vec<Rep>,
    /// `maps[0]` is `M -> T_0`, then `T_{i-1} -> T_i`.
    pub maps: Vec<ModuleMap>,
    /// `Coker` of `maps[i]`, the last one zero.
    pub cokernels: Vec<Rep>,
}

impl AddCoresolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

/// Builds the `add T`-coresolution of `m ∈ ⊥T` from minimal left approximations;
/// its length is at most `id m`.
pub fn cotilting_coresolution(engine: &Engine, m: &Rep, t: &Named) -> Result<AddCoresolution, AnalysisError> {
    let report = check_cotilting(engine, t);
    if report.status != CotiltingStatus::Cotilting {
        return Err(AnalysisError::Premise(format!("{} is not certified cotilting", t.name)));
    }
    if !in_perp_t(engine, m, &t.rep)? {
        return Err(AnalysisError::Premise("module is not in the left perpendicular of T".into()));
    }
    let Some(id) = engine.id(m).finite() else {
        return Err(AnalysisError::Premise("module has no finite injective dimension".into()));
    };
    let gens = [t.rep.clone()];
    let mut out = AddCoresolution { terms: Vec::new(), maps: Vec::new(), cokernels: Vec::new() };
    let mut x = m.clone();
    let mut prev: Option<ModuleMap> = None;
    for _ in 0..=id + 1 {
        if x.is_zero() {
            return Ok(out);
        }
        let approx = engine.minimal_left_approximation(&x, &gens)?;
        if !approx.map.is_injective() {
            return Err(AnalysisError::Premise("left approximation is not monic".into()));
        }
        let (coker, proj) = approx.map.cokernel();
        if !coker.is_zero() && !in_perp_t(engine, &coker, &t.rep)? {
            return Err(AnalysisError::Premise("a cokernel left the left perpendicular of T".into()));
        }
        let step = match prev.take() {
            Some(p) => approx.map.compose(&p),
            None => approx.map.clone(),
        };
        out.terms.push(approx.map.target.clone());
        out.maps.push(step);
        out.cokernels.push(coker.clone());
        prev = Some(proj);
        x = coker;
    }
    Err(AnalysisError::Undecided(format!("coresolution did not stop within {} steps", id + 2)))
}

/// For `id Λ = n ≥ 1` and a cotilting `T ∈ ⊥_n Λ`: `id Λ` over the opposite
/// algebra is `n` and `T` has the same basic module as `Λ`.
pub fn check_cotilting_symmetry(engine: &Engine, alg: &Algebra, t: &Named) -> Result<Verdict, AnalysisError> {
    let check = format!("cotilting symmetry for {}", t.name);
    let Some(n) = engine.self_injective_dim(alg, Side::Left).finite() else {
        return Ok(Verdict::premise_not_met(check, "id Lambda is not finite"));
    };
    let report = check_cotilting(engine, t);
    if report.status != CotiltingStatus::Cotilting {
        return Ok(Verdict::premise_not_met(check, format!("{} is not certified cotilting", t.name)));
    }
    let lam = regular(alg);
    let ext = engine.ext_dims(&t.rep, &lam, n);
    if n > 0 && !ext.vanishes(1..=n) {
        return Ok(Verdict::premise_not_met(check, format!("Ext^i({}, Lambda) = {:?} for i = 0..={n}", t.name, ext.values)));
    }
    let mut v = Verdict::new(check);
    if n == 0 {
        v.note("selfinjective case");
    }
    let right = engine.self_injective_dim(alg, Side::Right);
    v.record("id Lambda", [HomDim::Finite(n)]);
    v.record("id Lambda over the opposite algebra", [right]);
    if !right.is(n) {
        v.fail(Witness::from(&Named::regular(alg)), "injective dimensions of Lambda on the two sides differ");
    }
    let (tb, lb) = (engine.basic(&t.rep)?, engine.basic(&lam)?);
    let same = engine.is_isomorphic(&tb, &lb)?;
    v.record("basic T isomorphic to basic Lambda", [same]);
    if !same {
        v.fail(Witness::from(t), "basic module differs from that of Lambda");
    }
    if v.failed() {
        v.note("this contradicts a proven statement and signals an implementation fault");
    }
    Ok(v)
}

fn gorenstein_dim(engine: &Engine, alg: &Algebra) -> Option<usize> {
    let l = engine.self_injective_dim(alg, Side::Left);
    let r = engine.self_injective_dim(alg, Side::Right);
    l.finite().filter(|_| l == r)
}

/// Over a Gorenstein algebra with `m, n ∈ ⊥Λ`:
/// `dim Ext^i(m, n) = dim Ext^1(n, Ω^i τ m)`, using the projective-free part of `m`.
pub fn ext_tau_duality_identity(
    engine: &Engine,
    alg: &Algebra,
    m: &Named,
    n: &Named,
    i: usize,
) -> Result<Verdict, AnalysisError> {
    let check = format!("Ext-tau duality for ({}, {}) in degree {i}", m.name, n.name);
    if i == 0 {
        return Ok(Verdict::premise_not_met(check, "degree must be at least 1"));
    }
    if gorenstein_dim(engine, alg).is_none() {
        return Ok(Verdict::premise_not_met(check, "algebra is not Gorenstein"));
    }
    let lam = regular(alg);
    for x in [m, n] {
        if !in_perp_t(engine, &x.rep, &lam)? {
            return Ok(Verdict::premise_not_met(check, format!("{} is not in the left perpendicular of Lambda", x.name)));
        }
    }
    let (free, _) = engine.split_projectives(&m.rep)?;
    let shifted = engine.syzygy(&engine.ar_translate(&free), i);
    let lhs = engine.ext(&free, &n.rep, i);
    let rhs = engine.ext(&n.rep, &shifted, 1);
    let mut v = Verdict::new(check);
    v.record("dim Ext^i(M, N), dim Ext^1(N, Omega^i tau M)", [lhs, rhs]);
    if lhs != rhs {
        v.fail(Witness::from(m), format!("{lhs} != {rhs}"));
    }
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub start: Rep,
    /// Projective-free iterates, `steps[0]` the projective-free part of the start.
    pub steps: Vec<Rep>,
    /// Projective summands split off at each step.
    pub split_off: Vec<Vec<Rep>>,
    pub period: Option<usize>,
    /// The start has no non-projective part.
    pub degenerate: bool,
    pub budget: usize,
}

/// Iterates `M ↦ Ω^n τ M` on projective-free parts until an iterate is isomorphic
/// to the start or the budget is spent.
pub fn omega_n_tau_orbit(engine: &Engine, x: &Rep, n: usize, budget: usize) -> Result<OrbitReport, AnalysisError> {
    let alg = x.algebra();
    if gorenstein_dim(engine, alg).is_some() && !in_perp_t(engine, x, &regular(alg))? {
        return Err(AnalysisError::Premise("module is not in the left perpendicular of Lambda".into()));
    }
    let (start, proj) = engine.split_projectives(x)?;
    let mut report = OrbitReport {
        start: x.clone(),
        steps: vec![start.clone()],
        split_off: vec![proj],
        period: None,
        degenerate: start.is_zero(),
        budget,
    };
    if report.degenerate {
        return Ok(report);
    }
    let mut cur = start.clone();
    for t in 1..=budget {
        let next = engine.syzygy(&engine.ar_translate(&cur), n);
        let (free, proj) = engine.split_projectives(&next)?;
        report.steps.push(free.clone());
        report.split_off.push(proj);
        if engine.is_isomorphic(&free, &start)? {
            report.period = Some(t);
            break;
        }
        if free.is_zero() {
            break;
        }
        cur = free;
    }
    Ok(report)
}

/// `Ω^n τ` maps every non-projective summand of the generators back into their `add`.
pub fn check_orbit_closure(engine: &Engine, generators: &[Named], n: usize) -> Result<Verdict, AnalysisError> {
    let mut v = Verdict::new(format!("Omega^{n} tau closure"));
    let gens: Vec<Rep> = generators.iter().map(|g| g.rep.clone()).collect();
    for y in engine.distinct_summands(&gens)? {
        if is_projective(&y) {
            continue;
        }
        let image = engine.syzygy(&engine.ar_translate(&y), n);
        let inside = engine.add_member(&image, &gens)?;
        v.record(format!("{} maps into add", describe(&y)), [inside]);
        if !inside {
            v.fail(Witness::from(&Named::new(describe(&y), y.clone())), "image leaves add of the generators");
        }
    }
    if v.outcome == Outcome::Pass && v.evidence.is_empty() {
        v.note("all summands are projective");
    }
    Ok(v)
}

#[cfg(test)]
mod tests;
