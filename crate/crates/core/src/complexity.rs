//! Dimension sequences of minimal projective resolutions, their convolution
//! for tensor products over the ground field, and complexity estimates.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::homological::{is_injective, Engine, HomDim, Side};
use crate::module::{dual_regular, hom_basis, regular, Named};
use crate::verdict::{Verdict, Witness};

/// Below this length only finite projective dimension can be recognised.
pub const MIN_ESTIMATE_LENGTH: usize = 8;
/// Largest distance of the fitted slope from an integer still read as that integer.
pub const SLOPE_TOLERANCE: f64 = 0.25;
/// Largest residual of the log-log fit, in natural-log units.
pub const RESIDUAL_TOLERANCE: f64 = 0.1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("empty dimension sequence")]
    Empty,
    #[error("dimension sequences over different fields")]
    FieldMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimSequence {
    pub values: Vec<usize>,
    pub source: String,
    pub field: String,
    pub minimal: bool,
    /// The resolution stopped, so every later value is zero.
    pub complete: bool,
}

impl DimSequence {
    pub fn new(values: Vec<usize>, source: impl Into<String>) -> DimSequence {
        let complete = values.iter().skip(1).any(|&v| v == 0);
        DimSequence { values, source: source.into(), field: String::new(), minimal: true, complete }
    }

    /// Total dimensions of `P_0, ..., P_length` in the minimal resolution of `m`.
    pub fn of_resolution(engine: &Engine, m: &Named, length: usize) -> DimSequence {
        let res = engine.resolution(&m.rep, length);
        let mut values = res.dims();
        if res.complete {
            values.resize(length + 1, 0);
        }
        DimSequence {
            values,
            source: m.name.clone(),
            field: m.rep.field().to_string(),
            minimal: res.is_minimal(),
            complete: res.complete,
        }
    }

    /// Value at `n`, zero past the end of a complete sequence.
    pub fn get(&self, n: usize) -> Option<usize> {
        match self.values.get(n) {
            Some(&v) => Some(v),
            None if self.complete => Some(0),
            None => None,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,dimension\n");
        for (i, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{i},{v}");
        }
        out
    }
}

/// Dimension sequence of the tensor product resolution, `r_n = Σ_{i+j=n} p_i q_j`,
/// kept only as far as both inputs determine it.
pub fn tensor_dim_sequence(p: &DimSequence, q: &DimSequence) -> Result<DimSequence, SequenceError> {
    if p.values.is_empty() || q.values.is_empty() {
        return Err(SequenceError::Empty);
    }
    if !p.field.is_empty() && !q.field.is_empty() && p.field != q.field {
        return Err(SequenceError::FieldMismatch);
    }
    let len = match (p.complete, q.complete) {
        (true, true) => p.values.len() + q.values.len() - 1,
        (true, false) => q.values.len(),
        (false, true) => p.values.len(),
        (false, false) => p.values.len().min(q.values.len()),
    };
    let values = (0..len)
        .map(|n| (0..=n).map(|i| p.get(i).unwrap_or(0) * q.get(n - i).unwrap_or(0)).sum())
        .collect();
    Ok(DimSequence {
        values,
        source: format!("{} (x) {}", p.source, q.source),
        field: if p.field.is_empty() { q.field.clone() } else { p.field.clone() },
        minimal: p.minimal && q.minimal,
        complete: p.complete && q.complete,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexityKind {
    FinitePd,
    Bounded,
    PolynomialGrowth,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexityEstimate {
    pub kind: ComplexityKind,
    pub cx: Option<usize>,
    /// Index range `[start, end)` the estimate looked at.
    pub window: (usize, usize),
    pub fit_slope: Option<f64>,
}

/// Reads off `cx` from a finite window: eventually zero gives 0, a tail no
/// larger than the head gives 1, otherwise a log-log fit over the upper half.
pub fn estimate_complexity(d: &DimSequence) -> ComplexityEstimate {
    let len = d.values.len();
    let mut est = ComplexityEstimate { kind: ComplexityKind::Inconclusive, cx: None, window: (0, len), fit_slope: None };
    if d.complete || d.values.iter().skip(1).any(|&v| v == 0) {
        est.kind = ComplexityKind::FinitePd;
        est.cx = Some(0);
        return est;
    }
    if len < MIN_ESTIMATE_LENGTH {
        return est;
    }
    let half = len / 2;
    est.window = (half, len);
    let head = d.values[..half].iter().max().copied().unwrap_or(0);
    let tail = d.values[half..].iter().max().copied().unwrap_or(0);
    if tail <= head {
        est.kind = ComplexityKind::Bounded;
        est.cx = Some(1);
        return est;
    }
    let pts: Vec<(f64, f64)> =
        (half..len).map(|n| (((n + 1) as f64).ln(), (d.values[n] as f64).ln())).collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let residual = pts.iter().map(|(x, y)| (y - my - slope * (x - mx)).abs()).fold(0.0, f64::max);
    est.fit_slope = Some(slope);
    if residual <= RESIDUAL_TOLERANCE && (slope - slope.round()).abs() <= SLOPE_TOLERANCE && slope.round() >= 1.0 {
        est.kind = ComplexityKind::PolynomialGrowth;
        est.cx = Some(slope.round() as usize + 1);
    }
    est
}

/// Checks `r_n ≥ max(p_n q_0, q_n p_0) ≥ max(p_n, q_n)` on every determined
/// term, then the estimated sandwich `max(cx p, cx q) ≤ cx r ≤ cx p + cx q`.
/// Term failures fail the verdict; estimate failures only make it inconclusive.
pub fn audit_tensor_bounds(p: &DimSequence, q: &DimSequence) -> Result<Verdict, SequenceError> {
    let r = tensor_dim_sequence(p, q)?;
    let mut v = Verdict::new(format!("tensor complexity bounds for {}", r.source));
    let (p0, q0) = (p.get(0).unwrap_or(0), q.get(0).unwrap_or(0));
    for (n, &rn) in r.values.iter().enumerate() {
        let (pn, qn) = (p.get(n).unwrap_or(0), q.get(n).unwrap_or(0));
        let mid = (pn * q0).max(qn * p0);
        if rn < mid || (p0 >= 1 && q0 >= 1 && mid < pn.max(qn)) {
            let w = Witness { name: format!("term {n}"), dims: vec![rn, pn, qn] };
            v.fail(w, format!("term {n}: r = {rn}, p = {pn}, q = {qn}"));
        }
    }
    v.record("terms checked", [r.values.len()]);
    let (ep, eq, er) = (estimate_complexity(p), estimate_complexity(q), estimate_complexity(&r));
    match (ep.cx, eq.cx, er.cx) {
        (Some(a), Some(b), Some(c)) => {
            v.record("cx estimates (M, N, M (x) N)", [a, b, c]);
            if a.max(b) > c || c > a + b {
                v.undecided(format!("estimated sandwich {} <= {c} <= {} fails; estimator artifact", a.max(b), a + b));
            }
        }
        _ => v.undecided("a complexity estimate was inconclusive on this window"),
    }
    Ok(v)
}

/// If `id Λ = n ≥ 1` and `Hom_Γ(DΓ, Γ) ≠ 0`, then `Λ ⊗ Γ` has no maximal
/// `j`-orthogonal subcategory for any `j ≥ n`.
pub fn check_tensor_no_go(engine: &Engine, lambda: &Algebra, gamma: &Algebra) -> Verdict {
    let check = "tensor product no-go";
    if lambda.field() != gamma.field() {
        return Verdict::premise_not_met(check, "algebras over different fields");
    }
    let id = engine.self_injective_dim(lambda, Side::Left);
    let n = match id.finite() {
        Some(n) if n >= 1 => n,
        _ => return Verdict::premise_not_met(check, format!("id Lambda is {id}, not finite and positive")),
    };
    let hom = hom_basis(&dual_regular(gamma), &regular(gamma)).len();
    let mut v = Verdict::new(check);
    v.record("id Lambda", [n]);
    v.record("dim Hom(DGamma, Gamma)", [hom]);
    let gamma_id = engine.self_injective_dim(gamma, Side::Left);
    let selfinjective = is_injective(&regular(gamma));
    v.record("Gamma selfinjective", [selfinjective]);
    if let Some(g) = gamma_id.finite() {
        v.record("id of the tensor algebra lies in", [n.max(g), n + g]);
    }
    if selfinjective && hom == 0 {
        v.fail(Witness::from(&Named::regular(gamma)), "selfinjective algebra with Hom(DGamma, Gamma) = 0");
        return v;
    }
    if hom == 0 {
        return Verdict::premise_not_met(check, "Hom(DGamma, Gamma) = 0, no conclusion");
    }
    v.record("no maximal j-orthogonal subcategory from j", [n]);
    if gamma_id == HomDim::Finite(0) {
        v.record("id of the tensor algebra", [n]);
    }
    v
}
