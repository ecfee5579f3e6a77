//! One pass/fail line per acceptance criterion. Runs without the default test
//! harness so the lines are always printed; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use common::{alg, alg_f2, all_f2_modules, brute_force_hom_count, engine, fixture_algebras, sample_modules};
use quiverhom::complexity::{
    audit_tensor_bounds, check_tensor_no_go, estimate_complexity, tensor_dim_sequence, ComplexityKind, DimSequence,
    MIN_ESTIMATE_LENGTH, RESIDUAL_TOLERANCE, SLOPE_TOLERANCE,
};
use quiverhom::cotilting::{check_cotilting, check_cotilting_symmetry, ext_tau_duality_identity, omega_n_tau_orbit, CotiltingStatus};
use quiverhom::fixtures;
use quiverhom::homological::{is_injective, HomDim, Side};
use quiverhom::module::{dual_regular, dualize, hom_basis, injective, projective, regular, simple, Named};
use quiverhom::orthogonal::{
    check_almost_hereditary_criterion, check_maximal_orthogonal, check_trivial_maximal, standard_ambient, Provenance,
    SubcategorySpec,
};
use quiverhom::verdict::{Outcome, Value};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fin(n: usize) -> HomDim {
    HomDim::Finite(n)
}

fn criterion_1() -> Check {
    let e = engine();
    for n in 2..=4 {
        let a = alg(&fixtures::linear_radical_square_zero(n));
        let v = e.check_n_auslander(&a, n - 1);
        ensure!(v.outcome == Outcome::Pass, "n = {n}: not {}-Auslander: {v}", n - 1);
        ensure!(e.gldim(&a) == fin(n), "n = {n}: gl.dim {}", e.gldim(&a));
        let sn = simple(&a, n - 1);
        ensure!(e.pd(&sn) == fin(n - 1), "n = {n}: pd S(n) = {}", e.pd(&sn));
        ensure!(e.id(&projective(&a, 0)) == fin(n), "n = {n}: id P(1) = {}", e.id(&projective(&a, 0)));
        ensure!(hom_basis(&sn, &projective(&a, 0)).is_empty(), "n = {n}: Hom(S(n), P(1)) != 0");
        ensure!(e.id(&sn) == fin(1), "n = {n}: id S(n) = {}", e.id(&sn));
        let band = |d: HomDim| d.finite().is_some_and(|d| (1..n).contains(&d));
        let pd_band: Vec<usize> = (0..=n).filter(|&v| band(e.pd(&simple(&a, v)))).collect();
        let id_band: Vec<usize> = (0..=n).filter(|&v| band(e.id(&simple(&a, v)))).collect();
        let expected: Vec<usize> = (1..n).collect();
        ensure!(pd_band == expected, "n = {n}: pd band {pd_band:?}");
        ensure!(id_band == expected, "n = {n}: id band {id_band:?}");
        let last = simple(&a, n);
        ensure!(e.pd(&last) == fin(n), "n = {n}: pd S(n+1) = {}", e.pd(&last));
        ensure!(e.is_isomorphic(&last, &injective(&a, n)).unwrap(), "n = {n}: S(n+1) not isomorphic to I(n+1)");
    }
    Ok("n = 2, 3, 4 all exact".into())
}

fn criterion_2() -> Check {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    let gens = vec![Named::projective(&a, 0), Named::projective(&a, 1), Named::projective(&a, 2), Named::simple(&a, 2)];
    let full = SubcategorySpec::nakayama("P(1)+P(2)+P(3)+S(3)", &a, gens.clone()).unwrap();
    let v = check_maximal_orthogonal(&e, &full, 1).unwrap();
    ensure!(v.outcome == Outcome::Pass, "full generator set: {v}");
    let mut failures = 0;
    for mask in 1u32..15 {
        let subset: Vec<Named> = gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, g)| g.clone()).collect();
        let subcat = SubcategorySpec::nakayama(format!("subset {mask:04b}"), &a, subset).unwrap();
        let v = check_maximal_orthogonal(&e, &subcat, 1).unwrap();
        ensure!(v.failed() && !v.witnesses.is_empty(), "proper subset {mask:04b} did not fail with a witness: {v}");
        failures += 1;
    }
    let rg = e.reduced_grade(&simple(&a, 2));
    ensure!(rg == fin(2), "r.grade S(3) = {rg}");
    Ok(format!("full set passes, {failures}/14 proper subsets fail, r.grade S(3) = 2"))
}

fn criterion_3() -> Check {
    let e = engine();
    let a = alg(fixtures::COMMUTATIVE_SQUARE);
    let s3 = simple(&a, 2);
    ensure!(e.pd(&s3) == fin(1), "pd S(3) = {}", e.pd(&s3));
    ensure!(e.id(&s3) == fin(2), "id S(3) = {}", e.id(&s3));
    for v in 3..6 {
        ensure!(is_injective(&projective(&a, v)), "P({}) not injective", v + 1);
    }
    for v in 0..3 {
        let p = projective(&a, v);
        ensure!(e.id(&p) == fin(2), "id P({}) = {}", v + 1, e.id(&p));
        ensure!(hom_basis(&s3, &p).is_empty(), "Hom(S(3), P({})) != 0", v + 1);
    }
    let ext = e.ext(&dual_regular(&a), &regular(&a), 1);
    ensure!(ext == 0, "Ext^1(DLambda, Lambda) = {ext}");
    for v in [3, 4] {
        let s = simple(&a, v);
        ensure!(e.reduced_grade(&s) == fin(2), "r.grade S({}) = {}", v + 1, e.reduced_grade(&s));
        ensure!(!is_injective(&s), "S({}) is injective", v + 1);
    }
    for v in 0..6 {
        let s = simple(&a, v);
        ensure!(!(e.pd(&s) == fin(2) && e.id(&s) == fin(2)), "S({}) has pd = id = 2", v + 1);
    }
    let ah = check_almost_hereditary_criterion(&e, &a, &standard_ambient(&a), Provenance::UserSupplied).unwrap();
    let names: Vec<&str> = ah.witnesses.iter().map(|w| w.name.as_str()).collect();
    ensure!(ah.failed() && (names.contains(&"S(4)") || names.contains(&"S(5)")), "almost hereditary criterion: {ah}");
    let t = check_trivial_maximal(&e, &a, 2).unwrap();
    ensure!(t.failed(), "trivial maximal: {t}");
    ensure!(t.value("trivial route") == Some(&Value::Bool(false)), "trivial route not blocked: {t}");
    ensure!(t.value("nontrivial route") == Some(&Value::Bool(false)), "nontrivial route not blocked: {t}");
    Ok(format!("almost hereditary fails with {}, both routes blocked", names.join(", ")))
}

fn criterion_4() -> Check {
    let e = engine();
    let mut checked = Vec::new();
    let mut excluded = Vec::new();
    for (name, a) in fixture_algebras() {
        let id = e.self_injective_dim(&a, Side::Left);
        let v = e.check_cogenerator_ext(&a);
        match id.finite() {
            Some(n) if n >= 1 => {
                ensure!(v.outcome == Outcome::Pass, "{name}: {v}");
                ensure!(e.ext(&dual_regular(&a), &regular(&a), n) != 0, "{name}: Ext^{n}(DLambda, Lambda) = 0");
                checked.push(format!("{name} (n = {n})"));
            }
            _ => {
                ensure!(v.outcome == Outcome::PremiseNotMet, "{name}: id {id} but verdict {v}");
                excluded.push(format!("{name} (id {id})"));
            }
        }
    }
    let d = alg(fixtures::DUAL_NUMBERS);
    ensure!(e.self_injective_dim(&d, Side::Left) == fin(0), "dual numbers are not selfinjective");
    Ok(format!("nonvanishing on {}; outside the premise: {}", checked.join(", "), excluded.join(", ")))
}

fn criterion_5() -> Check {
    let e = engine();
    let mut triples = 0;
    let mut resolved = 0;
    for (name, a) in fixture_algebras() {
        let pool = sample_modules(&a);
        let simples: Vec<_> = (0..a.num_vertices()).map(|v| simple(&a, v)).collect();
        for m in &pool {
            let res = e.resolution(&m.rep, 5);
            for k in 1..res.differentials.len() {
                let (_, to_top) = res.terms[k - 1].rep.top();
                ensure!(to_top.compose(&res.differentials[k]).is_zero(), "{name}: d_{k} of {} leaves the radical", m.name);
            }
            for (v, s) in simples.iter().enumerate() {
                let inj = e.ext_via_injective(&m.rep, s, 3);
                for k in 0..=3.min(res.terms.len().saturating_sub(1)) {
                    ensure!(res.multiplicities(k)[v] == inj.get(k), "{name}: multiplicity of P({}) in P_{k} of {}", v + 1, m.name);
                }
            }
            resolved += 1;
            if let Some(n) = e.pd(&m.rep).finite() {
                let top = e.check_top_ext_nonvanishing(m);
                ensure!(top.outcome == Outcome::Pass, "{name}: top Ext vanishes for {} with pd {n}", m.name);
            }
            for n in &pool {
                let p = e.ext_dims(&m.rep, &n.rep, 3);
                let q = e.ext_via_injective(&m.rep, &n.rep, 3);
                ensure!(p.values == q.values, "{name}: Ext({}, {}) {:?} vs {:?}", m.name, n.name, p.values, q.values);
                triples += 3;
                let (dm, dn) = (dualize(&m.rep), dualize(&n.rep));
                ensure!(
                    hom_basis(&m.rep, &n.rep).len() == hom_basis(&dn, &dm).len(),
                    "{name}: Hom({}, {}) not transported by duality",
                    m.name,
                    n.name
                );
                for i in 1..=2 {
                    ensure!(e.ext(&m.rep, &n.rep, i) == e.ext(&dn, &dm, i), "{name}: Ext^{i} not transported by duality");
                }
            }
            ensure!(e.pd(&m.rep) == e.id(&dualize(&m.rep)), "{name}: pd {} != id of its dual", m.name);
        }
    }
    ensure!(triples >= 50, "only {triples} Ext triples");

    let mut pairs = 0;
    for text in [fixtures::HEREDITARY_A2, fixtures::DUAL_NUMBERS] {
        let a = alg_f2(text);
        let mods = all_f2_modules(&a, 3);
        for m in &mods {
            for n in &mods {
                if m.total_dim() + n.total_dim() > 4 {
                    continue;
                }
                let brute = brute_force_hom_count(m, n);
                let exact = 1u64 << hom_basis(m, n).len();
                ensure!(brute == exact, "F2 Hom between {:?} and {:?}: brute {brute}, engine {exact}", m.dims(), n.dims());
                pairs += 1;
            }
        }
    }

    let mut applicable = Vec::new();
    for (name, a) in fixture_algebras() {
        for (role, v) in [("no common summand", e.no_common_summand_check(&a)), ("socle placement", e.check_simple_socle_placement(&a))] {
            ensure!(!v.failed(), "{name}: {role}: {v}");
            if v.outcome == Outcome::Pass {
                applicable.push(role);
            }
        }
    }
    ensure!(applicable.contains(&"no common summand") && applicable.contains(&"socle placement"), "no applicable fixture");
    for n in 2..=4 {
        let a = alg(&fixtures::linear_radical_square_zero(n));
        let v = e.check_injective_simple_band(&a, n);
        ensure!(v.outcome == Outcome::Pass, "band check n = {n}: {v}");
    }
    let a = alg(fixtures::LINEAR_N2);
    let c = [Named::regular(&a), Named::dual_regular(&a)];
    for x in sample_modules(&a) {
        let v = e.check_approximation_cokernel(&x, &c).unwrap();
        ensure!(v.outcome == Outcome::Pass, "approximation cokernel for {}: {v}", x.name);
    }
    Ok(format!("{resolved} resolutions minimal, {triples} Ext triples balanced, {pairs} F2 Hom pairs brute-forced"))
}

fn criterion_6() -> Check {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    for t in [Named::dual_regular(&a), Named::regular(&a)] {
        let r = check_cotilting(&e, &t);
        ensure!(r.status == CotiltingStatus::Cotilting, "{} not cotilting: {r:?}", t.name);
    }
    let v = check_cotilting_symmetry(&e, &a, &Named::regular(&a)).unwrap();
    ensure!(v.outcome == Outcome::Pass, "{v}");
    ensure!(v.value("id Lambda over the opposite algebra") == Some(&Value::Dim(fin(2))), "{v}");
    ensure!(v.value("basic T isomorphic to basic Lambda") == Some(&Value::Bool(true)), "{v}");
    let d = alg(fixtures::DUAL_NUMBERS);
    let mods = [Named::simple(&d, 0), Named::regular(&d)];
    let mut identities = 0;
    for m in &mods {
        for n in &mods {
            for i in 1..=3 {
                let v = ext_tau_duality_identity(&e, &d, m, n, i).unwrap();
                ensure!(v.outcome == Outcome::Pass, "{v}");
                identities += 1;
            }
        }
    }
    let o = omega_n_tau_orbit(&e, &simple(&d, 0), 1, 8).unwrap();
    ensure!(o.period == Some(1), "orbit period {:?}", o.period);
    Ok(format!("both cotilting, opposite id 2, {identities} duality identities, orbit period 1"))
}

fn criterion_7() -> Check {
    let one = DimSequence::new(vec![1; 16], "constant");
    let conv = tensor_dim_sequence(&one, &one).unwrap();
    ensure!(conv.values.len() == 16, "convolution length {}", conv.values.len());
    for (n, &r) in conv.values.iter().enumerate() {
        ensure!(r == n + 1, "term {n} is {r}");
    }
    let c = estimate_complexity(&one);
    ensure!(c.kind == ComplexityKind::Bounded && c.cx == Some(1), "constant: {c:?}");
    let linear = DimSequence::new((1..=16).collect(), "linear");
    let l = estimate_complexity(&linear);
    ensure!(l.kind == ComplexityKind::PolynomialGrowth && l.cx == Some(2), "linear: {l:?}");
    let slope = l.fit_slope.unwrap();
    let audit = audit_tensor_bounds(&one, &one).unwrap();
    ensure!(audit.outcome == Outcome::Pass, "{audit}");
    let cx: Vec<Value> = [1, 1, 2].map(Value::Int).into();
    ensure!(audit.values("cx estimates (M, N, M (x) N)") == Some(cx.as_slice()), "{audit}");
    let e = engine();
    let lambda = alg(fixtures::LINEAR_N2);
    let gamma = alg(fixtures::DUAL_NUMBERS);
    let v = check_tensor_no_go(&e, &lambda, &gamma);
    ensure!(v.outcome == Outcome::Pass, "{v}");
    let from = match v.value("no maximal j-orthogonal subcategory from j") {
        Some(Value::Int(x)) => *x,
        other => return Err(format!("no-go bound missing: {other:?}")),
    };
    ensure!(from == 2, "no-go starts at j = {from}");
    Ok(format!(
        "fit slope {slope:.4} (slope tol {SLOPE_TOLERANCE}, residual tol {RESIDUAL_TOLERANCE}, min length {MIN_ESTIMATE_LENGTH}), sandwich 1 <= 2 <= 2, no-go from j = 2"
    ))
}

fn criterion_8() -> Check {
    let e = engine();
    let d = alg(fixtures::DUAL_NUMBERS);
    let subcat = SubcategorySpec::new(
        "add Lambda",
        vec![Named::regular(&d)],
        vec![Named::regular(&d), Named::simple(&d, 0)],
        Provenance::UserSupplied,
    );
    let v = check_maximal_orthogonal(&e, &subcat, 1).unwrap();
    ensure!(v.failed() && v.witnesses.iter().any(|w| w.name == "S(1)"), "{v}");
    let h = alg(fixtures::HEREDITARY_A2);
    let inds = standard_ambient(&h);
    ensure!(inds.len() == 3, "A2 has {} standard indecomposables", inds.len());
    for mask in 1u32..8 {
        let gens: Vec<Named> = inds.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, g)| g.clone()).collect();
        let subcat = SubcategorySpec::new(format!("subset {mask:03b}"), gens, inds.clone(), Provenance::UserSupplied);
        let v = check_maximal_orthogonal(&e, &subcat, 1).unwrap();
        ensure!(!v.passed(), "A2 generator subset {mask:03b} passed: {v}");
    }
    ensure!(e.self_injective_dim(&h, Side::Left) == fin(1), "id of A2 is not 1");
    Ok("dual numbers witness S(1); 7/7 A2 generator sets fail".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("radical square zero family", criterion_1),
        ("maximal 1-orthogonal subcategory of A3", criterion_2),
        ("commutative square with tail", criterion_3),
        ("top Ext of DLambda against Lambda", criterion_4),
        ("homological engine suites", criterion_5),
        ("cotilting suite", criterion_6),
        ("tensor complexity suite", criterion_7),
        ("negative controls", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
