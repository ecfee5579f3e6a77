use std::path::Path;

use anyhow::{anyhow, Context};
use quiverhom::algebra::{parse_field_name, Algebra};
use quiverhom::complexity::{audit_tensor_bounds, estimate_complexity, tensor_dim_sequence, ComplexityEstimate, DimSequence};
use quiverhom::cotilting::{check_cotilting, check_cotilting_symmetry, omega_n_tau_orbit, CotiltingStatus};
use quiverhom::homological::{describe, AnalysisError, Engine, EngineConfig, Side};
use quiverhom::input::Document;
use quiverhom::module::{is_uniserial, ModuleError, Named};
use quiverhom::orthogonal::{
    check_almost_hereditary_criterion, check_maximal_orthogonal, check_trivial_maximal, classify_simples, nakayama_ambient,
    standard_ambient, Provenance, SubcategorySpec,
};
use quiverhom::verdict::{Outcome, Verdict, Witness};

use crate::report::{AlgebraSummary, Report};
use crate::{Cli, Command, SubcategoryArgs};

pub enum Failure {
    Input(anyhow::Error),
    Undecided(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Undecided(why) => Failure::Undecided(why),
            AnalysisError::Module(m) => m.into(),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<ModuleError> for Failure {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::NotCertified { .. } => Failure::Undecided(e.to_string()),
            other => Failure::Input(other.into()),
        }
    }
}

type Run = Result<Report, Failure>;

struct Ctx {
    engine: Engine,
    field: Option<quiverhom::linalg::FieldSpec>,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Document, Failure> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Document::parse_with_field(&text, self.field).map_err(|e| anyhow!("{}: {e}", path.display()).into())
    }
}

fn module(doc: &Document, expr: &str) -> Result<Named, Failure> {
    doc.module(expr).map_err(|e| anyhow!("in module expression `{expr}`: {e}").into())
}

fn is_nakayama(alg: &Algebra) -> bool {
    (0..alg.num_vertices()).all(|v| {
        is_uniserial(&quiverhom::module::projective(alg, v)) && is_uniserial(&quiverhom::module::injective(alg, v))
    })
}

/// `nakayama`, `standard`, an expression list, or by default the Nakayama
/// enumeration when it applies and the standard list otherwise.
fn ambient(doc: &Document, text: Option<&str>) -> Result<(Vec<Named>, Provenance), Failure> {
    let alg = &doc.algebra;
    match text.map(str::trim) {
        Some("nakayama") => Ok((nakayama_ambient(alg)?, Provenance::NakayamaEnumerated)),
        Some("standard") => Ok((standard_ambient(alg), Provenance::UserSupplied)),
        Some(list) => Ok((
            doc.expression_terms(list, 1, 1).map_err(|e| anyhow!("in ambient `{list}`: {e}"))?,
            Provenance::UserSupplied,
        )),
        None if is_nakayama(alg) => Ok((nakayama_ambient(alg)?, Provenance::NakayamaEnumerated)),
        None => Ok((standard_ambient(alg), Provenance::UserSupplied)),
    }
}

fn subcategory(doc: &Document, args: &SubcategoryArgs) -> Result<Option<SubcategorySpec>, Failure> {
    if let Some(name) = &args.subcategory {
        let decl = doc.subcategory_named(name).ok_or_else(|| anyhow!("no subcategory named `{name}` in the input"))?;
        let mut subcat = decl.to_subcategory(&doc.algebra).map_err(|e| anyhow!("{e}"))?;
        if args.ambient.is_some() {
            (subcat.ambient, subcat.provenance) = ambient(doc, args.ambient.as_deref())?;
        }
        return Ok(Some(subcat));
    }
    let Some(expr) = &args.generators else { return Ok(None) };
    let generators = doc.expression_terms(expr, 1, 1).map_err(|e| anyhow!("in generators `{expr}`: {e}"))?;
    let (amb, provenance) = ambient(doc, args.ambient.as_deref())?;
    Ok(Some(SubcategorySpec::new(format!("add({expr})"), generators, amb, provenance)))
}

fn estimate_fact(report: &mut Report, label: &str, e: &ComplexityEstimate) {
    let kind = serde_json::to_value(e.kind).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    report.fact(format!("complexity kind of {label}"), [kind.as_str()]);
    if let Some(cx) = e.cx {
        report.fact(format!("cx estimate of {label}"), [cx]);
    }
    report.fact(format!("estimate window of {label}"), [e.window.0, e.window.1]);
    if let Some(s) = e.fit_slope {
        report.fact(format!("fitted log-log slope of {label}"), [s]);
    }
}

pub fn run(cli: &Cli, argv: Vec<String>) -> Run {
    let field = match &cli.field {
        Some(f) => Some(parse_field_name(f).ok_or_else(|| anyhow!("unknown field `{f}`; expected Q or F<prime>"))?),
        None => None,
    };
    let ctx = Ctx {
        engine: Engine::new(EngineConfig { seed: cli.seed, cutoff: cli.cutoff, budget: cli.budget }),
        field,
    };
    let e = &ctx.engine;
    let mut report = Report::new(std::iter::once("quiverhom".to_string()).chain(argv).collect());
    match &cli.command {
        Command::Summary(input) => {
            let doc = ctx.load(&input.file)?;
            report.algebra = Some(AlgebraSummary::of(e, &doc.algebra));
        }
        Command::Resolve { input, module: expr, length } => {
            let doc = ctx.load(&input.file)?;
            let m = module(&doc, expr)?;
            let res = e.resolution(&m.rep, *length);
            report.fact(format!("term dimensions of the resolution of {}", m.name), res.dims());
            for k in 0..res.terms.len() {
                report.fact(format!("P_{k} multiplicities"), res.multiplicities(k));
            }
            report.fact("resolution length", [res.length()]);
            report.fact("terminated", [res.complete]);
            report.fact("minimal", [res.is_minimal()]);
            report.fact(format!("pd {}", m.name), [e.pd(&m.rep)]);
        }
        Command::Ext { input, from, to, max } => {
            let doc = ctx.load(&input.file)?;
            let (m, n) = (module(&doc, from)?, module(&doc, to)?);
            let table = e.ext_dims(&m.rep, &n.rep, *max);
            for (i, d) in table.values.iter().enumerate() {
                report.fact(format!("dim Ext^{i}({}, {})", m.name, n.name), [*d]);
            }
        }
        Command::Dims { input, module: expr } => {
            let doc = ctx.load(&input.file)?;
            let m = module(&doc, expr)?;
            report.fact(format!("pd {}", m.name), [e.pd(&m.rep)]);
            report.fact(format!("id {}", m.name), [e.id(&m.rep)]);
            report.fact(format!("grade {}", m.name), [e.grade(&m.rep)]);
            report.fact(format!("r.grade {}", m.name), [e.reduced_grade(&m.rep)]);
            report.fact(format!("standard name of {}", m.name), [describe(&m.rep).as_str()]);
        }
        Command::Gorenstein { input, n, m } => {
            let doc = ctx.load(&input.file)?;
            let alg = &doc.algebra;
            report.algebra = Some(AlgebraSummary::of(e, alg));
            if let Some(m) = m {
                report.verdicts.push(e.check_mn_condition(alg, *m, *n, Side::Left));
                report.verdicts.push(e.check_mn_condition(alg, *m, *n, Side::Right));
            }
            report.verdicts.push(e.check_gorenstein(alg, *n));
            report.verdicts.push(e.check_auslander_gorenstein(alg));
            report.verdicts.push(e.no_common_summand_check(alg));
            report.verdicts.push(e.check_cogenerator_ext(alg));
        }
        Command::Auslander { input, n } => {
            let doc = ctx.load(&input.file)?;
            report.verdicts.push(e.check_n_auslander(&doc.algebra, *n));
        }
        Command::Orthogonal { input, sub, n } => {
            let doc = ctx.load(&input.file)?;
            let subcat = subcategory(&doc, sub)?.ok_or_else(|| anyhow!("give --subcategory or --generators"))?;
            report.verdicts.push(check_maximal_orthogonal(e, &subcat, *n)?);
        }
        Command::ClassifySimples { input, n, sub } => {
            let doc = ctx.load(&input.file)?;
            let subcat = subcategory(&doc, sub)?;
            report.verdicts.push(classify_simples(e, &doc.algebra, *n, subcat.as_ref())?);
        }
        Command::TrivialMaximal { input, n } => {
            let doc = ctx.load(&input.file)?;
            report.verdicts.push(check_trivial_maximal(e, &doc.algebra, *n)?);
        }
        Command::AlmostHereditary { input, ambient: amb } => {
            let doc = ctx.load(&input.file)?;
            let (list, provenance) = ambient(&doc, amb.as_deref())?;
            report.verdicts.push(check_almost_hereditary_criterion(e, &doc.algebra, &list, provenance)?);
        }
        Command::Cotilting { input, module: expr } => {
            let doc = ctx.load(&input.file)?;
            let t = module(&doc, expr)?;
            let r = check_cotilting(e, &t);
            let mut v = Verdict::new(format!("cotilting: {}", t.name));
            v.record("id T", [r.id]);
            v.record("self-orthogonal", [r.self_orthogonal]);
            if let Some(d) = r.first_failing_degree {
                v.record("first nonvanishing Ext^i(T, T)", [d]);
            }
            v.record("approximation steps on DLambda", [r.depth]);
            match r.status {
                CotiltingStatus::Cotilting => {}
                CotiltingStatus::NotCotilting => v.fail(Witness::from(&t), "a cotilting condition fails"),
                CotiltingStatus::UndecidedAtDepth(d) => v.undecided(format!("DLambda not resolved within depth {d}")),
            }
            report.verdicts.push(v);
        }
        Command::Theorem43 { input, module: expr } => {
            let doc = ctx.load(&input.file)?;
            let t = module(&doc, expr)?;
            report.verdicts.push(check_cotilting_symmetry(e, &doc.algebra, &t)?);
        }
        Command::Orbit { input, module: expr, n } => {
            let doc = ctx.load(&input.file)?;
            let x = module(&doc, expr)?;
            let mut v = Verdict::new(format!("Omega^{n} tau orbit of {}", x.name));
            match omega_n_tau_orbit(e, &x.rep, *n, cli.budget) {
                Ok(o) => {
                    for (t, s) in o.steps.iter().enumerate() {
                        v.record(format!("iterate {t} dimension vector"), s.dims().to_vec());
                    }
                    v.record("budget", [o.budget]);
                    if o.degenerate {
                        v.note("module is projective, orbit is degenerate");
                    } else if let Some(p) = o.period {
                        v.record("period", [p]);
                    } else {
                        v.undecided(format!("no return within {} steps", o.budget));
                    }
                }
                Err(AnalysisError::Premise(why)) => v = Verdict::premise_not_met(v.check, why),
                Err(other) => return Err(other.into()),
            }
            report.verdicts.push(v);
        }
        Command::TensorCx { input, module: expr, with, with_module, length, csv } => {
            let doc = ctx.load(&input.file)?;
            let other = match with {
                Some(p) => ctx.load(p)?,
                None => doc.clone(),
            };
            let (m, n) = (module(&doc, expr)?, module(&other, with_module)?);
            let (p, q) = (DimSequence::of_resolution(e, &m, *length), DimSequence::of_resolution(e, &n, *length));
            let r = tensor_dim_sequence(&p, &q).map_err(|err| anyhow!("{err}"))?;
            report.fact(format!("dim P_k for {}", m.name), p.values.clone());
            report.fact(format!("dim Q_k for {}", n.name), q.values.clone());
            report.fact("dim R_k for the tensor product", r.values.clone());
            for (label, s) in [("M", &p), ("N", &q), ("M (x) N", &r)] {
                estimate_fact(&mut report, label, &estimate_complexity(s));
            }
            report.note("complexities are estimates over a finite window");
            report.verdicts.push(audit_tensor_bounds(&p, &q).map_err(|err| anyhow!("{err}"))?);
            if let Some(path) = csv {
                std::fs::write(path, r.to_csv()).with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Prop51 { input, gamma } => {
            let doc = ctx.load(&input.file)?;
            let g = ctx.load(gamma)?;
            report.verdicts.push(quiverhom::complexity::check_tensor_no_go(e, &doc.algebra, &g.algebra));
        }
    }
    if report.verdicts.iter().any(|v| v.outcome == Outcome::AmbientLimited) {
        report.note("ambient-limited verdicts are certified only against the listed indecomposables");
    }
    report.settle();
    Ok(report)
}
