use std::fmt;

use quiverhom::algebra::Algebra;
use quiverhom::homological::{Engine, HomDim, Side};
use quiverhom::verdict::{Evidence, Outcome, Value, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub field: String,
    pub vertices: usize,
    pub arrows: usize,
    pub dim: usize,
    pub gldim: HomDim,
    pub id_left: HomDim,
    pub id_right: HomDim,
    pub gorenstein: bool,
    /// `n` when the algebra is `n`-Auslander with `gl.dim = n + 1`.
    pub auslander_level: Option<usize>,
}

impl AlgebraSummary {
    pub fn of(engine: &Engine, alg: &Algebra) -> AlgebraSummary {
        let gldim = engine.gldim(alg);
        let id_left = engine.self_injective_dim(alg, Side::Left);
        let id_right = engine.self_injective_dim(alg, Side::Right);
        let auslander_level = gldim
            .finite()
            .filter(|&g| g >= 1)
            .map(|g| g - 1)
            .filter(|&n| engine.check_n_auslander(alg, n).outcome == Outcome::Pass);
        AlgebraSummary {
            field: alg.field().to_string(),
            vertices: alg.num_vertices(),
            arrows: alg.arrows().len(),
            dim: alg.dim(),
            gldim,
            id_left,
            id_right,
            gorenstein: id_left.is_finite() && id_left == id_right,
            auslander_level,
        }
    }
}

/// Everything one run produced. The structured form is the serde tree of this value.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub algebra: Option<AlgebraSummary>,
    pub facts: Vec<Evidence>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
    pub undecided: bool,
}

impl Report {
    pub fn new(command: Vec<String>) -> Report {
        Report { command, ..Report::default() }
    }

    pub fn fact<I, V>(&mut self, claim: impl Into<String>, values: I)
    where
        I: IntoIterator<Item = V>,
        V: Into<Value>,
    {
        self.facts.push(Evidence { claim: claim.into(), values: values.into_iter().map(Into::into).collect() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Sets `undecided` when any outcome or value is cut off.
    pub fn settle(&mut self) {
        let cut = |e: &Evidence| e.values.iter().any(|v| matches!(v, Value::Dim(HomDim::BeyondCutoff(_))));
        let summary_cut = self.algebra.as_ref().is_some_and(|a| {
            [a.gldim, a.id_left, a.id_right].iter().any(|d| matches!(d, HomDim::BeyondCutoff(_)))
        });
        self.undecided = self.undecided
            || summary_cut
            || self.facts.iter().any(cut)
            || self.verdicts.iter().any(|v| v.outcome == Outcome::Inconclusive || v.evidence.iter().any(cut));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "$ {}", self.command.join(" "))?;
        if let Some(a) = &self.algebra {
            writeln!(f, "algebra over {}: {} vertices, {} arrows, dim {}", a.field, a.vertices, a.arrows, a.dim)?;
            writeln!(f, "  gl.dim = {}", a.gldim)?;
            writeln!(f, "  id Lambda = {} (left), {} (right)", a.id_left, a.id_right)?;
            writeln!(f, "  Gorenstein = {}", a.gorenstein)?;
            match a.auslander_level {
                Some(n) => writeln!(f, "  {n}-Auslander with gl.dim {}", n + 1)?,
                None => writeln!(f, "  not n-Auslander with gl.dim n+1")?,
            }
        }
        for e in &self.facts {
            let vals: Vec<String> = e.values.iter().map(Value::to_string).collect();
            writeln!(f, "{} = {}", e.claim, vals.join(", "))?;
        }
        for v in &self.verdicts {
            write!(f, "{v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if self.undecided {
            writeln!(f, "undecided: some answers were cut off")?;
        }
        Ok(())
    }
}
