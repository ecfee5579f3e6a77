//! Structured outcomes shared by every analysis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homological::HomDim;
use crate::module::Named;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    PremiseNotMet,
    /// Passed, but only relative to a hand-supplied list of indecomposables.
    AmbientLimited,
    /// A cutoff or budget ran out before the question was settled.
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::PremiseNotMet => "premise-not-met",
            Outcome::AmbientLimited => "ambient-limited",
            Outcome::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Int(i64),
    Bool(bool),
    Dim(HomDim),
    Real(f64),
    Ints(Vec<i64>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Dim(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v:.4}"),
            Value::Ints(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            Value::Text(v) => f.write_str(v),
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<HomDim> for Value {
    fn from(v: HomDim) -> Self {
        Value::Dim(v)
    }
}

impl From<&[usize]> for Value {
    fn from(v: &[usize]) -> Self {
        Value::Ints(v.iter().map(|&x| x as i64).collect())
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::from(v.as_slice())
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub claim: String,
    pub values: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub dims: Vec<usize>,
}

impl From<&Named> for Witness {
    fn from(n: &Named) -> Self {
        Witness { name: n.name.clone(), dims: n.rep.dims().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub outcome: Outcome,
    pub evidence: Vec<Evidence>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    /// A passing verdict with no evidence yet.
    pub fn new(check: impl Into<String>) -> Verdict {
        Verdict { check: check.into(), outcome: Outcome::Pass, evidence: Vec::new(), witnesses: Vec::new(), notes: Vec::new() }
    }

    pub fn with_outcome(mut self, outcome: Outcome) -> Verdict {
        self.outcome = outcome;
        self
    }

    pub fn premise_not_met(check: impl Into<String>, why: impl Into<String>) -> Verdict {
        let mut v = Verdict::new(check).with_outcome(Outcome::PremiseNotMet);
        v.notes.push(why.into());
        v
    }

    pub fn record<I, V>(&mut self, claim: impl Into<String>, values: I)
    where
        I: IntoIterator<Item = V>,
        V: Into<Value>,
    {
        self.evidence.push(Evidence { claim: claim.into(), values: values.into_iter().map(Into::into).collect() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Marks the verdict failed unless it is already settled otherwise.
    pub fn fail(&mut self, witness: Witness, why: impl Into<String>) {
        if matches!(self.outcome, Outcome::Pass | Outcome::AmbientLimited | Outcome::Inconclusive) {
            self.outcome = Outcome::Fail;
        }
        if !self.witnesses.contains(&witness) {
            self.witnesses.push(witness);
        }
        self.notes.push(why.into());
    }

    /// Downgrades a pass to inconclusive.
    pub fn undecided(&mut self, why: impl Into<String>) {
        if matches!(self.outcome, Outcome::Pass | Outcome::AmbientLimited) {
            self.outcome = Outcome::Inconclusive;
        }
        self.notes.push(why.into());
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass | Outcome::AmbientLimited)
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// The first value recorded under `claim`.
    pub fn value(&self, claim: &str) -> Option<&Value> {
        self.values(claim).and_then(<[Value]>::first)
    }

    pub fn values(&self, claim: &str) -> Option<&[Value]> {
        self.evidence.iter().find(|e| e.claim == claim).map(|e| e.values.as_slice())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.check, self.outcome)?;
        for e in &self.evidence {
            let vals: Vec<String> = e.values.iter().map(Value::to_string).collect();
            writeln!(f, "  {} = {}", e.claim, vals.join(", "))?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness {} dims {:?}", w.name, w.dims)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
