use super::BettiSequence;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Essential,
    NotEssential,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Essential => "Essential",
            Status::NotEssential => "NotEssential",
            Status::Unknown => "Unknown",
        })
    }
}

/// One step of a Gaeta reduction: the index `t` and the shift `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub t: usize,
    pub d: i64,
    pub before: BettiSequence,
    pub after: BettiSequence,
}

/// Why a verdict was reached, and for `Essential` verdicts how to build an
/// ideal realizing the sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A necessary condition that fails.
    Violated { condition: String, detail: String },
    /// `h` of degrees `c` and diagonal `g` of degrees `t` in the three
    /// generator construction.
    ThreeGenerators { c: [i64; 3], t: [i64; 3] },
    /// Gaeta reductions down to `residue`, whose verdict is `inner`.
    Reduction { steps: Vec<ReductionStep>, residue: BettiSequence, inner: Box<Verdict> },
    /// Rule for `(a^n; b^n; n(b-a))`.
    Homogeneous { n: usize, a: i64, b: i64, rule: String },
    /// Essential because `base` is and the sequence is its lift by `u`.
    Lift { base: BettiSequence, u: Vec<i64>, inner: Box<Verdict> },
    /// Essential by a stored explicit ideal.
    Catalog { name: String },
    /// No rule applies.
    Undecided { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn essential(w: Witness) -> Self {
        Verdict { status: Status::Essential, witness: Some(w) }
    }

    pub fn not_essential(condition: &str, detail: impl Into<String>) -> Self {
        Verdict {
            status: Status::NotEssential,
            witness: Some(Witness::Violated { condition: condition.into(), detail: detail.into() }),
        }
    }

    pub fn unknown(detail: impl Into<String>) -> Self {
        Verdict { status: Status::Unknown, witness: Some(Witness::Undecided { detail: detail.into() }) }
    }

    pub fn is_essential(&self) -> bool {
        self.status == Status::Essential
    }

    pub fn is_not_essential(&self) -> bool {
        self.status == Status::NotEssential
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// The failing condition tag of a `Violated` witness.
    pub fn violated_condition(&self) -> Option<&str> {
        match &self.witness {
            Some(Witness::Violated { condition, .. }) => Some(condition),
            Some(Witness::Reduction { inner, .. }) => inner.violated_condition(),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Minimality {
    Minimal,
    NotMinimal,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub status: Minimality,
    /// The `n` sequences with every degree but one `a_k` lowered by one.
    pub candidates: Vec<(BettiSequence, Verdict)>,
}
