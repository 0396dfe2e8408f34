//! Named worked examples, embedded from `fixtures/`.

use crate::report::Outcome;
use crate::{budget_for, sha256_hex, Outcomeful};
use presmat::betti::{classify, classify_homogeneous, BettiSequence, Status};
use presmat::construct::{prop_bet, resolve_sequence};
use presmat::groebner::{Budget, IdealBasis};
use presmat::matrices::PolyMatrix;
use presmat::presentation::{build_resolution, check_presentation, gamma, PresentationFailure};
use presmat::ring::{Polynomial, Ring, RingContext};
use presmat::Error;
use serde::Deserialize;
use serde_json::{json, Value};

pub const FIXTURES: &[(&str, &str)] = &[
    ("four-by-four", include_str!("../fixtures/four-by-four.json")),
    ("cyclic-cubics", include_str!("../fixtures/cyclic-cubics.json")),
    ("cyclic-quartics", include_str!("../fixtures/cyclic-quartics.json")),
    ("koszul", include_str!("../fixtures/koszul.json")),
    ("three-generators", include_str!("../fixtures/three-generators.json")),
    ("gaeta-remark", include_str!("../fixtures/gaeta-remark.json")),
    ("closing-remark", include_str!("../fixtures/closing-remark.json")),
];

/// Default seconds for the required and the stretch checks of the large example.
pub const CLOSING_HEIGHT_SECS: f64 = 300.0;
pub const CLOSING_FULL_SECS: f64 = 1800.0;

#[derive(Debug, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    #[serde(default)]
    pub ring: Option<crate::input::RingSpec>,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub ideal: Option<Vec<String>>,
    #[serde(default)]
    pub sequence: Option<String>,
    #[serde(default)]
    pub h: Option<Vec<String>>,
    #[serde(default)]
    pub g: Option<Vec<String>>,
    pub expect: Value,
}

impl Fixture {
    pub fn load(name: &str) -> Option<Fixture> {
        FIXTURES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| serde_json::from_str(text).expect("embedded fixture parses"))
    }

    pub fn ring(&self) -> Result<Ring, String> {
        let spec = self.ring.as_ref().ok_or("fixture has no ring")?;
        RingContext::grevlex(&spec.vars).map_err(|e| e.to_string())
    }

    pub fn matrix(&self) -> Result<PolyMatrix, String> {
        let rows = self.matrix.as_ref().ok_or("fixture has no matrix")?;
        PolyMatrix::parse(&self.ring()?, rows).map_err(|e| e.to_string())
    }

    pub fn ideal(&self) -> Result<IdealBasis, String> {
        let gens = self.ideal.as_ref().ok_or("fixture has no ideal")?;
        IdealBasis::parse(&self.ring()?, gens).map_err(|e| e.to_string())
    }

    fn polys(&self, texts: &Option<Vec<String>>) -> Result<Vec<Polynomial>, String> {
        let ring = self.ring()?;
        texts
            .as_ref()
            .ok_or("fixture field missing")?
            .iter()
            .map(|t| ring.parse(t).map_err(|e| e.to_string()))
            .collect()
    }

    fn expected_sequence(&self, key: &str) -> Result<BettiSequence, String> {
        let text = self.expect[key].as_str().ok_or(format!("fixture expects no `{key}`"))?;
        text.parse().map_err(|e: Error| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CheckStatus {
    Pass,
    Fail,
    BudgetExceeded,
}

struct Checks(Vec<Value>, Vec<CheckStatus>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new(), Vec::new())
    }

    fn record(&mut self, name: &str, expected: impl ToString, observed: impl ToString) {
        let (e, o) = (expected.to_string(), observed.to_string());
        let status = if e == o { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(name, e, o, status);
    }

    fn push(&mut self, name: &str, expected: String, observed: String, status: CheckStatus) {
        let label = match status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::BudgetExceeded => "budget_exceeded",
        };
        self.0.push(json!({ "check": name, "expected": expected, "observed": observed, "status": label }));
        self.1.push(status);
    }

    /// Records a budget overrun, or propagates any other error.
    fn budget_or(&mut self, name: &str, expected: impl ToString, e: Error) -> Result<(), String> {
        match e {
            Error::BudgetExceeded { .. } => {
                self.push(name, expected.to_string(), e.to_string(), CheckStatus::BudgetExceeded);
                Ok(())
            }
            other => Err(other.to_string()),
        }
    }
}

fn polys_text(v: &[Polynomial]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn run_scenario(fx: &Fixture, full: bool, cli_budget: Option<f64>) -> Result<Checks, String> {
    let budget = budget_for(cli_budget);
    let err = |e: Error| e.to_string();
    let mut checks = Checks::new();
    match fx.name.as_str() {
        "four-by-four" | "koszul" => {
            let m = fx.matrix()?;
            let g = gamma(&m).map_err(err)?;
            let want: Vec<String> = serde_json::from_value(fx.expect["gamma"].clone()).map_err(|e| e.to_string())?;
            let ring = fx.ring()?;
            let want: Vec<Polynomial> = want.iter().map(|t| ring.parse(t).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
            checks.record("gamma(M)", polys_text(&want), polys_text(&g.components));
            let r = check_presentation(&m, &budget).map_err(err)?;
            checks.record("check_presentation(M)", true, r.is_presentation);
            if let Some(h) = fx.expect.get("transpose_height_j").and_then(Value::as_u64) {
                let rt = check_presentation(&m.transpose(), &budget).map_err(err)?;
                checks.record("check_presentation(M^T)", false, rt.is_presentation);
                checks.record(
                    "failure reason for M^T",
                    format!("{:?}", Some(PresentationFailure::HeightJ { height: h as usize })),
                    format!("{:?}", rt.failure_reason),
                );
            }
            let res = build_resolution(&m, &budget).map_err(err)?;
            let seq = BettiSequence::from_shifts(&res.sorted_shifts()).map_err(err)?;
            checks.record("Betti sequence of I_M", fx.expected_sequence("betti")?, seq);
        }
        "cyclic-cubics" | "cyclic-quartics" => {
            let ideal = fx.ideal()?;
            let res = ideal.minimal_free_resolution(7, &budget).map_err(err)?;
            checks.record("resolution length", 3, res.length());
            let seq = BettiSequence::from_shifts(&res.sorted_shifts()).map_err(err)?;
            checks.record("Betti sequence", fx.expected_sequence("betti")?, seq);
        }
        "three-generators" => {
            let h = fx.polys(&fx.h)?;
            let g = fx.polys(&fx.g)?;
            let built = prop_bet(&[h[0].clone(), h[1].clone(), h[2].clone()], &[g[0].clone(), g[1].clone(), g[2].clone()], &budget)
                .map_err(err)?;
            let want = fx.expected_sequence("betti")?;
            checks.record("predicted sequence", &want, &built.sequence);
            checks.record("classification", "Essential", classify(&want).map_err(err)?.status);
            let found = resolve_sequence(&built.matrix, &budget).map_err(err)?;
            checks.record("oracle resolution", &want, found);
        }
        "gaeta-remark" => {
            let seq: BettiSequence = fx.sequence.as_deref().ok_or("fixture has no sequence")?.parse().map_err(err)?;
            let want = fx.expect["status"].as_str().unwrap_or_default();
            checks.record("classify", want, classify(&seq).map_err(err)?.status);
            let h = classify_homogeneous(seq.n(), seq.a()[0], seq.b()[0]).map_err(err)?;
            checks.record("homogeneous rule", want, h.status);
        }
        "closing-remark" => {
            let ideal = fx.ideal()?;
            let want_h = fx.expect["height"].as_u64().unwrap_or_default();
            let hb = cli_budget.map(|s| budget_for(Some(s))).unwrap_or_else(|| Budget::seconds(CLOSING_HEIGHT_SECS));
            match ideal.height(&hb) {
                Ok(h) => checks.record("height(I)", want_h, h),
                Err(e) => checks.budget_or("height(I)", want_h, e)?,
            }
            let want = fx.expected_sequence("betti")?;
            let v = classify(&want).map_err(err)?;
            checks.record("classification", Status::Essential, v.status);
            if full {
                let fb = cli_budget.map(|s| budget_for(Some(s))).unwrap_or_else(|| Budget::seconds(CLOSING_FULL_SECS));
                match ideal.minimal_free_resolution(17, &fb) {
                    Ok(res) => match BettiSequence::from_shifts(&res.sorted_shifts()) {
                        Ok(seq) => checks.record("minimal free resolution", &want, seq),
                        Err(_) => checks.record("minimal free resolution", &want, format!("{:?}", res.sorted_shifts())),
                    },
                    Err(e) => checks.budget_or("minimal free resolution", &want, e)?,
                }
            }
        }
        other => return Err(format!("no runner for scenario `{other}`")),
    }
    Ok(checks)
}

/// `verify-paper-example`: runs one scenario, or lists them.
pub fn verify(name: Option<&str>, list: bool, full: bool, cli_budget: Option<f64>) -> (String, Result<Outcomeful, String>) {
    if list || name.is_none() {
        let items: Vec<Value> = FIXTURES
            .iter()
            .map(|(n, _)| {
                let fx = Fixture::load(n).unwrap();
                json!({ "name": fx.name, "description": fx.description })
            })
            .collect();
        let digest = sha256_hex(FIXTURES.iter().map(|(_, t)| *t).collect::<String>().as_bytes());
        if list {
            return (digest, Ok(Outcomeful { outcome: Outcome::Success, verdict: None, result: json!({ "scenarios": items }), witness: None }));
        }
        return (digest, Err("give a scenario name or --list".into()));
    }
    let name = name.unwrap();
    let Some((_, text)) = FIXTURES.iter().find(|(n, _)| *n == name) else {
        let known: Vec<&str> = FIXTURES.iter().map(|(n, _)| *n).collect();
        return (sha256_hex(name.as_bytes()), Err(format!("unknown scenario `{name}`; known: {}", known.join(", "))));
    };
    let digest = sha256_hex(text.as_bytes());
    let fx = Fixture::load(name).unwrap();
    let produced = run_scenario(&fx, full, cli_budget).and_then(|checks| {
        let result = json!({ "scenario": fx.name, "description": fx.description, "full": full, "checks": checks.0 });
        if checks.1.iter().any(|s| *s == CheckStatus::Fail) {
            let failed: Vec<String> = checks
                .0
                .iter()
                .filter(|c| c["status"] == "fail")
                .map(|c| format!("{}: expected {}, observed {}", c["check"], c["expected"], c["observed"]))
                .collect();
            return Err(format!("scenario `{name}` does not reproduce: {}", failed.join("; ")));
        }
        let outcome = if checks.1.iter().any(|s| *s == CheckStatus::BudgetExceeded) { Outcome::Error } else { Outcome::Success };
        let verdict = if outcome == Outcome::Success { "reproduced" } else { "budget exceeded" };
        Ok(Outcomeful { outcome, verdict: Some(verdict.into()), result, witness: None })
    });
    (digest, produced)
}
