use crate::input::{parse_order, read_input, Input, Payload};
use crate::report::Outcome;
use crate::{budget_for, scenarios, sha256_hex, Cli, Command, Outcomeful, StrategyArg};
use presmat::betti::{
    classify, classify_gaeta_reduce, is_minimal_sequence, lift_with_verdict, reduce, BettiSequence, Status, Strategy,
    Verdict,
};
use presmat::construct::{homogeneous_matrix, realize, resolve_sequence};
use presmat::groebner::{Budget, GradedResolution};
use presmat::matrices::PolyMatrix;
use presmat::presentation::{
    build_resolution, check_presentation, check_presentation_rect, decompose, gamma, verify_exactness, zeta,
};
use serde_json::{json, Value};

type Produced = Result<Outcomeful, String>;

fn success(result: Value) -> Outcomeful {
    Outcomeful { outcome: Outcome::Success, verdict: None, result, witness: None }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

pub fn status_outcome(s: Status) -> Outcome {
    match s {
        Status::Essential => Outcome::Success,
        Status::NotEssential => Outcome::Negative,
        Status::Unknown => Outcome::Unknown,
    }
}

fn verdict_outcome(v: &Verdict, result: Value) -> Outcomeful {
    Outcomeful {
        outcome: status_outcome(v.status),
        verdict: Some(v.status.to_string()),
        result,
        witness: v.witness.as_ref().map(to_json),
    }
}

fn parse_sequence(text: &str) -> Result<BettiSequence, String> {
    text.parse::<BettiSequence>().map_err(|e| e.to_string())
}

fn sequence_arg(sequence: &Option<String>, homogeneous: &Option<Vec<i64>>) -> Result<BettiSequence, String> {
    match (sequence, homogeneous) {
        (Some(s), None) => parse_sequence(s),
        (None, Some(h)) => {
            if h[0] < 3 {
                return Err(format!("n must be at least 3, got {}", h[0]));
            }
            BettiSequence::homogeneous(h[0] as usize, h[1], h[2]).map_err(|e| e.to_string())
        }
        _ => Err("give a sequence `a..; b..; s` or --homogeneous N A B".into()),
    }
}

fn require_matrix(input: &Input) -> Result<&PolyMatrix, String> {
    match &input.payload {
        Payload::Matrix(m) => Ok(m),
        Payload::Ideal(_) => Err("this command needs a `matrix` input".into()),
    }
}

pub fn resolution_json(res: &GradedResolution) -> Value {
    let maps: Vec<Value> = res.maps().iter().map(|m| json!(m.to_strings())).collect();
    let sequence = if res.length() == 3 && res.shifts()[3].len() == 1 {
        BettiSequence::from_shifts(&res.sorted_shifts()).ok().map(|s| s.to_string())
    } else {
        None
    };
    json!({
        "length": res.length(),
        "ranks": res.ranks(),
        "shifts": res.sorted_shifts(),
        "betti_sequence": sequence,
        "maps": maps,
    })
}

fn run_file_command(cmd: &Command, input: &Input, budget: &Budget) -> Produced {
    let err = |e: presmat::Error| e.to_string();
    match cmd {
        Command::Gamma { transpose, .. } => {
            let m = require_matrix(input)?;
            let m = if *transpose { m.transpose() } else { m.clone() };
            let g = gamma(&m).map_err(err)?;
            Ok(success(json!({ "gamma": g.components, "columns": g.columns, "unit": g.unit.to_string(), "normalization": g.normalization_note })))
        }
        Command::Check { .. } => {
            let m = require_matrix(input)?;
            if m.is_square() {
                let r = check_presentation(m, budget).map_err(err)?;
                let outcome = if r.is_presentation { Outcome::Success } else { Outcome::Negative };
                let verdict = if r.is_presentation { "presentation" } else { "not a presentation" };
                let witness = r.failure_reason.as_ref().map(to_json);
                Ok(Outcomeful { outcome, verdict: Some(verdict.into()), result: to_json(&r), witness })
            } else {
                let ok = check_presentation_rect(m, budget).map_err(err)?;
                let outcome = if ok { Outcome::Success } else { Outcome::Negative };
                let verdict = if ok { "presentation" } else { "not a presentation" };
                Ok(Outcomeful {
                    outcome,
                    verdict: Some(verdict.into()),
                    result: json!({ "is_presentation": ok, "rows": m.rows(), "cols": m.cols() }),
                    witness: None,
                })
            }
        }
        Command::Resolve { max_length, .. } => match &input.payload {
            Payload::Matrix(m) => {
                let res = build_resolution(m, budget).map_err(err)?;
                let exact = verify_exactness(&res, budget).map_err(err)?;
                let mut v = resolution_json(&res);
                v["exactness"] = to_json(&exact);
                Ok(success(v))
            }
            Payload::Ideal(ideal) => {
                let len = max_length.unwrap_or(input.ring.nvars() + 1);
                let res = ideal.minimal_free_resolution(len, budget).map_err(err)?;
                Ok(success(resolution_json(&res)))
            }
        },
        Command::Zeta { .. } => {
            let m = require_matrix(input)?;
            let z = zeta(m, budget).map_err(err)?;
            Ok(success(to_json(&z)))
        }
        Command::Decompose { .. } => {
            let m = require_matrix(input)?;
            let d = decompose(m, budget).map_err(err)?;
            let outcome = if d.regular { Outcome::Success } else { Outcome::Negative };
            let verdict = if d.regular { "regular" } else { "not regular" };
            Ok(Outcomeful { outcome, verdict: Some(verdict.into()), result: to_json(&d), witness: None })
        }
        _ => unreachable!("not a file command"),
    }
}

fn run_sequence_command(cmd: &Command, budget: &Budget) -> (String, Produced) {
    let name = cmd.name();
    let seq = match cmd {
        Command::BettiClassify { sequence, homogeneous, .. } | Command::Construct { sequence, homogeneous, .. } => {
            sequence_arg(sequence, homogeneous)
        }
        Command::BettiReduce { sequence, .. } | Command::BettiLift { sequence, .. } => parse_sequence(sequence),
        _ => unreachable!("not a sequence command"),
    };
    let seq = match seq {
        Ok(s) => s,
        Err(e) => return (sha256_hex(format!("{name}:{e}").as_bytes()), Err(e)),
    };
    let mut key = format!("{name}:{seq}");
    let err = |e: presmat::Error| e.to_string();
    let produced = (|| -> Produced {
        match cmd {
            Command::BettiClassify { minimality, .. } => {
                let v = classify(&seq).map_err(err)?;
                let mut result = json!({ "sequence": seq.to_string(), "status": v.status.to_string() });
                if *minimality {
                    let m = is_minimal_sequence(&seq).map_err(err)?;
                    result["minimality"] = to_json(&m);
                }
                Ok(verdict_outcome(&v, result))
            }
            Command::BettiReduce { strategy, .. } => {
                let s = match strategy {
                    StrategyArg::Largest => Strategy::LargestT,
                    StrategyArg::Smallest => Strategy::SmallestT,
                };
                let full = classify_gaeta_reduce(&seq).map_err(err)?;
                let result = match reduce(&seq, s) {
                    Ok((steps, residue)) => json!({
                        "sequence": seq.to_string(),
                        "strategy": format!("{s:?}"),
                        "steps": to_json(&steps),
                        "residue": residue.to_string(),
                        "total_shift": full.total_shift,
                    }),
                    Err(v) => json!({ "sequence": seq.to_string(), "strategy": format!("{s:?}"), "stopped": to_json(&v) }),
                };
                Ok(verdict_outcome(&full.verdict, result))
            }
            Command::BettiLift { u, .. } => {
                let (lifted, v) = lift_with_verdict(&seq, u).map_err(err)?;
                let result = json!({ "sequence": seq.to_string(), "u": u, "lifted": lifted.to_string(), "status": v.status.to_string() });
                Ok(verdict_outcome(&v, result))
            }
            Command::Construct { homogeneous, oracle, .. } => {
                let (matrix, sequence, ideal, recipe) = match homogeneous {
                    Some(h) => {
                        let c = homogeneous_matrix(h[0] as usize, h[1], h[2], budget).map_err(err)?;
                        let ideal = gamma(&c.matrix).map_err(err)?.components;
                        (c.matrix, c.sequence, ideal, vec![format!("{:?}", c.recipe)])
                    }
                    None => {
                        let c = realize(&seq, budget).map_err(err)?;
                        (c.matrix, c.sequence, c.ideal, c.recipe)
                    }
                };
                let mut result = json!({
                    "sequence": sequence.to_string(),
                    "ring": matrix.ring().vars(),
                    "matrix": matrix.to_strings(),
                    "ideal": ideal,
                    "recipe": recipe,
                });
                if *oracle {
                    let found = resolve_sequence(&matrix, budget).map_err(err)?;
                    if found != seq {
                        return Err(format!("oracle resolution gives {found}, construction claims {seq}"));
                    }
                    result["oracle_sequence"] = json!(found.to_string());
                }
                Ok(Outcomeful { outcome: Outcome::Success, verdict: Some("constructed".into()), result, witness: None })
            }
            _ => unreachable!(),
        }
    })();
    if let Command::BettiLift { u, .. } = cmd {
        key.push_str(&format!(":{u:?}"));
    }
    (sha256_hex(key.as_bytes()), produced)
}

/// Runs the command and returns the input digest together with its result.
pub fn dispatch(cli: &Cli) -> (String, Produced) {
    let budget = budget_for(cli.budget);
    let order = match cli.order.as_deref().map(parse_order).transpose() {
        Ok(o) => o,
        Err(e) => return (sha256_hex(b""), Err(e.0)),
    };
    match &cli.command {
        Command::Gamma { input, .. }
        | Command::Check { input }
        | Command::Resolve { input, .. }
        | Command::Zeta { input }
        | Command::Decompose { input } => {
            let parsed = match read_input(input, order) {
                Ok(i) => i,
                Err(e) => return (sha256_hex(input.display().to_string().as_bytes()), Err(e.0)),
            };
            let digest = sha256_hex(&parsed.bytes);
            (digest, run_file_command(&cli.command, &parsed, &budget))
        }
        Command::VerifyPaperExample { name, list, full } => scenarios::verify(name.as_deref(), *list, *full, cli.budget),
        other => run_sequence_command(other, &budget),
    }
}
