use super::{BettiSequence, Minimality, MinimalityReport, ReductionStep, Status, Verdict, Witness};
use crate::error::{Error, Result};
use crate::matrices::DegreeMatrix;
use serde::Serialize;

/// Sequences known to be essential from an explicit ideal, with the name of
/// the stored example.
pub fn catalog() -> Vec<(&'static str, BettiSequence)> {
    vec![("closing-remark", BettiSequence::homogeneous(4, 5, 8).expect("valid"))]
}

fn catalog_lookup(seq: &BettiSequence) -> Option<Verdict> {
    catalog()
        .into_iter()
        .find(|(_, s)| s == seq)
        .map(|(name, _)| Verdict::essential(Witness::Catalog { name: name.into() }))
}

fn positivity(seq: &BettiSequence) -> Option<Verdict> {
    if let Some(x) = seq.a().iter().chain(seq.b()).find(|&&x| x <= 0) {
        return Some(Verdict::not_essential("positivity", format!("twist {x} is not positive")));
    }
    None
}

fn consistency(seq: &BettiSequence) -> Option<Verdict> {
    if !seq.is_consistent() {
        let expected = seq.b().iter().sum::<i64>() - seq.a().iter().sum::<i64>();
        return Some(Verdict::not_essential("s = sum b - sum a", format!("s = {} but sum b - sum a = {expected}", seq.s())));
    }
    None
}

/// Necessary conditions for `n >= 4`: `a_i < b_{n+1-i}`, `a_2 < b_n`,
/// `a_3 < b_{n-1}` and `b_{n-2} < s <= a_1 + a_2 + a_3`.
fn necessary_general(seq: &BettiSequence) -> Option<Verdict> {
    let n = seq.n();
    for i in 1..=n {
        if seq.a_at(i) >= seq.b_at(n + 1 - i) {
            return Some(Verdict::not_essential(
                "a_i < b_(n+1-i)",
                format!("a_{i} = {} >= b_{} = {}", seq.a_at(i), n + 1 - i, seq.b_at(n + 1 - i)),
            ));
        }
    }
    if seq.a_at(2) >= seq.b_at(n) {
        return Some(Verdict::not_essential("a_2 < b_n", format!("a_2 = {} >= b_n = {}", seq.a_at(2), seq.b_at(n))));
    }
    if seq.a_at(3) >= seq.b_at(n - 1) {
        return Some(Verdict::not_essential(
            "a_3 < b_(n-1)",
            format!("a_3 = {} >= b_(n-1) = {}", seq.a_at(3), seq.b_at(n - 1)),
        ));
    }
    if seq.s() <= seq.b_at(n - 2) {
        return Some(Verdict::not_essential("b_(n-2) < s", format!("s = {} <= b_(n-2) = {}", seq.s(), seq.b_at(n - 2))));
    }
    let a3 = seq.a_at(1) + seq.a_at(2) + seq.a_at(3);
    if seq.s() > a3 {
        return Some(Verdict::not_essential("s <= a_1 + a_2 + a_3", format!("s = {} > {a3}", seq.s())));
    }
    None
}

/// Essentiality of a three-generator sequence: `s = sum b - sum a`,
/// `sum a < b_2 + b_3` and `a_j + b_j <= sum a`.
pub fn classify_n3(seq: &BettiSequence) -> Result<Verdict> {
    if seq.n() != 3 {
        return Err(Error::Invalid(format!("expected n = 3, got {}", seq.n())));
    }
    if let Some(v) = positivity(seq).or_else(|| consistency(seq)) {
        return Ok(v);
    }
    let sa: i64 = seq.a().iter().sum();
    if sa >= seq.b_at(2) + seq.b_at(3) {
        return Ok(Verdict::not_essential(
            "sum a < b_2 + b_3",
            format!("sum a = {sa} >= b_2 + b_3 = {}", seq.b_at(2) + seq.b_at(3)),
        ));
    }
    for j in 1..=3 {
        if seq.a_at(j) + seq.b_at(j) > sa {
            return Ok(Verdict::not_essential(
                "a_j + b_j <= sum a",
                format!("a_{j} + b_{j} = {} > sum a = {sa}", seq.a_at(j) + seq.b_at(j)),
            ));
        }
    }
    let c = [seq.s() - seq.b_at(1), seq.s() - seq.b_at(2), seq.s() - seq.b_at(3)];
    let t = [sa - seq.a_at(1) - seq.b_at(1), sa - seq.a_at(2) - seq.b_at(2), sa - seq.a_at(3) - seq.b_at(3)];
    Ok(Verdict::essential(Witness::ThreeGenerators { c, t }))
}

/// Which admissible `t` a reduction step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    LargestT,
    SmallestT,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaetaReduction {
    pub input: BettiSequence,
    pub steps: Vec<ReductionStep>,
    pub residue: BettiSequence,
    /// Sum of the shifts `d` over all steps.
    pub total_shift: i64,
    /// Decided when the residue has three generators or a condition fails;
    /// `Unknown` for larger Gaeta residues.
    pub verdict: Verdict,
}

/// Admissible reduction indices: `t >= 4` with `b_{n+2-t} <= a_t`.
pub fn reduction_indices(seq: &BettiSequence) -> Vec<usize> {
    let n = seq.n();
    (4..=n).filter(|&t| seq.b_at(n + 2 - t) <= seq.a_at(t)).collect()
}

/// One reduction step at `t`, or the violated condition.
pub fn reduce_at(seq: &BettiSequence, t: usize) -> std::result::Result<ReductionStep, Verdict> {
    let n = seq.n();
    if let Some(v) = consistency(seq) {
        return Err(v);
    }
    for i in t..=n {
        if seq.b_at(n + 1 - i) <= seq.a_at(i) {
            return Err(Verdict::not_essential(
                "b_(n+1-i) > a_i for i >= t",
                format!("t = {t}: b_{} = {} <= a_{i} = {}", n + 1 - i, seq.b_at(n + 1 - i), seq.a_at(i)),
            ));
        }
    }
    let d: i64 = (t..=n).map(|i| seq.b_at(n + 1 - i) - seq.a_at(i)).sum();
    let a: Vec<i64> = seq.a()[..t - 1].iter().map(|x| x - d).collect();
    let b: Vec<i64> = seq.b()[n + 1 - t..].iter().map(|x| x - d).collect();
    let after = BettiSequence::new(a, b, seq.s() - d).expect("t - 1 >= 3 entries");
    Ok(ReductionStep { t, d, before: seq.clone(), after })
}

/// Reduces until no admissible `t` remains.
pub fn reduce(seq: &BettiSequence, strategy: Strategy) -> std::result::Result<(Vec<ReductionStep>, BettiSequence), Verdict> {
    let mut cur = seq.clone();
    let mut steps = Vec::new();
    loop {
        if let Some(v) = consistency(&cur) {
            return Err(v);
        }
        let ts = reduction_indices(&cur);
        let t = match strategy {
            Strategy::LargestT => ts.last(),
            Strategy::SmallestT => ts.first(),
        };
        let Some(&t) = t else { return Ok((steps, cur)) };
        let step = reduce_at(&cur, t)?;
        cur = step.after.clone();
        steps.push(step);
    }
}

/// Iterated Gaeta reduction with the largest admissible `t`, cross-checked
/// against the smallest-`t` strategy.
pub fn classify_gaeta_reduce(seq: &BettiSequence) -> Result<GaetaReduction> {
    if seq.n() < 4 {
        return Err(Error::Invalid(format!("reduction needs n >= 4, got {}", seq.n())));
    }
    let largest = reduce(seq, Strategy::LargestT);
    let smallest = reduce(seq, Strategy::SmallestT);
    let (steps, residue, verdict) = match (largest, smallest) {
        (Ok((steps, residue)), Ok((_, other))) => {
            if residue != other {
                return Err(Error::Internal(format!("reduction strategies disagree: {residue} vs {other}")));
            }
            let verdict = if residue.n() == 3 {
                classify_n3(&residue)?
            } else {
                Verdict::unknown("Gaeta residue with more than three generators")
            };
            (steps, residue, verdict)
        }
        (Err(v), Err(_)) => (Vec::new(), seq.clone(), v),
        _ => return Err(Error::Internal(format!("reduction strategies disagree on {seq}"))),
    };
    let total_shift = steps.iter().map(|s| s.d).sum();
    Ok(GaetaReduction { input: seq.clone(), steps, residue, total_shift, verdict })
}

/// Rules for `(a^n; b^n; n(b-a))`: both directions for odd `n`, the
/// necessary condition and the sufficient condition for even `n`.
pub fn classify_homogeneous(n: usize, a: i64, b: i64) -> Result<Verdict> {
    if n < 3 {
        return Err(Error::Invalid(format!("n = {n} < 3")));
    }
    if a <= 0 || a >= b {
        return Err(Error::Invalid(format!("need 0 < a < b, got a = {a}, b = {b}")));
    }
    let nn = n as i64;
    let (lo, mid, hi) = (nn * a, (nn - 1) * b, (nn + 1) * a);
    let ess = |rule: &str| Verdict::essential(Witness::Homogeneous { n, a, b, rule: rule.into() });
    if lo >= mid {
        return Ok(Verdict::not_essential("na < (n-1)b", format!("{lo} >= {mid}")));
    }
    if nn % 2 == 1 {
        if mid > hi {
            return Ok(Verdict::not_essential("(n-1)b <= (n+1)a", format!("{mid} > {hi}")));
        }
        return Ok(ess("odd"));
    }
    if mid >= hi {
        return Ok(Verdict::not_essential("(n-1)b < (n+1)a for even n", format!("{mid} >= {hi}")));
    }
    if 2 * mid <= 2 * lo + (nn - 2) * (b - a) {
        return Ok(ess("even-sufficient"));
    }
    Ok(Verdict::unknown(format!("even n = {n}: necessary conditions hold, sufficient condition fails")))
}

fn classify_residue(seq: &BettiSequence) -> Result<Verdict> {
    if seq.n() == 3 {
        return classify_n3(seq);
    }
    if let Some(v) = positivity(seq).or_else(|| consistency(seq)).or_else(|| necessary_general(seq)) {
        return Ok(v);
    }
    if seq.is_homogeneous() {
        let v = classify_homogeneous(seq.n(), seq.a()[0], seq.b()[0])?;
        if !v.is_unknown() {
            return Ok(v);
        }
    }
    if let Some(v) = catalog_lookup(seq) {
        return Ok(v);
    }
    Ok(Verdict::unknown("Gaeta sequence not decided by the available rules"))
}

/// The full pipeline: necessary conditions, the three-generator
/// characterization, Gaeta reductions, then the homogeneous rules and the
/// catalog on the residue.
pub fn classify(seq: &BettiSequence) -> Result<Verdict> {
    if let Some(v) = positivity(seq).or_else(|| consistency(seq)) {
        return Ok(v);
    }
    if seq.n() == 3 {
        return classify_n3(seq);
    }
    if let Some(v) = necessary_general(seq) {
        return Ok(v);
    }
    let red = classify_gaeta_reduce(seq)?;
    let inner = if red.verdict.is_unknown() { classify_residue(&red.residue)? } else { red.verdict };
    if red.steps.is_empty() {
        return Ok(inner);
    }
    Ok(Verdict {
        status: inner.status,
        witness: Some(Witness::Reduction { steps: red.steps, residue: red.residue, inner: Box::new(inner) }),
    })
}

/// `(a_i + U - u_i; b_j + U; s + U)` with `U = sum u_i`, re-sorted. `u` is
/// indexed like the sorted `a`.
pub fn lift(seq: &BettiSequence, u: &[i64]) -> Result<BettiSequence> {
    if u.len() != seq.n() {
        return Err(Error::Dimension(format!("{} exponents for {} generators", u.len(), seq.n())));
    }
    if let Some(x) = u.iter().find(|&&x| x < 0) {
        return Err(Error::Invalid(format!("negative exponent {x}")));
    }
    let total: i64 = u.iter().sum();
    let a = seq.a().iter().zip(u).map(|(a, ui)| a + total - ui).collect();
    let b = seq.b().iter().map(|b| b + total).collect();
    BettiSequence::new(a, b, seq.s() + total)
}

/// The lifted sequence with its verdict: essential whenever the input is.
pub fn lift_with_verdict(seq: &BettiSequence, u: &[i64]) -> Result<(BettiSequence, Verdict)> {
    let lifted = lift(seq, u)?;
    let base = classify(seq)?;
    let verdict = if base.is_essential() {
        Verdict::essential(Witness::Lift { base: seq.clone(), u: u.to_vec(), inner: Box::new(base) })
    } else {
        classify(&lifted)?
    };
    Ok((lifted, verdict))
}

/// Betti numbers from the degree matrix `d_ij = b_j - a_i` of a minimal
/// presentation matrix and the degree `c_r` of the `r`-th component of
/// `γ(Mᵀ)` (`r` is 0-based): `s = sum d_ii`, `b_j = s + d_rj - d_rr - c_r`,
/// `a_i = s - d_ir - c_r`.
pub fn recover_from_degree_matrix(d: &DegreeMatrix, r: usize, c_r: i64) -> Result<BettiSequence> {
    let n = d.rows();
    if d.cols() != n {
        return Err(Error::NotSquare { rows: n, cols: d.cols() });
    }
    if r >= n {
        return Err(Error::Dimension(format!("index {r} out of range for size {n}")));
    }
    let s: i64 = (0..n).map(|i| d.get(i, i)).sum();
    let b = (0..n).map(|j| s + d.get(r, j) - d.get(r, r) - c_r).collect();
    let a = (0..n).map(|i| s - d.get(i, r) - c_r).collect();
    BettiSequence::new(a, b, s)
}

/// The `n` sequences obtained by lowering every twist by one except `a_k`.
pub fn decremented_candidates(seq: &BettiSequence) -> Vec<BettiSequence> {
    (0..seq.n())
        .map(|k| {
            let a = seq.a().iter().enumerate().map(|(i, &x)| if i == k { x } else { x - 1 }).collect();
            let b = seq.b().iter().map(|x| x - 1).collect();
            BettiSequence::new(a, b, seq.s() - 1).expect("same length")
        })
        .collect()
}

/// A sequence is minimal when no decremented candidate is essential.
pub fn is_minimal_sequence(seq: &BettiSequence) -> Result<MinimalityReport> {
    let mut candidates = Vec::with_capacity(seq.n());
    for c in decremented_candidates(seq) {
        let v = classify(&c)?;
        candidates.push((c, v));
    }
    let status = if candidates.iter().any(|(_, v)| v.status == Status::Essential) {
        Minimality::NotMinimal
    } else if candidates.iter().any(|(_, v)| v.status == Status::Unknown) {
        Minimality::Unknown
    } else {
        Minimality::Minimal
    };
    Ok(MinimalityReport { status, candidates })
}
