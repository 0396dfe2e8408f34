use super::{require_minimal_presentation, sort_to_sequence};
use crate::betti::{reduce_at, reduction_indices, BettiSequence};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::matrices::PolyMatrix;
use crate::presentation::gamma;
use crate::ring::Polynomial;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct NoGaetaExtension {
    pub matrix: PolyMatrix,
    pub sequence: BettiSequence,
    pub y_vars: Vec<String>,
    pub z_vars: Vec<String>,
}

/// Builds a presentation matrix for `outer` from one for the sequence that
/// `outer` reduces to at `t`: the inner matrix fills rows `1..t-1`, columns
/// `n+2-t..n`; `y_i^{b_j - a_i}` sits at `i + j = n` for `t-1 <= i <= n-1`
/// and `z_i^{b_j - a_i}` at `i + j = n + 1` for `t <= i <= n` (1-based).
pub fn nogaeta_extend(inner: &PolyMatrix, outer: &BettiSequence, t: usize, budget: &Budget) -> Result<NoGaetaExtension> {
    let n = outer.n();
    if !reduction_indices(outer).contains(&t) {
        return Err(Error::Invalid(format!("t = {t} is not admissible for {outer}: need t >= 4 and b_(n+2-t) <= a_t")));
    }
    let step = reduce_at(outer, t).map_err(|v| {
        Error::Invalid(format!("{outer} fails {}", v.violated_condition().unwrap_or("a necessary condition")))
    })?;
    if inner.rows() != t - 1 || !inner.is_square() {
        return Err(Error::Dimension(format!("inner matrix must be {0}x{0}", t - 1)));
    }
    let (inner, inner_seq) = sort_to_sequence(inner, budget)?;
    if inner_seq != step.after {
        return Err(Error::Invalid(format!("inner matrix realizes {inner_seq}, the reduction needs {}", step.after)));
    }
    let k = n - t + 1;
    let y_vars = inner.ring().fresh_names("y", k);
    let with_y = inner.ring().extend(&y_vars)?;
    let z_vars = with_y.fresh_names("z", k);
    let ring = with_y.extend(&z_vars)?;
    let base = inner.ring().nvars();
    let inner = inner.embed(&ring);
    let (a, b) = (|i: usize| outer.a_at(i), |j: usize| outer.b_at(j));
    let mut m = PolyMatrix::zeros(&ring, n, n);
    for i in 1..t {
        for j in (n + 2 - t)..=n {
            m.set(i - 1, j - 1, inner.get(i - 1, j - 1 - (n + 1 - t)).clone());
        }
    }
    for i in (t - 1)..n {
        let j = n - i;
        let e = b(j) - a(i);
        let y = Polynomial::var(&ring, base + (i - (t - 1)));
        m.set(i - 1, j - 1, y.pow(e as u32));
    }
    for i in t..=n {
        let j = n + 1 - i;
        let e = b(j) - a(i);
        let z = Polynomial::var(&ring, base + k + (i - t));
        m.set(i - 1, j - 1, z.pow(e as u32));
    }
    require_minimal_presentation(&m, "extended matrix", budget)?;
    let h = gamma(&m.transpose())?;
    if h.components[..k].iter().any(|p| !p.is_zero()) {
        return Err(Error::Internal("γ(Mᵀ) should vanish in its first n - t + 1 slots".into()));
    }
    let (_, sequence) = sort_to_sequence(&m, budget)?;
    if &sequence != outer {
        return Err(Error::Internal(format!("extension realizes {sequence}, wanted {outer}")));
    }
    Ok(NoGaetaExtension { matrix: m, sequence, y_vars, z_vars })
}
