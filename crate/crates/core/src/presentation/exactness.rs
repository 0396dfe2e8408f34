use super::check::{check_presentation, height_or_unit};
use crate::error::{Error, Result};
use crate::groebner::{Budget, GradedResolution, IdealBasis};
use crate::matrices::PolyMatrix;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    /// The map `phi_k: F_k -> F_{k-1}`.
    pub map: usize,
    pub rank: usize,
    /// `rank F_k - rank phi_{k+1}`, the rank `phi_k` must have.
    pub expected_rank: usize,
    /// Height of the ideal of `rank`-minors; `None` for the unit ideal.
    pub minors_height: Option<usize>,
    pub required_height: usize,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub composites_zero: bool,
    pub stages: Vec<StageReport>,
    pub exact: bool,
}

/// Acyclicity of `0 -> F_n -> ... -> F_1 -> F_0` by the Buchsbaum–Eisenbud
/// criterion: `rank phi_k + rank phi_{k+1} = rank F_k` and the ideal of
/// `rank phi_k`-minors of `phi_k` has height at least `k`. Heights stand in
/// for grades, which agree over a polynomial ring.
pub fn verify_exactness(res: &GradedResolution, budget: &Budget) -> Result<ExactnessReport> {
    if !res.composites_vanish()? {
        return Ok(ExactnessReport { composites_zero: false, stages: Vec::new(), exact: false });
    }
    let maps = res.maps();
    let ranks: Vec<usize> = maps.iter().map(|m| m.rank()).collect();
    let mut stages = Vec::with_capacity(maps.len());
    for (idx, m) in maps.iter().enumerate() {
        let k = idx + 1;
        let next = ranks.get(idx + 1).copied().unwrap_or(0);
        let expected = m.cols().saturating_sub(next);
        let rank = ranks[idx];
        let minors_height = if rank == 0 {
            None
        } else {
            let gens: Vec<_> = m.minors(rank).into_iter().filter(|p| !p.is_zero()).collect();
            height_or_unit(&IdealBasis::new(res.ring(), gens)?, budget)?
        };
        let passes = rank == expected && minors_height.map_or(true, |h| h >= k);
        stages.push(StageReport { map: k, rank, expected_rank: expected, minors_height, required_height: k, passes });
    }
    let exact = stages.iter().all(|s| s.passes);
    Ok(ExactnessReport { composites_zero: true, stages, exact })
}

/// Twists making `R <-γ(M)- F_1 <-M- F_2 <-h- R(-s)` graded, from the entry
/// degrees.
fn infer_twists(g: &[crate::ring::Polynomial], m: &PolyMatrix, h: &[crate::ring::Polynomial]) -> Result<(Vec<i64>, Vec<i64>, i64)> {
    let n = g.len();
    let deg = |p: &crate::ring::Polynomial| -> Result<Option<i64>> {
        if p.is_zero() {
            return Ok(None);
        }
        if !p.is_homogeneous() {
            return Err(Error::Grading(format!("entry {p} is not homogeneous")));
        }
        Ok(p.degree().map(|d| d as i64))
    };
    let mut a: Vec<Option<i64>> = g.iter().map(deg).collect::<Result<_>>()?;
    let mut b: Vec<Option<i64>> = vec![None; n];
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                let Some(d) = deg(m.get(i, j))? else { continue };
                match (a[i], b[j]) {
                    (Some(x), None) => {
                        b[j] = Some(x + d);
                        changed = true;
                    }
                    (None, Some(y)) => {
                        a[i] = Some(y - d);
                        changed = true;
                    }
                    (Some(x), Some(y)) if y - x != d => {
                        return Err(Error::Grading(format!("entry ({i},{j}) has degree {d}, twists need {}", y - x)))
                    }
                    _ => {}
                }
            }
        }
    }
    let a: Vec<i64> = a.into_iter().collect::<Option<_>>().ok_or_else(|| Error::Grading("undetermined twist in F_1".into()))?;
    let b: Vec<i64> = b.into_iter().collect::<Option<_>>().ok_or_else(|| Error::Grading("undetermined twist in F_2".into()))?;
    let mut s: Option<i64> = None;
    for (j, p) in h.iter().enumerate() {
        if let Some(d) = deg(p)? {
            match s {
                None => s = Some(b[j] + d),
                Some(v) if v != b[j] + d => return Err(Error::Grading("inconsistent last twist".into())),
                _ => {}
            }
        }
    }
    let s = s.ok_or_else(|| Error::Grading("last map is zero".into()))?;
    let expected = b.iter().sum::<i64>() - a.iter().sum::<i64>();
    if s != expected {
        return Err(Error::Grading(format!("s = {s} but sum b - sum a = {expected}")));
    }
    Ok((a, b, s))
}

/// The resolution `0 -> R(-s) -> ⊕R(-b_j) -M-> ⊕R(-a_i) -γ(M)-> R` of a
/// square presentation matrix, with `γ(Mᵀ)` as the leftmost map. The result
/// is checked with the exactness criterion.
pub fn build_resolution(m: &PolyMatrix, budget: &Budget) -> Result<GradedResolution> {
    let report = check_presentation(m, budget)?;
    if !report.is_presentation {
        let reason = report.failure_reason.map(|f| f.to_string()).unwrap_or_default();
        return Err(Error::NotPresentation(reason));
    }
    let g = report.gamma.unwrap();
    let h = report.gamma_transpose.unwrap();
    let (a, b, s) = infer_twists(&g.components, m, &h.components)?;
    let maps = vec![g.as_row(), m.clone().clear_shifts(), h.as_column()];
    let res = GradedResolution::new(m.ring(), maps, vec![vec![0], a, b, vec![s]])?;
    if !res.is_graded()? {
        return Err(Error::Grading("assembled maps are not graded".into()));
    }
    let exact = verify_exactness(&res, budget)?;
    if !exact.exact {
        return Err(Error::Internal("presentation matrix produced a non-exact complex".into()));
    }
    Ok(res)
}
