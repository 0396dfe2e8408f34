use super::gamma::{gamma, GammaVector};
use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis, ModuleBasis};
use crate::matrices::PolyMatrix;
use crate::ring::Polynomial;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresentationFailure {
    NotSquare { rows: usize, cols: usize },
    TooSmall { size: usize },
    Rank { expected: usize, found: usize },
    /// Some cofactor is not `u g_i h_j` for a common `u`.
    CofactorMismatch { row: usize, col: usize },
    /// `M^C = u (g_i h_j)` with `u` not a constant.
    CofactorUnitNotConstant,
    /// The ideal `J` of `γ(Mᵀ)` has height below 3.
    HeightJ { height: usize },
}

impl std::fmt::Display for PresentationFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PresentationFailure::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            PresentationFailure::TooSmall { size } => write!(f, "size {size} is below 2"),
            PresentationFailure::Rank { expected, found } => write!(f, "rank is {found}, expected {expected}"),
            PresentationFailure::CofactorMismatch { row, col } => {
                write!(f, "cofactor ({row},{col}) is not u*g_i*h_j for a common u")
            }
            PresentationFailure::CofactorUnitNotConstant => write!(f, "cofactor factor u is not a unit"),
            PresentationFailure::HeightJ { height } => write!(f, "height(J) = {height} < 3"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub is_presentation: bool,
    pub rank: usize,
    pub gamma: Option<GammaVector>,
    pub gamma_transpose: Option<GammaVector>,
    /// The `u` with `M^C = u (g_i h_j)`, when such a polynomial exists.
    pub cofactor_unit: Option<Polynomial>,
    /// Height of the ideal of `γ(Mᵀ)`; `None` when it is the unit ideal.
    pub height_j: Option<usize>,
    pub is_minimal: bool,
    /// Positions `j` with `h_j = 0`.
    pub zero_h: Vec<usize>,
    pub failure_reason: Option<PresentationFailure>,
}

impl PresentationReport {
    fn failed(m: &PolyMatrix, rank: usize, reason: PresentationFailure) -> Self {
        PresentationReport {
            is_presentation: false,
            rank,
            gamma: None,
            gamma_transpose: None,
            cofactor_unit: None,
            height_j: None,
            is_minimal: m.is_minimal(),
            zero_h: Vec::new(),
            failure_reason: Some(reason),
        }
    }

    pub fn is_minimal_presentation(&self) -> bool {
        self.is_presentation && self.is_minimal
    }
}

/// Height of an ideal, `None` for the unit ideal.
pub(crate) fn height_or_unit(ideal: &IdealBasis, budget: &Budget) -> Result<Option<usize>> {
    match ideal.height(budget) {
        Ok(h) => Ok(Some(h)),
        Err(Error::UnitIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Solves `M^C = u (g_i h_j)` for `u`, or reports the first failing entry.
pub(crate) fn cofactor_factor(
    cof: &PolyMatrix,
    g: &[Polynomial],
    h: &[Polynomial],
) -> std::result::Result<Polynomial, (usize, usize)> {
    let n = g.len();
    let ring = cof.ring();
    let mut u: Option<Polynomial> = None;
    'find: for i in 0..n {
        for j in 0..n {
            let gh = &g[i] * &h[j];
            if !gh.is_zero() {
                u = Some(cof.get(i, j).div_exact(&gh).ok_or((i, j))?);
                break 'find;
            }
        }
    }
    let u = u.unwrap_or_else(|| Polynomial::zero(ring));
    for i in 0..n {
        for j in 0..n {
            if *cof.get(i, j) != &u * &(&g[i] * &h[j]) {
                return Err((i, j));
            }
        }
    }
    Ok(u)
}

/// Decides whether a square matrix is a presentation matrix: rank `n - 1`,
/// `M^C = u (g_i h_j)` with `u` a nonzero constant, and `height(J) >= 3`.
pub fn check_presentation(m: &PolyMatrix, budget: &Budget) -> Result<PresentationReport> {
    let n = m.rows();
    if !m.is_square() {
        return Ok(PresentationReport::failed(m, m.rank(), PresentationFailure::NotSquare { rows: n, cols: m.cols() }));
    }
    if n < 2 {
        return Ok(PresentationReport::failed(m, m.rank(), PresentationFailure::TooSmall { size: n }));
    }
    let rank = m.rank();
    if rank + 1 != n {
        return Ok(PresentationReport::failed(m, rank, PresentationFailure::Rank { expected: n - 1, found: rank }));
    }
    let g = gamma(m)?;
    let h = gamma(&m.transpose())?;
    let cof = m.cofactor_matrix()?;
    let mut report = PresentationReport {
        is_presentation: false,
        rank,
        zero_h: h.zero_positions(),
        gamma: Some(g.clone()),
        gamma_transpose: Some(h.clone()),
        cofactor_unit: None,
        height_j: None,
        is_minimal: m.is_minimal(),
        failure_reason: None,
    };
    report.height_j = height_or_unit(&h.ideal()?, budget)?;
    match cofactor_factor(&cof, &g.components, &h.components) {
        Err((row, col)) => report.failure_reason = Some(PresentationFailure::CofactorMismatch { row, col }),
        Ok(u) => {
            let unit = u.is_unit();
            report.cofactor_unit = Some(u);
            if !unit {
                report.failure_reason = Some(PresentationFailure::CofactorUnitNotConstant);
            }
        }
    }
    if report.failure_reason.is_none() {
        if let Some(hj) = report.height_j.filter(|&x| x < 3) {
            report.failure_reason = Some(PresentationFailure::HeightJ { height: hj });
        }
    }
    report.is_presentation = report.failure_reason.is_none();
    Ok(report)
}

/// Presentation test for an `n x m` matrix of rank `n - 1`: every syzygy of
/// `γ(M)` lies in the column module of `M`.
pub fn check_presentation_rect(m: &PolyMatrix, budget: &Budget) -> Result<bool> {
    let g = gamma(m)?;
    let syz = g.ideal()?.syzygies(budget)?;
    let cols = ModuleBasis::new(m.ring(), m.rows(), m.columns())?;
    cols.contains_module(&syz, budget)
}
