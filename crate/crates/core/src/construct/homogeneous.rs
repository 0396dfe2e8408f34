use super::bidiagonal::{cyclic_base, star_product, BidiagonalMatrix};
use super::lift::lift_matrix;
use super::{require_minimal_presentation, sort_to_sequence};
use crate::betti::{classify_homogeneous, BettiSequence};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::matrices::PolyMatrix;
use crate::ring::RingContext;
use serde::Serialize;

/// How a homogeneous sequence with `b - a = D` and `s - b = τ` is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomogeneousRecipe {
    /// Star product of cyclic base matrices with the given `t` values
    /// (a single base matrix when there is one part).
    Star { parts: Vec<usize> },
    /// Lift with `u = (1, ..., 1)` of a recipe with `D - 1`.
    Lift { inner: Box<HomogeneousRecipe> },
}

/// Splits `τ` into `D` parts in `[1, m]`, or lifts when `τ < D`.
pub fn homogeneous_recipe(n: usize, d: usize, tau: usize) -> Result<HomogeneousRecipe> {
    let m = (n - 1) / 2;
    if d == 0 || tau == 0 || tau > m * d {
        return Err(Error::Invalid(format!("no construction for n = {n}, b - a = {d}, s - b = {tau}")));
    }
    if tau < d {
        return Ok(HomogeneousRecipe::Lift { inner: Box::new(homogeneous_recipe(n, d - 1, tau)?) });
    }
    let (q, r) = (tau / d, tau % d);
    Ok(HomogeneousRecipe::Star { parts: (0..d).map(|i| q + usize::from(i < r)).collect() })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogeneousConstruction {
    pub matrix: PolyMatrix,
    pub bidiagonal: BidiagonalMatrix,
    pub sequence: BettiSequence,
    pub recipe: HomogeneousRecipe,
}

fn build(n: usize, recipe: &HomogeneousRecipe, budget: &Budget) -> Result<PolyMatrix> {
    match recipe {
        HomogeneousRecipe::Star { parts } => {
            let names: Vec<String> = if parts.len() == 1 {
                (1..=n).map(|i| format!("x{i}")).collect()
            } else {
                (1..=parts.len()).flat_map(|k| (1..=n).map(move |i| format!("x{k}_{i}"))).collect()
            };
            let ring = RingContext::grevlex(&names)?;
            let mut acc: Option<BidiagonalMatrix> = None;
            for (k, &t) in parts.iter().enumerate() {
                let vars: Vec<usize> = (k * n..(k + 1) * n).collect();
                let base = cyclic_base(&ring, &vars, t)?;
                acc = Some(match acc {
                    None => base,
                    Some(prev) => star_product(&prev, &base)?,
                });
            }
            Ok(acc.expect("at least one part").to_matrix())
        }
        HomogeneousRecipe::Lift { inner } => {
            let m = build(n, inner, budget)?;
            Ok(lift_matrix(&m, &vec![1; n], None, budget)?.matrix)
        }
    }
}

/// A minimal presentation matrix with twists `(a^n; b^n; n(b-a))`: cyclic
/// bidiagonal base matrices for `b - a = 1`, star products of them, and
/// lifts by `u = (1, ..., 1)` when `s - b < b - a`.
pub fn homogeneous_matrix(n: usize, a: i64, b: i64, budget: &Budget) -> Result<HomogeneousConstruction> {
    let verdict = classify_homogeneous(n, a, b)?;
    if !verdict.is_essential() {
        return Err(Error::Invalid(format!("(a, b) = ({a}, {b}) with n = {n} is {}: no construction", verdict.status)));
    }
    let target = BettiSequence::homogeneous(n, a, b)?;
    let tau = (target.s() - b) as usize;
    let recipe = homogeneous_recipe(n, (b - a) as usize, tau)?;
    let matrix = build(n, &recipe, budget)?;
    require_minimal_presentation(&matrix, "homogeneous construction", budget)?;
    let (_, sequence) = sort_to_sequence(&matrix, budget)?;
    if sequence != target {
        return Err(Error::Internal(format!("built {sequence}, wanted {target}")));
    }
    let bidiagonal = BidiagonalMatrix::from_matrix(&matrix)?;
    Ok(HomogeneousConstruction { matrix, bidiagonal, sequence, recipe })
}
