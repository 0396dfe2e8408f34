//! Explicit matrices and ideals realizing prescribed Betti sequences.

mod bidiagonal;
mod hilbert_burch;
mod homogeneous;
mod lift;
mod nogaeta;

pub use bidiagonal::{cyclic_base, star_product, verify_star_product, BidiagonalMatrix, StarCheck};
pub use hilbert_burch::{hilbert_burch_ideal, prop_bet, HilbertBurchData, HilbertBurchIdeal};
pub use homogeneous::{homogeneous_matrix, homogeneous_recipe, HomogeneousConstruction, HomogeneousRecipe};
pub use lift::{lift_matrix, LiftedMatrix};
pub use nogaeta::{nogaeta_extend, NoGaetaExtension};

use crate::betti::{classify, BettiSequence, Verdict, Witness};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::matrices::PolyMatrix;
use crate::presentation::{build_resolution, check_presentation, gamma};
use crate::ring::{Polynomial, RingContext};
use serde::Serialize;

/// A matrix together with the sequence it realizes.
#[derive(Clone, Debug, Serialize)]
pub struct Constructed {
    /// Rows ordered by ascending generator degree, columns by descending
    /// syzygy degree.
    pub matrix: PolyMatrix,
    pub sequence: BettiSequence,
    pub ideal: Vec<Polynomial>,
    pub recipe: Vec<String>,
}

pub(crate) fn require_minimal_presentation(m: &PolyMatrix, what: &str, budget: &Budget) -> Result<()> {
    let report = check_presentation(m, budget)?;
    if report.is_minimal_presentation() {
        return Ok(());
    }
    let why = report.failure_reason.map(|f| f.to_string()).unwrap_or_else(|| "it has a unit entry".into());
    Err(Error::NotPresentation(format!("{what}: {why}")))
}

/// Reorders rows by ascending `a_i` and columns by descending `b_j`, reading
/// the twists off the verified length-three resolution.
pub fn sort_to_sequence(m: &PolyMatrix, budget: &Budget) -> Result<(PolyMatrix, BettiSequence)> {
    let res = build_resolution(m, budget)?;
    let shifts = res.shifts();
    let (a, b) = (&shifts[1], &shifts[2]);
    let mut rows: Vec<usize> = (0..a.len()).collect();
    rows.sort_by_key(|&i| a[i]);
    let mut cols: Vec<usize> = (0..b.len()).collect();
    cols.sort_by_key(|&j| std::cmp::Reverse(b[j]));
    let sorted = m.submatrix(&rows, &cols).clear_shifts();
    Ok((sorted, BettiSequence::new(a.clone(), b.clone(), shifts[3][0])?))
}

/// The Betti sequence of `I_M` from a minimal free resolution computed from
/// scratch by Gröbner bases.
pub fn resolve_sequence(m: &PolyMatrix, budget: &Budget) -> Result<BettiSequence> {
    let ideal = gamma(m)?.ideal()?;
    let res = ideal.minimal_free_resolution(4, budget)?;
    if res.length() != 3 {
        return Err(Error::Internal(format!("resolution of length {}, expected 3", res.length())));
    }
    BettiSequence::from_shifts(&res.sorted_shifts())
}

fn realize_witness(seq: &BettiSequence, verdict: &Verdict, budget: &Budget) -> Result<(PolyMatrix, Vec<String>)> {
    let witness = verdict
        .witness
        .as_ref()
        .ok_or_else(|| Error::Invalid(format!("no recipe recorded for {seq}")))?;
    match witness {
        Witness::ThreeGenerators { c, t } => {
            let ring = RingContext::grevlex(&["x", "y", "z", "u", "v", "w"])?;
            let v = |i: usize, e: i64| Polynomial::var(&ring, i).pow(e as u32);
            let h = [v(0, c[0]), v(1, c[1]), v(2, c[2])];
            let g = [v(3, t[0]), v(4, t[1]), v(5, t[2])];
            let built = prop_bet(&h, &g, budget)?;
            Ok((built.matrix, built.recipe))
        }
        Witness::Reduction { steps, residue, inner } => {
            let (mut m, mut recipe) = realize_witness(residue, inner, budget)?;
            for step in steps.iter().rev() {
                m = nogaeta_extend(&m, &step.before, step.t, budget)?.matrix;
                recipe.push(format!("extend to {} at t = {} (d = {})", step.before, step.t, step.d));
            }
            Ok((m, recipe))
        }
        Witness::Homogeneous { n, a, b, .. } => {
            let built = homogeneous_matrix(*n, *a, *b, budget)?;
            Ok((built.matrix, vec![format!("homogeneous: {:?}", built.recipe)]))
        }
        Witness::Lift { base, u, inner } => {
            let (m, mut recipe) = realize_witness(base, inner, budget)?;
            let (m, _) = sort_to_sequence(&m, budget)?;
            let lifted = lift_matrix(&m, u, None, budget)?;
            recipe.push(format!("lift by u = {u:?}"));
            Ok((lifted.matrix, recipe))
        }
        Witness::Catalog { name } => Err(Error::Invalid(format!(
            "{seq} is essential by the stored ideal '{name}', which has no stored presentation matrix"
        ))),
        Witness::Violated { .. } | Witness::Undecided { .. } => {
            Err(Error::Invalid(format!("{seq} is {}: nothing to construct", verdict.status)))
        }
    }
}

/// Classifies `seq` and, when it is essential, executes the recorded recipe
/// and checks that the result realizes `seq`.
pub fn realize(seq: &BettiSequence, budget: &Budget) -> Result<Constructed> {
    let verdict = classify(seq)?;
    if !verdict.is_essential() {
        return Err(Error::Invalid(format!("{seq} is {}: nothing to construct", verdict.status)));
    }
    let (m, recipe) = realize_witness(seq, &verdict, budget)?;
    let (matrix, sequence) = sort_to_sequence(&m, budget)?;
    if &sequence != seq {
        return Err(Error::Internal(format!("recipe realized {sequence}, wanted {seq}")));
    }
    let ideal = gamma(&matrix)?.components;
    Ok(Constructed { matrix, sequence, ideal, recipe })
}

#[cfg(test)]
mod tests;
