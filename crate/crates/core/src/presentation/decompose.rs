use super::check::height_or_unit;
use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis};
use crate::matrices::PolyMatrix;
use crate::ring::Polynomial;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    /// `B_i = (-1)^i det(B without row i)` for `i = 1..=n+1`.
    pub minors: Vec<Polynomial>,
    /// `(B_1, ..., B_n)`, the minors through the last row `H`.
    pub ideal: Vec<Polynomial>,
    /// Generators of `(h_1, ..., h_n)`, zeros dropped.
    pub ideal_z: Vec<Polynomial>,
    /// `I(B) = (B_1, ..., B_{n+1})`.
    pub ideal_y: Vec<Polynomial>,
    pub height_ideal_y: Option<usize>,
    /// `B_{n+1}` is a nonzerodivisor modulo `(h_1, ..., h_n)`.
    pub regular: bool,
    /// `B_{n+1}` is a unit, so `I(B) = R` and `I = I_Z`.
    pub y_empty: bool,
    /// `I = I(B) ∩ (H)` was verified; `None` when not asserted (not regular).
    pub intersection_identity: Option<bool>,
}

/// Splits `I = (B_1, ..., B_n)` for an `(n+1) x n` matrix `B` of rank `n`
/// whose last row is `H`: when `B_{n+1}` is regular modulo `(H)`,
/// `I = I(B) ∩ (H)`.
pub fn decompose(b: &PolyMatrix, budget: &Budget) -> Result<Decomposition> {
    let n = b.cols();
    if b.rows() != n + 1 {
        return Err(Error::Dimension(format!("expected an (n+1) x n matrix, got {}x{}", b.rows(), n)));
    }
    let rank = b.rank();
    if rank != n {
        return Err(Error::Rank { expected: n, found: rank });
    }
    let ring = b.ring().clone();
    let minors: Vec<Polynomial> = (0..=n)
        .map(|i| {
            let d = b.delete_row_col(Some(i), None).det().expect("square");
            // 1-based sign (-1)^(i+1) for 0-based i
            if i % 2 == 0 {
                -d
            } else {
                d
            }
        })
        .collect();
    let ideal: Vec<Polynomial> = minors[..n].to_vec();
    let ideal_z: Vec<Polynomial> = b.row(n).into_iter().filter(|p| !p.is_zero()).collect();
    let ideal_y: Vec<Polynomial> = minors.clone();
    let iy = IdealBasis::new(&ring, ideal_y.clone())?;
    let height_ideal_y = height_or_unit(&iy, budget)?;
    let last = &minors[n];
    let y_empty = last.is_unit();
    let z = IdealBasis::new(&ring, ideal_z.clone())?;
    let regular = if last.is_zero() {
        false
    } else {
        z.quotient(last, budget)?.same_ideal(&z.reduced(budget)?, budget)?
    };
    let intersection_identity = if regular {
        let i = IdealBasis::new(&ring, ideal.clone())?;
        let both = iy.intersect(&z, budget)?;
        Some(i.contains_ideal(&both, budget)? && both.contains_ideal(&i, budget)?)
    } else {
        None
    };
    Ok(Decomposition { minors, ideal, ideal_z, ideal_y, height_ideal_y, regular, y_empty, intersection_identity })
}
