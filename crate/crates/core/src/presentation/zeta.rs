use super::check::check_presentation;
use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis};
use crate::matrices::PolyMatrix;
use crate::ring::Polynomial;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    /// `ν(I)`, the number of minimal generators of `I_M`.
    pub nu_i: usize,
    /// `ν(J)` for the ideal `J` of `γ(Mᵀ)`.
    pub nu_j: usize,
    pub zeta: usize,
    /// `ρ(1) = (h_1, ..., h_s, 0, ..., 0)` after the change of basis.
    pub normalized_rho: Vec<Polynomial>,
    /// The middle matrix in the new basis; `matrix * normalized_rho = 0`.
    pub matrix: PolyMatrix,
}

/// `ζ(I_M) = ν(I_M) - ν(J)` for a minimal presentation matrix, with the
/// basis change that turns `ρ(1) = γ(Mᵀ)` into `(h_1, ..., h_s, 0, ..., 0)`.
///
/// Components of `γ(Mᵀ)` lying in the ideal of the others are removed in
/// descending index order: if `h_k = sum a_i h_i` then the basis
/// `v_i = e_i + a_i e_k` replaces column `i` of `M` by `M_i + a_i M_k` and
/// zeroes the `k`-th entry of `ρ(1)`. Surviving components are then moved
/// to the front.
pub fn zeta(m: &PolyMatrix, budget: &Budget) -> Result<ZetaReport> {
    let report = check_presentation(m, budget)?;
    if !report.is_minimal_presentation() {
        let why = match &report.failure_reason {
            Some(f) => f.to_string(),
            None => "the presentation is not minimal".into(),
        };
        return Err(Error::NotPresentation(why));
    }
    let ring = m.ring().clone();
    let n = m.rows();
    let mut rho: Vec<Polynomial> = report.gamma_transpose.unwrap().components;
    let mut mat = m.clone().clear_shifts();
    for k in (0..n).rev() {
        if rho[k].is_zero() {
            continue;
        }
        let others: Vec<usize> = (0..n).filter(|&i| i != k && !rho[i].is_zero()).collect();
        if others.is_empty() {
            continue;
        }
        let ideal = IdealBasis::new(&ring, others.iter().map(|&i| rho[i].clone()).collect())?;
        let Some(cof) = ideal.member_with_cofactors(&rho[k], budget)? else { continue };
        for (a, &i) in cof.iter().zip(&others) {
            if a.is_zero() {
                continue;
            }
            for r in 0..n {
                let v = mat.get(r, i) + &(a * mat.get(r, k));
                mat.set(r, i, v);
            }
        }
        rho[k] = Polynomial::zero(&ring);
    }
    // nonzero components first, keeping their order
    let mut perm: Vec<usize> = (0..n).filter(|&i| !rho[i].is_zero()).collect();
    let s = perm.len();
    perm.extend((0..n).filter(|&i| rho[i].is_zero()));
    let rows: Vec<usize> = (0..n).collect();
    let mat = mat.submatrix(&rows, &perm);
    let rho: Vec<Polynomial> = perm.iter().map(|&i| rho[i].clone()).collect();
    let check = mat.mul(&PolyMatrix::from_rows(&ring, vec![rho.clone()])?.transpose())?;
    if !check.is_zero() {
        return Err(Error::Internal("basis change broke M * rho = 0".into()));
    }
    Ok(ZetaReport { nu_i: n, nu_j: s, zeta: n - s, normalized_rho: rho, matrix: mat })
}
