use super::require_minimal_presentation;
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::matrices::PolyMatrix;
use crate::ring::{Polynomial, Ring};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct LiftedMatrix {
    pub matrix: PolyMatrix,
    /// Names of the new variables `y_1, ..., y_n`.
    pub fresh_vars: Vec<String>,
    pub u: Vec<i64>,
}

/// `M' = (y_i^{u_i} m_ij)` over `R[y_1, ..., y_n]`: row `i` is scaled by
/// `y_i^{u_i}`, so `γ(M')_i = γ(M)_i ∏_{j != i} y_j^{u_j}` and the twists
/// become `(a_i + U - u_i; b_j + U; s + U)`.
///
/// `fresh` names the new variables; by default `y1, y2, ...` skipping names
/// already in use.
pub fn lift_matrix(m: &PolyMatrix, u: &[i64], fresh: Option<&[String]>, budget: &Budget) -> Result<LiftedMatrix> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::NotSquare { rows: n, cols: m.cols() });
    }
    if u.len() != n {
        return Err(Error::Dimension(format!("{} exponents for size {n}", u.len())));
    }
    if let Some(x) = u.iter().find(|&&x| x < 0) {
        return Err(Error::Invalid(format!("negative exponent {x}")));
    }
    require_minimal_presentation(m, "input", budget)?;
    let names: Vec<String> = match fresh {
        Some(f) if f.len() != n => return Err(Error::Dimension(format!("{} fresh names for size {n}", f.len()))),
        Some(f) => f.to_vec(),
        None => m.ring().fresh_names("y", n),
    };
    let ring: Ring = m.ring().extend(&names)?;
    let base = m.ring().nvars();
    let mut out = m.embed(&ring);
    for i in 0..n {
        let factor = Polynomial::var(&ring, base + i).pow(u[i] as u32);
        for j in 0..n {
            let v = &factor * out.get(i, j);
            out.set(i, j, v);
        }
    }
    require_minimal_presentation(&out, "lifted matrix", budget)?;
    Ok(LiftedMatrix { matrix: out, fresh_vars: names, u: u.to_vec() })
}
