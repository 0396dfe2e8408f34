use crate::error::{Error, Result};
use crate::groebner::IdealBasis;
use crate::matrices::PolyMatrix;
use crate::ring::{gcd_many, Polynomial, Rat};
use itertools::Itertools;
use serde::Serialize;

/// `γ(M) = (g_1, ..., g_n)`: signed maximal minors of an `n x (n-1)` column
/// submatrix of rank `n - 1`, divided by their gcd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaVector {
    pub components: Vec<Polynomial>,
    /// Columns of the submatrix whose minors were used.
    pub columns: Vec<usize>,
    /// The scalar that made the first nonzero component monic.
    #[serde(serialize_with = "ser_rat")]
    pub unit: Rat,
    pub normalization_note: String,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl GammaVector {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The ideal generated by the components.
    pub fn ideal(&self) -> Result<IdealBasis> {
        let ring = self.components[0].ring();
        IdealBasis::new(ring, self.components.clone())
    }

    /// Indices of the zero components.
    pub fn zero_positions(&self) -> Vec<usize> {
        self.components.iter().enumerate().filter(|(_, p)| p.is_zero()).map(|(i, _)| i).collect()
    }

    /// The components as a `1 x n` row.
    pub fn as_row(&self) -> PolyMatrix {
        let ring = self.components[0].ring();
        PolyMatrix::from_rows(ring, vec![self.components.clone()]).unwrap()
    }

    /// The components as an `n x 1` column.
    pub fn as_column(&self) -> PolyMatrix {
        self.as_row().transpose()
    }
}

/// `g_i(N) = (-1)^(i+1) N_i` (1-based), `N_i` the minor without row `i`.
pub fn signed_minors(n: &PolyMatrix) -> Vec<Polynomial> {
    (0..n.rows())
        .map(|i| {
            let d = n.delete_row_col(Some(i), None).det().expect("square after deleting a row");
            if i % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}

/// Divides by the gcd and makes the first nonzero component monic.
/// Returns the normalized vector and the scalar applied after the division.
pub fn normalize(v: &[Polynomial]) -> Option<(Vec<Polynomial>, Rat)> {
    let g = gcd_many(v.iter().filter(|p| !p.is_zero()))?;
    let divided: Vec<Polynomial> = v.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
    let lc = divided.iter().find(|p| !p.is_zero())?.leading_coeff()?.clone();
    let unit = lc.inv();
    Some((divided.iter().map(|p| p.scale(&unit)).collect(), unit))
}

/// `γ` from a given column subset, or `None` when that submatrix has rank
/// below `n - 1`.
pub fn gamma_from_columns(m: &PolyMatrix, columns: &[usize]) -> Option<GammaVector> {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let sub = m.submatrix(&rows, columns);
    let minors = signed_minors(&sub);
    let (components, unit) = normalize(&minors)?;
    Some(GammaVector {
        components,
        columns: columns.to_vec(),
        unit,
        normalization_note: "divided by the gcd of the signed minors; first nonzero component has leading coefficient 1"
            .into(),
    })
}

/// `γ(M)` for an `n x m` matrix of rank `n - 1`, `m >= n - 1`, using the
/// lexicographically first column subset of rank `n - 1`.
pub fn gamma(m: &PolyMatrix) -> Result<GammaVector> {
    let n = m.rows();
    if n == 0 || n > m.cols() + 1 {
        return Err(Error::Dimension(format!("γ needs at least n - 1 columns, got {}x{}", n, m.cols())));
    }
    let rank = m.rank();
    if rank + 1 != n {
        return Err(Error::Rank { expected: n - 1, found: rank });
    }
    for cols in (0..m.cols()).combinations(n - 1) {
        if let Some(g) = gamma_from_columns(m, &cols) {
            return Ok(g);
        }
    }
    Err(Error::Internal("rank n - 1 but no column subset of full rank".into()))
}
