//! Presentation matrices: `γ(M)`, the presentation test, the length-three
//! resolution of a square presentation matrix, `ζ` and the splitting of
//! Hilbert–Burch ideals.

mod check;
mod decompose;
mod exactness;
mod gamma;
mod zeta;

pub use check::{check_presentation, check_presentation_rect, PresentationFailure, PresentationReport};
pub use decompose::{decompose, Decomposition};
pub use exactness::{build_resolution, verify_exactness, ExactnessReport, StageReport};
pub use gamma::{gamma, gamma_from_columns, normalize, signed_minors, GammaVector};
pub use zeta::{zeta, ZetaReport};

/// The `3 x 3` Koszul matrix `[[0, h3, -h2], [-h3, 0, h1], [h2, -h1, 0]]`.
pub fn koszul_matrix(h: &[crate::ring::Polynomial; 3]) -> crate::matrices::PolyMatrix {
    let ring = h[0].ring();
    let z = crate::ring::Polynomial::zero(ring);
    crate::matrices::PolyMatrix::from_rows(
        ring,
        vec![
            vec![z.clone(), h[2].clone(), -&h[1]],
            vec![-&h[2], z.clone(), h[0].clone()],
            vec![h[1].clone(), -&h[0], z],
        ],
    )
    .expect("square")
}
