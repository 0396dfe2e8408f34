use super::{sort_to_sequence, Constructed};
use crate::betti::BettiSequence;
use crate::error::{Error, Result};
use crate::groebner::{Budget, IdealBasis};
use crate::matrices::PolyMatrix;
use crate::presentation::{check_presentation, decompose, koszul_matrix, zeta, Decomposition, ZetaReport};
use crate::ring::Polynomial;
use serde::Serialize;

fn degree_of(p: &Polynomial, what: &str) -> Result<i64> {
    if p.is_zero() {
        return Err(Error::Invalid(format!("{what} is zero")));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("{what} = {p}")));
    }
    Ok(p.degree().unwrap_or(0) as i64)
}

fn require_regular(h: &[Polynomial], budget: &Budget) -> Result<()> {
    let ring = h[0].ring();
    let height = IdealBasis::new(ring, h.to_vec())?.height(budget);
    match height {
        Ok(3) => Ok(()),
        Ok(k) => Err(Error::Invalid(format!("(h_1, h_2, h_3) has height {k}, not a regular sequence"))),
        Err(Error::UnitIdeal) => Err(Error::Invalid("(h_1, h_2, h_3) is the unit ideal".into())),
        Err(e) => Err(e),
    }
}

/// `M = diag(g) K(h)` for a regular sequence `h` and nonzero forms `g`, with
/// `I = (h_1 g_2 g_3, h_2 g_1 g_3, h_3 g_1 g_2)` and the predicted sequence
/// `(a + d_i - a_i; a + d - d_i; a + d)`, `d_i = deg h_i`, `a_i = deg g_i`.
pub fn prop_bet(h: &[Polynomial; 3], g: &[Polynomial; 3], budget: &Budget) -> Result<Constructed> {
    let ring = h[0].ring().clone();
    let mut d = [0i64; 3];
    let mut a = [0i64; 3];
    for i in 0..3 {
        d[i] = degree_of(&h[i], &format!("h_{}", i + 1))?;
        a[i] = degree_of(&g[i], &format!("g_{}", i + 1))?;
    }
    require_regular(h, budget)?;
    let mut diag = PolyMatrix::zeros(&ring, 3, 3);
    for i in 0..3 {
        diag.set(i, i, g[i].clone());
    }
    let m = diag.mul(&koszul_matrix(h))?;
    let (sa, sd) = (a.iter().sum::<i64>(), d.iter().sum::<i64>());
    let predicted = BettiSequence::new(
        (0..3).map(|i| sa + d[i] - a[i]).collect(),
        (0..3).map(|i| sa + sd - d[i]).collect(),
        sa + sd,
    )?;
    let generators = vec![&h[0] * &(&g[1] * &g[2]), &h[1] * &(&g[0] * &g[2]), &h[2] * &(&g[0] * &g[1])];
    let report = check_presentation(&m, budget)?;
    if !report.is_minimal_presentation() {
        let why = report.failure_reason.map(|f| f.to_string()).unwrap_or_else(|| "not minimal".into());
        return Err(Error::Invalid(format!("g and h give no minimal presentation: {why}")));
    }
    let ideal = IdealBasis::new(&ring, generators)?;
    if ideal.height(budget)? < 2 {
        return Err(Error::Invalid("the ideal has height 1; choose g without common factors".into()));
    }
    let (matrix, sequence) = sort_to_sequence(&m, budget)?;
    if sequence != predicted {
        return Err(Error::Internal(format!("predicted {predicted}, resolution gives {sequence}")));
    }
    Ok(Constructed { matrix, sequence, ideal: ideal.generators().to_vec(), recipe: vec![format!("three generators: deg h = {d:?}, deg g = {a:?}")] })
}

/// An `(n+1) x n` matrix `B` whose last row is `H = (h_1, h_2, h_3, 0, ..., 0)`.
#[derive(Clone, Debug)]
pub struct HilbertBurchData {
    b: PolyMatrix,
}

impl HilbertBurchData {
    pub fn new(b: PolyMatrix) -> Result<Self> {
        let n = b.cols();
        if n < 3 || b.rows() != n + 1 {
            return Err(Error::Dimension(format!("expected an (n+1) x n matrix with n >= 3, got {}x{n}", b.rows())));
        }
        if let Some(j) = (3..n).find(|&j| !b.get(n, j).is_zero()) {
            return Err(Error::Invalid(format!("last row must vanish after three entries; column {j} is nonzero")));
        }
        Ok(HilbertBurchData { b })
    }

    pub fn n(&self) -> usize {
        self.b.cols()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.b
    }

    /// Index of the row `H`.
    pub fn distinguished_row(&self) -> usize {
        self.n()
    }

    pub fn h(&self) -> [Polynomial; 3] {
        let n = self.n();
        [self.b.get(n, 0).clone(), self.b.get(n, 1).clone(), self.b.get(n, 2).clone()]
    }

    /// The first three columns above `H`.
    pub fn a_block(&self) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.n()).collect();
        self.b.submatrix(&rows, &[0, 1, 2])
    }

    /// The remaining `n - 3` columns above `H`.
    pub fn c_block(&self) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.n()).collect();
        let cols: Vec<usize> = (3..self.n()).collect();
        self.b.submatrix(&rows, &cols)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertBurchIdeal {
    /// `(B_1, ..., B_n)`.
    pub ideal: Vec<Polynomial>,
    /// `M = (AK | C)`.
    pub matrix: PolyMatrix,
    pub zeta: ZetaReport,
    pub decomposition: Decomposition,
}

/// The ideal of the signed minors of `B` through `H` and its presentation
/// matrix `(AK | C)`, which has maximal `ζ = n - 3`.
pub fn hilbert_burch_ideal(data: &HilbertBurchData, budget: &Budget) -> Result<HilbertBurchIdeal> {
    let n = data.n();
    let b = data.matrix();
    let rank = b.rank();
    if rank != n {
        return Err(Error::Rank { expected: n, found: rank });
    }
    if let Some(p) = b.entries().find(|p| p.is_unit()) {
        return Err(Error::Invalid(format!("B has the unit entry {p}, so it is not minimal")));
    }
    let h = data.h();
    for (i, p) in h.iter().enumerate() {
        degree_of(p, &format!("h_{}", i + 1))?;
    }
    require_regular(&h, budget)?;
    let decomposition = decompose(b, budget)?;
    if decomposition.height_ideal_y.is_some_and(|k| k < 2) {
        return Err(Error::Invalid("the maximal minors of B generate an ideal of height below 2".into()));
    }
    let m = data.a_block().mul(&koszul_matrix(&h))?.hstack(&data.c_block())?;
    let report = check_presentation(&m, budget)?;
    if !report.is_minimal_presentation() {
        let why = report.failure_reason.map(|f| f.to_string()).unwrap_or_else(|| "not minimal".into());
        return Err(Error::Internal(format!("(AK | C) is not a minimal presentation matrix: {why}")));
    }
    let gamma_ideal = report.gamma.as_ref().expect("presentation").ideal()?;
    let minors = IdealBasis::new(b.ring(), decomposition.ideal.clone())?;
    if !gamma_ideal.same_ideal(&minors, budget)? {
        return Err(Error::Internal("γ(M) and the minors of B generate different ideals".into()));
    }
    let z = zeta(&m, budget)?;
    if z.zeta != n - 3 {
        return Err(Error::Internal(format!("ζ = {} but n - 3 = {}", z.zeta, n - 3)));
    }
    Ok(HilbertBurchIdeal { ideal: decomposition.ideal.clone(), matrix: m, zeta: z, decomposition })
}
