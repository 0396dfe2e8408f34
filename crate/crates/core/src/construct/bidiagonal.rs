use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::matrices::PolyMatrix;
use crate::presentation::{check_presentation, gamma};
use crate::ring::{Polynomial, Ring, RingContext};
use serde::Serialize;

/// A square matrix supported on the diagonal and the cyclic superdiagonal
/// `m_{1,2}, ..., m_{n-1,n}, m_{n,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidiagonalMatrix {
    pub diag: Vec<Polynomial>,
    /// `superdiag[i] = m_{i,i+1}`, with `superdiag[n-1] = m_{n,1}`.
    pub superdiag: Vec<Polynomial>,
}

impl BidiagonalMatrix {
    pub fn new(diag: Vec<Polynomial>, superdiag: Vec<Polynomial>) -> Result<Self> {
        if diag.len() != superdiag.len() || diag.len() < 3 {
            return Err(Error::Dimension(format!(
                "bidiagonal needs equal lengths >= 3, got {} and {}",
                diag.len(),
                superdiag.len()
            )));
        }
        let ring = diag[0].ring();
        if diag.iter().chain(&superdiag).any(|p| !RingContext::same(p.ring(), ring)) {
            return Err(Error::Invalid("entries live in different rings".into()));
        }
        Ok(BidiagonalMatrix { diag, superdiag })
    }

    pub fn from_matrix(m: &PolyMatrix) -> Result<Self> {
        let n = m.rows();
        if !m.is_square() {
            return Err(Error::NotSquare { rows: n, cols: m.cols() });
        }
        for i in 0..n {
            for j in 0..n {
                if j != i && j != (i + 1) % n && !m.get(i, j).is_zero() {
                    return Err(Error::Invalid(format!("entry ({i},{j}) is off the bidiagonal")));
                }
            }
        }
        BidiagonalMatrix::new((0..n).map(|i| m.get(i, i).clone()).collect(), (0..n).map(|i| m.get(i, (i + 1) % n).clone()).collect())
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn ring(&self) -> &Ring {
        self.diag[0].ring()
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        let n = self.size();
        let mut m = PolyMatrix::zeros(self.ring(), n, n);
        for i in 0..n {
            m.set(i, i, self.diag[i].clone());
            m.set(i, (i + 1) % n, self.superdiag[i].clone());
        }
        m
    }

    /// `∏ m_ii + (-1)^(n+1) ∏ m_{i,i+1}`.
    pub fn det(&self) -> Polynomial {
        let one = Polynomial::one(self.ring());
        let d = self.diag.iter().fold(one.clone(), |acc, p| &acc * p);
        let s = self.superdiag.iter().fold(one, |acc, p| &acc * p);
        if self.size() % 2 == 1 {
            &d + &s
        } else {
            &d - &s
        }
    }

    fn variables(&self) -> Vec<bool> {
        let r = self.ring();
        (0..r.nvars()).map(|v| self.diag.iter().chain(&self.superdiag).any(|p| p.uses_var(v))).collect()
    }

    /// The common degree of the nonzero entries.
    fn entry_degree(&self) -> Result<Option<u32>> {
        let mut deg = None;
        for p in self.diag.iter().chain(&self.superdiag).filter(|p| !p.is_zero()) {
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(p.to_string()));
            }
            match (deg, p.degree()) {
                (None, d) => deg = d,
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::Grading(format!("entries of degrees {a} and {b}")));
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

/// `t_ii = m_ii n_ii`, `t_{i,i+1} = -m_{i,i+1} n_{i,i+1}` for factors in
/// disjoint sets of variables of one ring, each with entries of a single
/// degree.
pub fn star_product(m: &BidiagonalMatrix, n: &BidiagonalMatrix) -> Result<BidiagonalMatrix> {
    if m.size() != n.size() {
        return Err(Error::Dimension(format!("sizes {} and {}", m.size(), n.size())));
    }
    if !RingContext::same(m.ring(), n.ring()) {
        return Err(Error::Invalid("embed both factors in one ring first".into()));
    }
    m.entry_degree()?;
    n.entry_degree()?;
    let (vm, vn) = (m.variables(), n.variables());
    if let Some(v) = (0..vm.len()).find(|&v| vm[v] && vn[v]) {
        return Err(Error::Invalid(format!("both factors use the variable {}", m.ring().vars()[v])));
    }
    let diag = m.diag.iter().zip(&n.diag).map(|(a, b)| a * b).collect();
    let superdiag = m.superdiag.iter().zip(&n.superdiag).map(|(a, b)| -&(a * b)).collect();
    BidiagonalMatrix::new(diag, superdiag)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCheck {
    pub det_zero: bool,
    pub is_presentation: bool,
    pub is_minimal: bool,
    /// `γ((M*N)ᵀ) = (h_1 k_1, ..., h_n k_n)`.
    pub gamma_product: bool,
}

impl StarCheck {
    pub fn passes(&self) -> bool {
        self.det_zero && self.is_presentation && self.is_minimal && self.gamma_product
    }
}

/// Checks a star product against its factors.
pub fn verify_star_product(
    m: &BidiagonalMatrix,
    n: &BidiagonalMatrix,
    product: &BidiagonalMatrix,
    budget: &Budget,
) -> Result<StarCheck> {
    let p = product.to_matrix();
    let report = check_presentation(&p, budget)?;
    let h = gamma(&m.to_matrix().transpose())?.components;
    let k = gamma(&n.to_matrix().transpose())?.components;
    let expected: Vec<Polynomial> = h.iter().zip(&k).map(|(a, b)| a * b).collect();
    let gamma_product = report.gamma_transpose.as_ref().is_some_and(|g| g.components == expected);
    Ok(StarCheck {
        det_zero: product.det().is_zero(),
        is_presentation: report.is_presentation,
        is_minimal: report.is_minimal,
        gamma_product,
    })
}

/// The cyclic monomial matrix on variables `x_0, ..., x_{n-1}`:
/// `m_ii = x_{i-1}`, `m_{i,i+1} = -x_{i+a}` (indices mod `n`) with
/// `a = n - 1 - t`. Its ideal is generated by the products of `a`
/// cyclically consecutive variables and `γ(Mᵀ)` by products of `t` of
/// them, so the twists are `(a^n; (a+1)^n; n)`. Needs `1 <= t < n/2`.
pub fn cyclic_base(ring: &Ring, vars: &[usize], t: usize) -> Result<BidiagonalMatrix> {
    let n = vars.len();
    if n < 3 || t == 0 || 2 * t >= n {
        return Err(Error::Invalid(format!("cyclic base needs n >= 3 and 1 <= t < n/2, got n = {n}, t = {t}")));
    }
    let a = n - 1 - t;
    let x = |k: usize| Polynomial::var(ring, vars[k % n]);
    let diag = (0..n).map(|i| x(i + n - 1)).collect();
    let superdiag = (0..n).map(|i| -&x(i + a)).collect();
    BidiagonalMatrix::new(diag, superdiag)
}
