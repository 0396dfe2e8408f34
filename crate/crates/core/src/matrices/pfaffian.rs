use super::PolyMatrix;
use crate::ring::Polynomial;

/// Expansion along the first row:
/// `pf(A) = sum_{j>0} (-1)^(j+1) a_0j pf(A without rows/columns 0, j)`.
pub(super) fn pfaffian(m: &PolyMatrix) -> Polynomial {
    let n = m.rows();
    if n == 0 {
        return Polynomial::one(m.ring());
    }
    if n % 2 == 1 {
        return Polynomial::zero(m.ring());
    }
    let mut acc = Polynomial::zero(m.ring());
    for j in 1..n {
        let e = m.get(0, j);
        if e.is_zero() {
            continue;
        }
        let idx: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let t = e * &pfaffian(&m.submatrix(&idx, &idx));
        acc = if j % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    acc
}
