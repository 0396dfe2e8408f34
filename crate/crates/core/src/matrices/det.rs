use super::PolyMatrix;
use crate::ring::Polynomial;

fn weight(p: &Polynomial) -> (u32, usize) {
    (p.degree().unwrap_or(0), p.num_terms())
}

/// Fraction-free elimination with full pivoting on the lightest entry.
/// Returns the number of pivots, the sign of the permutations applied and
/// the final pivot (the determinant up to sign when the matrix is square of
/// full rank).
fn bareiss(m: &PolyMatrix) -> (usize, bool, Polynomial) {
    let ring = m.ring().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Polynomial>> = (0..rows).map(|i| m.row(i)).collect();
    let mut prev = Polynomial::one(&ring);
    let mut negate = false;
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| weight(&a[i][j]) < weight(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != k {
            a.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = Polynomial::zero(&ring);
        }
        prev = a[k][k].clone();
        k += 1;
    }
    (k, negate, prev)
}

pub(super) fn bareiss_det(m: &PolyMatrix) -> Polynomial {
    let n = m.rows();
    if n == 0 {
        return Polynomial::one(m.ring());
    }
    if n <= 2 {
        return det_by_expansion(m);
    }
    let (rank, negate, last) = bareiss(m);
    if rank < n {
        return Polynomial::zero(m.ring());
    }
    if negate {
        -last
    } else {
        last
    }
}

pub(super) fn bareiss_rank(m: &PolyMatrix) -> usize {
    bareiss(m).0
}

/// Laplace expansion along the first row. Exponential; meant for small
/// sizes and as an independent check.
pub fn det_by_expansion(m: &PolyMatrix) -> Polynomial {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    match n {
        0 => Polynomial::one(m.ring()),
        1 => m.get(0, 0).clone(),
        2 => &(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0)),
        _ => {
            let mut acc = Polynomial::zero(m.ring());
            for j in 0..n {
                let e = m.get(0, j);
                if e.is_zero() {
                    continue;
                }
                let sub = det_by_expansion(&m.delete_row_col(Some(0), Some(j)));
                let t = e * &sub;
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}
