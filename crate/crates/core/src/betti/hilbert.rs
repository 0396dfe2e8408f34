use super::BettiSequence;

/// `binom(m, k)` with `binom(m, k) = 0` for `m < k`.
pub fn binom_or_zero(m: i64, k: i64) -> i128 {
    if k < 0 || m < k {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Dimension of `R(-shift)_degree` for a polynomial ring in `num_vars`
/// variables.
fn free_rank(degree: i64, shift: i64, num_vars: usize) -> i128 {
    let nv = num_vars as i64;
    binom_or_zero(degree - shift + nv - 1, nv - 1)
}

/// Alternating sum for `0 -> R(-s) -> ⊕R(-b_j) -> ⊕R(-a_i) -> R`; with
/// `s = None` and empty lists this is the Hilbert function of `R`.
pub fn hilbert_from_twists(a: &[i64], b: &[i64], s: Option<i64>, degree: i64, num_vars: usize) -> i128 {
    let mut h = free_rank(degree, 0, num_vars);
    h -= a.iter().map(|&x| free_rank(degree, x, num_vars)).sum::<i128>();
    h += b.iter().map(|&x| free_rank(degree, x, num_vars)).sum::<i128>();
    if let Some(s) = s {
        h -= free_rank(degree, s, num_vars);
    }
    h
}

/// The Hilbert function of `R/I` in `degree` predicted by the sequence.
pub fn hilbert_from_betti(seq: &BettiSequence, degree: i64, num_vars: usize) -> i128 {
    hilbert_from_twists(seq.a(), seq.b(), Some(seq.s()), degree, num_vars)
}

/// `n(b-a)[a(n+1) - b(n-1)] / 2`.
pub fn homogeneous_closed_form(n: i64, a: i64, b: i64) -> i128 {
    let v = n as i128 * (b - a) as i128 * (a as i128 * (n + 1) as i128 - b as i128 * (n - 1) as i128);
    v / 2
}
