//! Combinatorics of monomial ideals: codimension by minimal vertex cover and
//! Hilbert series numerators by pivoting.

use crate::ring::Monomial;

/// Drops generators divisible by another generator (keeps the first of
/// equal ones).
pub(crate) fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Smallest set of variables meeting the support of every generator, which
/// is the height of the monomial ideal (and of any ideal with this initial
/// ideal). `None` when some generator is 1.
pub(crate) fn height(gens: &[Monomial]) -> Option<usize> {
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for m in minimalize(gens) {
        let s: Vec<usize> = m.exps().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect();
        if s.is_empty() {
            return None;
        }
        sets.push(s);
    }
    let sets = minimal_sets(sets);
    let mut best = sets.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
    cover(&sets, 0, &mut best);
    Some(best)
}

fn minimal_sets(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort_by_key(|s| s.len());
    sets.dedup();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !out.iter().any(|o| o.iter().all(|x| s.contains(x))) {
            out.push(s);
        }
    }
    out
}

fn cover(sets: &[Vec<usize>], used: usize, best: &mut usize) {
    if sets.is_empty() {
        *best = (*best).min(used);
        return;
    }
    if used + 1 >= *best {
        return;
    }
    // branch on the variables of the smallest set
    let pick = sets.iter().min_by_key(|s| s.len()).unwrap();
    for &v in pick {
        let rest: Vec<Vec<usize>> = sets.iter().filter(|s| !s.contains(&v)).cloned().collect();
        cover(&rest, used + 1, best);
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^r` of `R / (gens)`,
/// as coefficients by power of `t`.
pub(crate) fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    let mut out = numerator(minimalize(gens));
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn is_pure_power(m: &Monomial) -> bool {
    m.exps().iter().filter(|&&e| e > 0).count() <= 1
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().all(is_pure_power) {
        // a complete intersection of pure powers
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.degree() as usize;
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most mixed generators
    let n = gens[0].nvars();
    let v = (0..n)
        .max_by_key(|&v| gens.iter().filter(|g| !is_pure_power(g) && g.exps()[v] > 0).count())
        .unwrap();
    let pivot = Monomial::var(n, v);
    // N(I) = N(I + (x)) + t N(I : x)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exps()[v] == 0).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.clone();
            if e.0[v] > 0 {
                e.0[v] -= 1;
            }
            e
        })
        .collect();
    let a = numerator(minimalize(&plus));
    let b = numerator(minimalize(&colon));
    let mut out = vec![0i128; a.len().max(b.len() + 1)];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + 1] += x;
    }
    out
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `dim_k (R/I)_d` from the numerator: `sum_k N_k binom(d - k + r - 1, r - 1)`.
pub(crate) fn hilbert_value(numerator: &[i128], nvars: usize, d: i64) -> i128 {
    if d < 0 {
        return 0;
    }
    if nvars == 0 {
        return numerator.get(d as usize).copied().unwrap_or(0);
    }
    let r = nvars as i128;
    numerator
        .iter()
        .enumerate()
        .filter(|(k, _)| (*k as i64) <= d)
        .map(|(k, c)| c * binom(d as i128 - k as i128 + r - 1, r - 1))
        .sum()
}
