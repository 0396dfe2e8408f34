//! Multivariate GCD over the rationals.
//!
//! Recursive content / primitive-part scheme: strip monomial contents, then
//! pick a main variable. A variable occurring in only one argument cannot
//! divide the gcd, so that argument is replaced by the gcd of its
//! coefficients. Otherwise a primitive pseudo-remainder sequence runs in the
//! main variable with coefficients in the remaining variables.

use super::{Polynomial, Rat};

impl Polynomial {
    /// Greatest common divisor, normalized to leading coefficient 1.
    /// `gcd(p, 0)` is `p` normalized and `gcd(0, 0)` is 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        assert!(self.same_ring(other), "polynomials belong to different rings");
        gcd_rec(self, other).monic()
    }
}

/// Gcd of a list; 0 for an empty list.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Option<Polynomial> {
    let mut it = polys.into_iter();
    let first = it.next()?.monic();
    Some(it.fold(first, |g, p| if g.is_one() { g } else { g.gcd(p) }))
}

fn gcd_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let ring = p.ring().clone();
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(&ring);
    }
    let mp = p.monomial_content().unwrap();
    let mq = q.monomial_content().unwrap();
    let mono = Polynomial::monomial(&ring, mp.gcd(&mq), Rat::one());
    let one = Rat::one();
    let p = p.div_exact(&Polynomial::monomial(&ring, mp, one.clone())).unwrap();
    let q = q.div_exact(&Polynomial::monomial(&ring, mq, one)).unwrap();
    if p.is_constant() || q.is_constant() {
        return mono;
    }
    let n = ring.nvars();
    let in_p: Vec<bool> = (0..n).map(|v| p.uses_var(v)).collect();
    let in_q: Vec<bool> = (0..n).map(|v| q.uses_var(v)).collect();
    if let Some(v) = (0..n).find(|&v| in_p[v] != in_q[v]) {
        let (has, lacks) = if in_p[v] { (&p, &q) } else { (&q, &p) };
        let mut g = lacks.clone();
        for c in has.univariate_view(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd_rec(&g, &c);
            if g.is_constant() {
                return mono;
            }
        }
        return &mono * &g.monic();
    }
    // every variable occurs in both; a variable the gcd cannot involve
    // reduces the problem to the coefficients
    let shared: Vec<usize> = (0..n).filter(|&v| in_p[v]).collect();
    let bounds: Vec<(usize, usize)> = shared.iter().map(|&v| (degree_bound(&p, &q, v), v)).collect();
    if let Some(&(_, v)) = bounds.iter().find(|(b, _)| *b == 0) {
        let mut coeffs = p.univariate_view(v);
        coeffs.extend(q.univariate_view(v));
        return &mono * &content(&coeffs);
    }
    let v = bounds
        .iter()
        .min_by_key(|&&(b, v)| (b, p.degree_in(v).unwrap() as u32 + q.degree_in(v).unwrap() as u32))
        .unwrap()
        .1;
    let pv = p.univariate_view(v);
    let qv = q.univariate_view(v);
    let cp = content(&pv);
    let cq = content(&qv);
    let c = gcd_rec(&cp, &cq);
    let mut a = primitive(&pv, &cp);
    let mut b = primitive(&qv, &cq);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            // constant in v: primitive parts are coprime
            return &mono * &c.monic();
        }
        let cr = content(&r);
        a = b;
        b = primitive(&r, &cr);
    }
    let g = Polynomial::from_univariate(&ring, v, &b);
    &(&mono * &c.monic()) * &g.monic()
}

/// Upper bound on the degree in `v` of `gcd(p, q)`: the degree of the
/// univariate gcd after substituting integers for the other variables at a
/// point where neither leading coefficient in `v` vanishes.
fn degree_bound(p: &Polynomial, q: &Polynomial, v: usize) -> usize {
    let pv = p.univariate_view(v);
    let qv = q.univariate_view(v);
    let trivial = (pv.len().min(qv.len())) - 1;
    let n = p.ring().nvars();
    let mut best = trivial;
    let mut found = 0;
    for attempt in 0..8i64 {
        let point: Vec<Rat> = (0..n).map(|k| Rat::from_int(PRIMES[(k + 3 * attempt as usize) % PRIMES.len()] + attempt)).collect();
        let eval = |c: &[Polynomial]| -> Vec<Rat> { c.iter().map(|x| x.evaluate(&point)).collect() };
        let (a, b) = (eval(&pv), eval(&qv));
        if a.last().unwrap().is_zero() || b.last().unwrap().is_zero() {
            continue;
        }
        best = best.min(univariate_gcd_degree(a, b));
        found += 1;
        if best == 0 || found == 2 {
            break;
        }
    }
    best
}

const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn univariate_gcd_degree(mut a: Vec<Rat>, mut b: Vec<Rat>) -> usize {
    let trim = |v: &mut Vec<Rat>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let f = a.last().unwrap() / &lb;
            let shift = a.len() - b.len();
            for (k, bc) in b.iter().enumerate() {
                a[k + shift] = &a[k + shift] - &(&f * bc);
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn content(coeffs: &[Polynomial]) -> Polynomial {
    let mut g: Option<Polynomial> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = Some(match g {
            None => c.monic(),
            Some(g) if g.is_constant() => return g,
            Some(g) => gcd_rec(&g, c),
        });
    }
    g.expect("content of zero polynomial")
}

fn primitive(coeffs: &[Polynomial], content: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| c.div_exact(content).expect("content divides coefficients"))
        .collect();
    // keep rational coefficients in check: make the top coefficient monic
    if let Some(lc) = out.last().and_then(|c| c.leading_coeff()).cloned() {
        let inv = lc.inv();
        for c in &mut out {
            *c = c.scale(&inv);
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` as coefficient vectors (index = power).
/// The result is trimmed; an empty vector is zero.
fn pseudo_rem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Polynomial> = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[k + shift] = &r[k + shift] - &t;
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}
