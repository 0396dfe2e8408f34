use super::{Monomial, Rat, Ring, RingContext, RingError};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial. Terms are sorted strictly descending under the ring's
/// order and carry no zero coefficients, so equal polynomials are
/// structurally equal.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rat)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        RingContext::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rat) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rat::from_int(c))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Rat::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
            let e = acc.entry(m).or_insert_with(Rat::zero);
            *e = &*e + &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.0[var]).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    fn check(&self, other: &Polynomial) -> Result<(), RingError> {
        if RingContext::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::MismatchedRings)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                let e = acc.entry(ma.mul(mb)).or_insert_with(Rat::zero);
                *e = &*e + &prod;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplication by `c * m`; order is preserved so no re-sort happens.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        assert!(RingContext::same(&self.ring, &d.ring), "mismatched rings");
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.inv();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.checked_div(dm)?, c * &inv));
            }
            return Some(Polynomial { ring: self.ring.clone(), terms });
        }
        let (dm, dc) = &d.terms[0];
        let inv = dc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = m.checked_div(dm)?;
            let qc = c * &inv;
            rem = rem.merge(&d.mul_term(&qm, &qc), true);
            quot.push((qm, qc));
        }
        // quotient terms are produced in descending order
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    /// Greatest common divisor of the term monomials.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |g, (m, _)| g.gcd(m)))
    }

    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &x.pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; the images fix the target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(m.exps()) {
                if e > 0 {
                    t = t.mul_impl(&img.pow(e as u32));
                }
            }
            acc = acc.merge(&t, false);
        }
        acc
    }

    /// Moves the polynomial into `target`, where variable `i` of this ring
    /// becomes variable `var_map[i]` of the target.
    pub fn map_to(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exps().iter().enumerate() {
                    e.0[var_map[i]] += x;
                }
                (e, c.clone())
            }),
        )
    }

    /// Moves the polynomial into a ring that contains all of its variables
    /// under the same names.
    pub fn embed(&self, target: &Ring) -> Polynomial {
        if RingContext::same(&self.ring, target) {
            return self.clone();
        }
        let map: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v).unwrap_or(usize::MAX))
            .collect();
        for (i, &t) in map.iter().enumerate() {
            assert!(t != usize::MAX || !self.uses_var(i), "variable {} missing from target ring", self.ring.vars()[i]);
        }
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exps().iter().enumerate() {
                    if x > 0 {
                        e.0[map[i]] = x;
                    }
                }
                (e, c.clone())
            }),
        )
    }

    /// Coefficients as a univariate polynomial in `var`; entry k is the
    /// coefficient of `var^k`.
    pub fn univariate_view(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            buckets[k].push((mm, c.clone()));
        }
        // removing a variable can break strict ordering only under
        // non-graded orders, so rebuild defensively
        buckets
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect()
    }

    pub fn from_univariate(ring: &Ring, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut acc = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut mm = m.clone();
                mm.0[var] += k as u16;
                acc.push((mm, x.clone()));
            }
        }
        Polynomial::from_terms(ring, acc)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials belong to different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Polynomial {
    /// Ring handle shared with another polynomial.
    pub fn same_ring(&self, other: &Polynomial) -> bool {
        RingContext::same(&self.ring, &other.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ring() -> Ring {
        RingContext::grevlex(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let p = r.parse("(x+y)*(x-y)").unwrap();
        assert_eq!(p, r.parse("x^2 - y^2").unwrap());
        assert_eq!(&p + &Polynomial::zero(&r), p);
    }

    #[test]
    fn degree_homogeneity_constant_term() {
        let r = RingContext::grevlex(&["x", "y", "z", "u", "v", "w"]).unwrap();
        assert_eq!(r.parse("x*v*w").unwrap().degree(), Some(3));
        assert_eq!(Polynomial::zero(&r).degree(), None);
        assert!(r.parse("x^2 + y*z").unwrap().is_homogeneous());
        assert!(!r.parse("x + y*z").unwrap().is_homogeneous());
        assert_eq!(r.parse("3/2 + x").unwrap().constant_term(), Rat::new(3, 2));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = r.parse("x^3 - y^3").unwrap();
        let b = r.parse("x - y").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), r.parse("x^2 + x*y + y^2").unwrap());
        assert!(a.div_exact(&r.parse("x + y").unwrap()).is_none());
        assert!(r.parse("x*y").unwrap().div_exact(&r.parse("z").unwrap()).is_none());
    }

    #[test]
    fn mismatched_rings_error() {
        let a = ring().parse("x").unwrap();
        let b = RingContext::grevlex(&["x", "t"]).unwrap().parse("x").unwrap();
        assert_eq!(a.checked_add(&b), Err(RingError::MismatchedRings));
    }

    #[test]
    fn univariate_roundtrip() {
        let r = ring();
        let p = r.parse("x^2*y + 3*y*z - z^4 + 7").unwrap();
        let v = p.univariate_view(1);
        assert_eq!(v.len(), 2);
        assert_eq!(Polynomial::from_univariate(&r, 1, &v), p);
    }
}
