//! Sparse vectors in a free module `R^k`, the working representation of the
//! Gröbner engine. An ideal is the case `k = 1`.

use crate::ring::{Monomial, MonomialOrder, Polynomial, Rat, Ring};
use std::cmp::Ordering;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum ModuleOrderKind {
    /// Component first (lower index is larger), then the ring order.
    #[default]
    PositionOverTerm,
    /// Shifted degree first, then the ring order, then the component.
    TermOverPosition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub kind: ModuleOrderKind,
    /// Degree of the basis vector `e_i`; only consulted by
    /// `TermOverPosition`.
    pub shifts: Vec<i64>,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder, kind: ModuleOrderKind, shifts: Vec<i64>) -> Self {
        ModuleOrder { mono, kind, shifts }
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self.kind {
            ModuleOrderKind::PositionOverTerm => b.1.cmp(&a.1).then_with(|| self.mono.cmp(a.0, b.0)),
            ModuleOrderKind::TermOverPosition => {
                let da = a.0.degree() as i64 + self.shifts.get(a.1).copied().unwrap_or(0);
                let db = b.0.degree() as i64 + self.shifts.get(b.1).copied().unwrap_or(0);
                da.cmp(&db)
                    .then_with(|| self.mono.cmp(a.0, b.0))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTerm {
    pub mon: Monomial,
    pub comp: usize,
    pub coeff: Rat,
}

/// Terms sorted strictly descending under a `ModuleOrder` known to the caller.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Unit vector `e_comp` (with monomial 1).
    pub fn basis(nvars: usize, comp: usize) -> Self {
        Vector { terms: vec![VTerm { mon: Monomial::one(nvars), comp, coeff: Rat::one() }] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = VTerm>, ord: &ModuleOrder) -> Self {
        let mut acc: HashMap<(Monomial, usize), Rat> = HashMap::new();
        for t in terms {
            let e = acc.entry((t.mon, t.comp)).or_insert_with(Rat::zero);
            *e = &*e + &t.coeff;
        }
        let mut terms: Vec<VTerm> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((mon, comp), coeff)| VTerm { mon, comp, coeff })
            .collect();
        terms.sort_by(|a, b| ord.cmp((&b.mon, b.comp), (&a.mon, a.comp)));
        Vector { terms }
    }

    pub fn from_polys(entries: &[Polynomial], ord: &ModuleOrder) -> Self {
        Self::from_terms(
            entries.iter().enumerate().flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| VTerm { mon: m.clone(), comp, coeff: c.clone() })
            }),
            ord,
        )
    }

    pub fn to_polys(&self, ring: &Ring, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            parts[t.comp].push((t.mon.clone(), t.coeff.clone()));
        }
        parts.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect()
    }

    /// `self + coeff * mon * other`.
    pub fn add_scaled(&self, coeff: &Rat, mon: &Monomial, other: &Vector, ord: &ModuleOrder) -> Vector {
        if coeff.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<VTerm> = None;
        loop {
            if pending.is_none() && j < b.len() {
                pending = Some(VTerm {
                    mon: b[j].mon.mul(mon),
                    comp: b[j].comp,
                    coeff: &b[j].coeff * coeff,
                });
                j += 1;
            }
            match (a.get(i), pending.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(y)) => out.push(y),
                (Some(x), Some(y)) => match ord.cmp((&x.mon, x.comp), (&y.mon, y.comp)) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                        pending = Some(y);
                    }
                    Ordering::Less => out.push(y),
                    Ordering::Equal => {
                        let c = &x.coeff + &y.coeff;
                        if !c.is_zero() {
                            out.push(VTerm { mon: y.mon, comp: y.comp, coeff: c });
                        }
                        i += 1;
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, ord: &ModuleOrder) -> Vector {
        let nv = other.terms.first().map(|t| t.mon.nvars()).unwrap_or(0);
        self.add_scaled(&Rat::one(), &Monomial::one(nv), other, ord)
    }

    pub fn mul_term(&self, coeff: &Rat, mon: &Monomial) -> Vector {
        if coeff.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm { mon: t.mon.mul(mon), comp: t.comp, coeff: &t.coeff * coeff })
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &Rat) -> Vector {
        if coeff.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm { mon: t.mon.clone(), comp: t.comp, coeff: &t.coeff * coeff })
                .collect(),
        }
    }

    /// Multiplies by a polynomial (re-sorting as needed).
    pub fn mul_poly(&self, p: &Polynomial, ord: &ModuleOrder) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(c, m, self, ord);
        }
        acc
    }

    /// Highest shifted degree of a term (the sugar of a homogeneous vector).
    pub fn max_degree(&self, shifts: &[i64]) -> i64 {
        self.terms
            .iter()
            .map(|t| t.mon.degree() as i64 + shifts.get(t.comp).copied().unwrap_or(0))
            .max()
            .unwrap_or(i64::MIN)
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        let mut it = self
            .terms
            .iter()
            .map(|t| t.mon.degree() as i64 + shifts.get(t.comp).copied().unwrap_or(0));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv()),
            _ => self.clone(),
        }
    }

    /// Re-sorts under another order (e.g. after a shift change).
    pub fn reorder(&self, ord: &ModuleOrder) -> Vector {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ord.cmp((&b.mon, b.comp), (&a.mon, a.comp)));
        Vector { terms }
    }
}
