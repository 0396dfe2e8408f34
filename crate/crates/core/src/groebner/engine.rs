//! Buchberger's algorithm for submodules of `R^k`.
//!
//! Pairs are selected by sugar (the degree, for homogeneous input), and the
//! Gebauer–Möller criteria discard redundant pairs. Inputs are queued with
//! the pairs and inserted at their own degree, after every pair of the same
//! degree; for homogeneous input an input that reduces to zero at that point
//! is not a minimal generator.
//!
//! With `track` set every element carries its representation in terms of the
//! inputs. A pair or input whose value reduces to zero then leaves a syzygy
//! of the inputs behind; these vectors generate the whole syzygy module.
//! For ideals the product criterion is used as well, and the Koszul relation
//! of each pair it discards is recorded instead.

use super::budget::Budget;
use super::vector::{ModuleOrder, ModuleOrderKind, VTerm, Vector};
use crate::error::Result;
use crate::ring::{Monomial, Rat};

#[derive(Clone, Debug)]
pub(crate) struct GbOutput {
    /// Reduced basis, monic, sorted ascending by leading term.
    pub basis: Vec<Vector>,
    /// Representation of each basis element in terms of the inputs.
    pub reps: Option<Vec<Vector>>,
    /// Generators of the syzygy module of the inputs (only when tracking).
    pub syzygies: Vec<Vector>,
    /// Inputs that were not redundant when inserted (minimal generators for
    /// homogeneous input).
    pub minimal_inputs: Vec<usize>,
}

struct Elem {
    v: Vector,
    rep: Vector,
    mask: u64,
    sugar: i64,
    active: bool,
}

impl Elem {
    fn lead(&self) -> &VTerm {
        self.v.lead().expect("basis elements are nonzero")
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i64,
}

pub(crate) struct Engine<'a> {
    order: ModuleOrder,
    rep_order: ModuleOrder,
    nvars: usize,
    track: bool,
    ideal_mode: bool,
    budget: &'a Budget,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
    syzygies: Vec<Vector>,
    stage: &'static str,
}

impl<'a> Engine<'a> {
    pub fn new(order: ModuleOrder, nvars: usize, track: bool, budget: &'a Budget, stage: &'static str) -> Self {
        let rep_order = ModuleOrder::new(order.mono, ModuleOrderKind::PositionOverTerm, Vec::new());
        Engine {
            order,
            rep_order,
            nvars,
            track,
            ideal_mode: false,
            budget,
            elems: Vec::new(),
            pairs: Vec::new(),
            syzygies: Vec::new(),
            stage,
        }
    }

    pub fn run(mut self, inputs: &[Vector]) -> Result<GbOutput> {
        self.ideal_mode = inputs.iter().all(|v| v.terms.iter().all(|t| t.comp == 0));
        let mut queue: Vec<(i64, usize)> = inputs
            .iter()
            .enumerate()
            .map(|(i, v)| (v.max_degree(&self.order.shifts), i))
            .collect();
        // stable: by degree, then input order
        queue.sort();
        let mut next_input = 0;
        let mut minimal = Vec::new();
        loop {
            self.budget.check(self.stage, || self.size())?;
            let pair_sugar = self.pairs.iter().map(|p| p.sugar).min();
            let input_sugar = queue.get(next_input).map(|q| q.0);
            let take_pair = match (pair_sugar, input_sugar) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(p), Some(q)) => p <= q,
            };
            if take_pair {
                let pair = self.pop_pair();
                let (s, rep, sugar) = self.s_vector(&pair);
                let (r, rep, sugar) = self.reduce(s, rep, sugar)?;
                if r.is_zero() {
                    if self.track && !rep.is_zero() {
                        self.syzygies.push(rep);
                    }
                } else {
                    self.insert(r, rep, sugar);
                }
            } else {
                let (sugar, idx) = queue[next_input];
                next_input += 1;
                let v = inputs[idx].clone();
                let rep = if self.track { Vector::basis(self.nvars, idx) } else { Vector::zero() };
                if v.is_zero() {
                    if self.track {
                        self.syzygies.push(rep);
                    }
                    continue;
                }
                let (r, rep, sugar) = self.reduce(v, rep, sugar)?;
                if r.is_zero() {
                    if self.track {
                        self.syzygies.push(rep);
                    }
                } else {
                    minimal.push(idx);
                    self.insert(r, rep, sugar);
                }
            }
        }
        minimal.sort();
        self.finish(minimal)
    }

    fn size(&self) -> usize {
        self.elems.iter().map(|e| e.v.len() + e.rep.len()).sum::<usize>()
            + self.syzygies.iter().map(|s| s.len()).sum::<usize>()
    }

    fn pop_pair(&mut self) -> Pair {
        let order = &self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp((&pa.lcm, pa.comp), (&pb.lcm, pb.comp)))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        self.pairs.swap_remove(best)
    }

    fn s_vector(&self, p: &Pair) -> (Vector, Vector, i64) {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let ma = a.lead().mon.quotient_of(&p.lcm);
        let mb = b.lead().mon.quotient_of(&p.lcm);
        let one = Rat::one();
        let minus = Rat::from_int(-1);
        let s = a.v.mul_term(&one, &ma).add_scaled(&minus, &mb, &b.v, &self.order);
        let rep = if self.track {
            a.rep.mul_term(&one, &ma).add_scaled(&minus, &mb, &b.rep, &self.rep_order)
        } else {
            Vector::zero()
        };
        (s, rep, p.sugar)
    }

    fn find_reducer(&self, t: &VTerm, mask: u64) -> Option<usize> {
        self.elems.iter().position(|e| {
            let l = e.lead();
            l.comp == t.comp && e.mask & !mask == 0 && l.mon.divides(&t.mon)
        })
    }

    /// Full reduction. Returns the monic remainder (or zero), the updated
    /// representation and the sugar.
    fn reduce(&self, mut v: Vector, mut rep: Vector, mut sugar: i64) -> Result<(Vector, Vector, i64)> {
        let mut done: Vec<VTerm> = Vec::new();
        let mut steps = 0usize;
        while let Some(t) = v.terms.first() {
            steps += 1;
            if steps % 256 == 0 {
                self.budget.check(self.stage, || self.size() + v.len())?;
            }
            match self.find_reducer(t, t.mon.support_mask()) {
                Some(k) => {
                    let e = &self.elems[k];
                    let m = e.lead().mon.quotient_of(&t.mon);
                    let q = -(&t.coeff / &e.lead().coeff);
                    sugar = sugar.max(e.sugar + m.degree() as i64);
                    v = v.add_scaled(&q, &m, &e.v, &self.order);
                    if self.track {
                        rep = rep.add_scaled(&q, &m, &e.rep, &self.rep_order);
                    }
                }
                None => done.push(v.terms.remove(0)),
            }
        }
        let r = Vector { terms: done };
        match r.lead().map(|t| t.coeff.clone()) {
            Some(c) if !c.is_one() => {
                let inv = c.inv();
                Ok((r.scale(&inv), rep.scale(&inv), sugar))
            }
            _ => Ok((r, rep, sugar)),
        }
    }

    fn insert(&mut self, v: Vector, rep: Vector, sugar: i64) {
        let k = self.elems.len();
        let lead = v.lead().unwrap().clone();
        let mask = lead.mon.support_mask();

        // candidate pairs with active elements in the same component
        let mut fresh: Vec<Pair> = Vec::new();
        for (i, e) in self.elems.iter().enumerate() {
            if !e.active || e.lead().comp != lead.comp {
                continue;
            }
            let lm = &e.lead().mon;
            let lcm = lm.lcm(&lead.mon);
            let s = (e.sugar + lm.quotient_of(&lcm).degree() as i64)
                .max(sugar + lead.mon.quotient_of(&lcm).degree() as i64);
            fresh.push(Pair { i, j: k, lcm, comp: lead.comp, sugar: s });
        }

        // B_k: old pairs made redundant by the new leading term
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != lead.comp || !lead.mon.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().mon.lcm(&lead.mon);
            let lj = elems[p.j].lead().mon.lcm(&lead.mon);
            li == p.lcm || lj == p.lcm
        });

        // M: drop a new pair whose lcm is a proper multiple of another's
        let keep: Vec<bool> = fresh
            .iter()
            .map(|p| {
                !fresh
                    .iter()
                    .any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm))
            })
            .collect();
        let mut fresh: Vec<Pair> = fresh.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();

        // F and product criterion, per group of equal lcm
        let mut out: Vec<Pair> = Vec::new();
        let mut koszul: Vec<(usize, usize)> = Vec::new();
        fresh.sort_by(|a, b| a.lcm.0.cmp(&b.lcm.0).then(a.i.cmp(&b.i)));
        let mut idx = 0;
        while idx < fresh.len() {
            let mut end = idx + 1;
            while end < fresh.len() && fresh[end].lcm == fresh[idx].lcm {
                end += 1;
            }
            let group = &fresh[idx..end];
            let coprime: Vec<&Pair> = if self.ideal_mode {
                group
                    .iter()
                    .filter(|p| self.elems[p.i].lead().mon.is_coprime(&lead.mon))
                    .collect()
            } else {
                Vec::new()
            };
            if coprime.is_empty() {
                out.push(group[0].clone());
            } else {
                koszul.extend(coprime.iter().map(|p| (p.i, p.j)));
            }
            idx = end;
        }

        for e in self.elems.iter_mut() {
            if e.active && e.lead().comp == lead.comp && lead.mon.divides(&e.lead().mon) {
                e.active = false;
            }
        }
        self.elems.push(Elem { v, rep, mask, sugar, active: true });
        if self.track {
            for (i, j) in koszul {
                let syz = self.koszul(i, j);
                if !syz.is_zero() {
                    self.syzygies.push(syz);
                }
            }
        }
        self.pairs.extend(out);
    }

    /// `f_j * rep_i - f_i * rep_j` for two ideal elements.
    fn koszul(&self, i: usize, j: usize) -> Vector {
        let fi = &self.elems[i];
        let fj = &self.elems[j];
        let mut acc = Vector::zero();
        for t in &fj.v.terms {
            acc = acc.add_scaled(&t.coeff, &t.mon, &fi.rep, &self.rep_order);
        }
        for t in &fi.v.terms {
            acc = acc.add_scaled(&-&t.coeff, &t.mon, &fj.rep, &self.rep_order);
        }
        acc
    }

    fn finish(mut self, minimal_inputs: Vec<usize>) -> Result<GbOutput> {
        // interreduce tails against the other active elements
        self.elems.retain(|e| e.active);
        let mut reduced: Vec<(Vector, Vector)> = Vec::with_capacity(self.elems.len());
        for k in 0..self.elems.len() {
            self.budget.check(self.stage, || self.size())?;
            let e = &self.elems[k];
            let lead = e.v.terms[0].clone();
            let tail = Vector { terms: e.v.terms[1..].to_vec() };
            let (t, rep) = self.reduce_tail(tail, e.rep.clone(), k)?;
            let mut terms = vec![lead];
            terms.extend(t.terms);
            reduced.push((Vector { terms }, rep));
        }
        let order = self.order.clone();
        reduced.sort_by(|a, b| {
            let (x, y) = (a.0.lead().unwrap(), b.0.lead().unwrap());
            order.cmp((&x.mon, x.comp), (&y.mon, y.comp))
        });
        let (basis, reps): (Vec<Vector>, Vec<Vector>) = reduced.into_iter().unzip();
        Ok(GbOutput {
            basis,
            reps: if self.track { Some(reps) } else { None },
            syzygies: self.syzygies,
            minimal_inputs,
        })
    }

    /// Reduces every term of `v` using elements other than `skip`.
    fn reduce_tail(&self, mut v: Vector, mut rep: Vector, skip: usize) -> Result<(Vector, Vector)> {
        let mut done: Vec<VTerm> = Vec::new();
        while let Some(t) = v.terms.first() {
            let mask = t.mon.support_mask();
            let found = self.elems.iter().enumerate().position(|(k, e)| {
                let l = e.lead();
                k != skip && l.comp == t.comp && e.mask & !mask == 0 && l.mon.divides(&t.mon)
            });
            match found {
                Some(k) => {
                    let e = &self.elems[k];
                    let m = e.lead().mon.quotient_of(&t.mon);
                    let q = -(&t.coeff / &e.lead().coeff);
                    v = v.add_scaled(&q, &m, &e.v, &self.order);
                    if self.track {
                        rep = rep.add_scaled(&q, &m, &e.rep, &self.rep_order);
                    }
                }
                None => done.push(v.terms.remove(0)),
            }
        }
        Ok((Vector { terms: done }, rep))
    }
}

/// Reduction of a vector by a fixed reduced basis, optionally accumulating
/// the quotient combination of basis representations.
pub(crate) fn reduce_by(
    basis: &[Vector],
    reps: Option<&[Vector]>,
    order: &ModuleOrder,
    v: &Vector,
) -> (Vector, Option<Vector>) {
    let rep_order = ModuleOrder::new(order.mono, ModuleOrderKind::PositionOverTerm, Vec::new());
    let masks: Vec<u64> = basis.iter().map(|b| b.lead().unwrap().mon.support_mask()).collect();
    let mut v = v.clone();
    let mut acc = reps.map(|_| Vector::zero());
    let mut done = Vec::new();
    while let Some(t) = v.terms.first() {
        let mask = t.mon.support_mask();
        let found = basis.iter().enumerate().position(|(k, b)| {
            let l = b.lead().unwrap();
            l.comp == t.comp && masks[k] & !mask == 0 && l.mon.divides(&t.mon)
        });
        match found {
            Some(k) => {
                let l = basis[k].lead().unwrap();
                let m = l.mon.quotient_of(&t.mon);
                let q = &t.coeff / &l.coeff;
                if let (Some(a), Some(r)) = (acc.as_mut(), reps) {
                    *a = a.add_scaled(&q, &m, &r[k], &rep_order);
                }
                v = v.add_scaled(&-&q, &m, &basis[k], order);
            }
            None => done.push(v.terms.remove(0)),
        }
    }
    (Vector { terms: done }, acc)
}
