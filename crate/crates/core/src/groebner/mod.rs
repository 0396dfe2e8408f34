//! Gröbner bases of ideals and submodules of free modules, and what they
//! compute: normal forms, membership, dimension, Hilbert functions,
//! intersections, syzygies and minimal free resolutions.

mod budget;
mod engine;
mod module;
mod monomial_ideal;
mod resolution;
mod vector;

pub use budget::{Budget, BUDGET_ENV};
pub use module::ModuleBasis;
pub use resolution::GradedResolution;
pub use vector::{ModuleOrder, ModuleOrderKind, VTerm, Vector};

use crate::error::{Error, Result};
use crate::ring::{MonomialOrder, Polynomial, Ring, RingContext};
use engine::{reduce_by, Engine};
use std::sync::{Arc, OnceLock};

pub(crate) fn ideal_order(ring: &Ring) -> ModuleOrder {
    ModuleOrder::new(ring.order(), ModuleOrderKind::PositionOverTerm, vec![0])
}

#[derive(Clone, Debug)]
struct Tracked {
    basis: Vec<Vector>,
    reps: Vec<Vector>,
}

/// An ideal given by generators, with its reduced Gröbner basis (under the
/// ring's order) computed on demand and cached.
#[derive(Clone)]
pub struct IdealBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: Arc<OnceLock<Vec<Polynomial>>>,
    tracked: Arc<OnceLock<Tracked>>,
}

impl std::fmt::Debug for IdealBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl IdealBasis {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|p| !RingContext::same(p.ring(), ring)) {
            return Err(crate::ring::RingError::MismatchedRings.into());
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            generators,
            gb: Arc::new(OnceLock::new()),
            tracked: Arc::new(OnceLock::new()),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, generators: &[S]) -> Result<Self> {
        let gens = generators.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|p| p.is_homogeneous())
    }

    fn inputs(&self) -> Vec<Vector> {
        let ord = ideal_order(&self.ring);
        self.generators.iter().map(|p| Vector::from_polys(std::slice::from_ref(p), &ord)).collect()
    }

    fn to_poly(&self, v: &Vector) -> Polynomial {
        v.to_polys(&self.ring, 1).pop().unwrap()
    }

    /// Reduced Gröbner basis under the ring's order, sorted by ascending
    /// leading monomial.
    pub fn groebner_basis(&self, budget: &Budget) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = match self.tracked.get() {
            Some(t) => t.basis.iter().map(|v| self.to_poly(v)).collect(),
            None => {
                let out = Engine::new(ideal_order(&self.ring), self.ring.nvars(), false, budget, "groebner basis")
                    .run(&self.inputs())?;
                out.basis.iter().map(|v| self.to_poly(v)).collect()
            }
        };
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    /// The same ideal generated by its reduced Gröbner basis for `order`.
    pub fn groebner_basis_for(&self, order: MonomialOrder, budget: &Budget) -> Result<IdealBasis> {
        let target = self.ring.with_order(order);
        let moved = IdealBasis::new(&target, self.generators.iter().map(|p| p.embed(&target)).collect())?;
        let gb = moved.groebner_basis(budget)?.to_vec();
        IdealBasis::new(&target, gb)
    }

    /// This ideal generated by its reduced Gröbner basis.
    pub fn reduced(&self, budget: &Budget) -> Result<IdealBasis> {
        let gb = self.groebner_basis(budget)?.to_vec();
        let out = IdealBasis::new(&self.ring, gb.clone())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    fn tracked(&self, budget: &Budget) -> Result<&Tracked> {
        if let Some(t) = self.tracked.get() {
            return Ok(t);
        }
        let out = Engine::new(ideal_order(&self.ring), self.ring.nvars(), true, budget, "groebner basis")
            .run(&self.inputs())?;
        let _ = self.tracked.set(Tracked { basis: out.basis, reps: out.reps.unwrap() });
        Ok(self.tracked.get().unwrap())
    }

    pub fn normal_form(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        self.check_ring(p)?;
        let ord = ideal_order(&self.ring);
        let basis: Vec<Vector> = self
            .groebner_basis(budget)?
            .iter()
            .map(|g| Vector::from_polys(std::slice::from_ref(g), &ord))
            .collect();
        let (r, _) = reduce_by(&basis, None, &ord, &Vector::from_polys(std::slice::from_ref(p), &ord));
        Ok(self.to_poly(&r))
    }

    pub fn member(&self, p: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(p, budget)?.is_zero())
    }

    /// Cofactors `c` with `p = sum c_i * generators[i]`, or `None` when `p`
    /// is not in the ideal.
    pub fn member_with_cofactors(&self, p: &Polynomial, budget: &Budget) -> Result<Option<Vec<Polynomial>>> {
        self.check_ring(p)?;
        let t = self.tracked(budget)?;
        let ord = ideal_order(&self.ring);
        let (r, acc) = reduce_by(&t.basis, Some(&t.reps), &ord, &Vector::from_polys(std::slice::from_ref(p), &ord));
        if !r.is_zero() {
            return Ok(None);
        }
        Ok(Some(acc.unwrap().to_polys(&self.ring, self.generators.len())))
    }

    /// Every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &IdealBasis, budget: &Budget) -> Result<bool> {
        for g in other.generators() {
            if !self.member(&g.embed(&self.ring), budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &IdealBasis, budget: &Budget) -> Result<bool> {
        if !RingContext::same(&self.ring, &other.ring) {
            return Err(crate::ring::RingError::MismatchedRings.into());
        }
        Ok(self.groebner_basis(budget)? == other.groebner_basis(budget)?)
    }

    pub fn is_unit_ideal(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner_basis(budget)?.iter().any(|g| g.is_unit()))
    }

    fn leading_monomials(&self, budget: &Budget) -> Result<Vec<crate::ring::Monomial>> {
        Ok(self
            .groebner_basis(budget)?
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect())
    }

    /// Krull dimension of `R/I`.
    pub fn dimension(&self, budget: &Budget) -> Result<usize> {
        Ok(self.ring.nvars() - self.height(budget)?)
    }

    /// `r - dim(R/I)`, the least height of a minimal prime; equal to the
    /// grade of `I` since `R` is Cohen–Macaulay.
    pub fn height(&self, budget: &Budget) -> Result<usize> {
        monomial_ideal::height(&self.leading_monomials(budget)?).ok_or(Error::UnitIdeal)
    }

    /// Numerator of the Hilbert series of `R/I` over `(1-t)^r`.
    pub fn hilbert_numerator(&self, budget: &Budget) -> Result<Vec<i128>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("Hilbert function of an inhomogeneous ideal".into()));
        }
        Ok(monomial_ideal::hilbert_numerator(&self.leading_monomials(budget)?))
    }

    /// `dim_k (R/I)_degree`.
    pub fn hilbert_function(&self, degree: i64, budget: &Budget) -> Result<i128> {
        let num = self.hilbert_numerator(budget)?;
        Ok(monomial_ideal::hilbert_value(&num, self.ring.nvars(), degree))
    }

    fn check_ring(&self, p: &Polynomial) -> Result<()> {
        if RingContext::same(p.ring(), &self.ring) {
            Ok(())
        } else {
            Err(crate::ring::RingError::MismatchedRings.into())
        }
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &IdealBasis, budget: &Budget) -> Result<IdealBasis> {
        if !RingContext::same(&self.ring, &other.ring) {
            return Err(crate::ring::RingError::MismatchedRings.into());
        }
        let t_name = self.ring.fresh_names("elim", 1);
        let mut vars = t_name.clone();
        vars.extend(self.ring.vars().iter().cloned());
        let big = RingContext::new(&vars, MonomialOrder::Elimination { block: 1 })?;
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|f| &t * &f.embed(&big)).collect();
        gens.extend(other.generators.iter().map(|g| &one_minus_t * &g.embed(&big)));
        let elim = IdealBasis::new(&big, gens)?;
        let kept: Vec<Polynomial> = elim
            .groebner_basis(budget)?
            .iter()
            .filter(|g| !g.uses_var(0))
            .map(|g| g.embed(&self.ring))
            .collect();
        IdealBasis::new(&self.ring, kept)?.reduced(budget)
    }

    /// `I ∩ J` from the syzygies of `(f_1, ..., f_m, g_1, ..., g_k)`: the
    /// combinations `sum a_i f_i` of syzygies `(a, b)`.
    pub fn intersect_via_syzygies(&self, other: &IdealBasis, budget: &Budget) -> Result<IdealBasis> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        let joint = IdealBasis::new(&self.ring, gens)?;
        let syz = joint.syzygies(budget)?;
        let m = self.generators.len();
        let out: Vec<Polynomial> = syz
            .generators()
            .iter()
            .map(|s| {
                s[..m]
                    .iter()
                    .zip(&self.generators)
                    .fold(Polynomial::zero(&self.ring), |acc, (a, f)| &acc + &(a * f))
            })
            .filter(|p| !p.is_zero())
            .collect();
        IdealBasis::new(&self.ring, out)?.reduced(budget)
    }

    /// `I : f`.
    pub fn quotient(&self, f: &Polynomial, budget: &Budget) -> Result<IdealBasis> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(Error::Invalid("quotient by the zero polynomial".into()));
        }
        let principal = IdealBasis::new(&self.ring, vec![f.clone()])?;
        let both = self.intersect(&principal, budget)?;
        let gens = both
            .generators()
            .iter()
            .map(|g| g.div_exact(f).ok_or_else(|| Error::Internal("intersection with (f) not divisible by f".into())))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(&self.ring, gens)?.reduced(budget)
    }

    /// Generators of the syzygy module of the (ordered) generators.
    pub fn syzygies(&self, budget: &Budget) -> Result<ModuleBasis> {
        let out = Engine::new(ideal_order(&self.ring), self.ring.nvars(), true, budget, "syzygies").run(&self.inputs())?;
        let m = self.generators.len();
        let gens: Vec<Vec<Polynomial>> = out.syzygies.iter().map(|s| s.to_polys(&self.ring, m)).collect();
        let mut module = ModuleBasis::new(&self.ring, m, gens)?;
        if self.is_homogeneous() {
            let shifts = self.generators.iter().map(|g| g.degree().unwrap_or(0) as i64).collect();
            module = module.with_shifts(shifts)?;
        }
        Ok(module)
    }

    /// Minimal homogeneous generators: generators are taken by ascending
    /// degree (input order within a degree) and kept when not in the ideal
    /// of those already processed.
    pub fn minimal_generators(&self, budget: &Budget) -> Result<IdealBasis> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("minimal generators of an inhomogeneous ideal".into()));
        }
        let out = Engine::new(ideal_order(&self.ring), self.ring.nvars(), false, budget, "minimal generators")
            .run(&self.inputs())?;
        let mut idx = out.minimal_inputs;
        idx.sort_by_key(|&i| (self.generators[i].degree().unwrap_or(0), i));
        let gens = idx.into_iter().map(|i| self.generators[i].clone()).collect();
        let min = IdealBasis::new(&self.ring, gens)?;
        let _ = min.gb.set(out.basis.iter().map(|v| self.to_poly(v)).collect());
        Ok(min)
    }

    /// Minimal graded free resolution `... -> F_2 -> F_1 -> R`, at most
    /// `max_length` maps.
    pub fn minimal_free_resolution(&self, max_length: usize, budget: &Budget) -> Result<GradedResolution> {
        resolution::minimal_free_resolution(self, max_length, budget)
    }
}
