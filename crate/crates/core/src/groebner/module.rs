use super::budget::Budget;
use super::engine::{reduce_by, Engine};
use super::vector::{ModuleOrder, ModuleOrderKind, Vector};
use crate::error::{Error, Result};
use crate::matrices::PolyMatrix;
use crate::ring::{Polynomial, Ring, RingContext, RingError};
use std::sync::{Arc, OnceLock};

/// A submodule of `R^rank` given by generating vectors. With shifts, the
/// basis vector `e_i` has degree `shifts[i]`.
#[derive(Clone)]
pub struct ModuleBasis {
    ring: Ring,
    rank: usize,
    generators: Vec<Vec<Polynomial>>,
    shifts: Option<Vec<i64>>,
    gb: Arc<OnceLock<Vec<Vector>>>,
}

impl std::fmt::Debug for ModuleBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ModuleBasis in R^{} with {} generators", self.rank, self.generators.len())?;
        for g in &self.generators {
            let parts: Vec<String> = g.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  ({})", parts.join(", "))?;
        }
        Ok(())
    }
}

impl ModuleBasis {
    pub fn new(ring: &Ring, rank: usize, generators: Vec<Vec<Polynomial>>) -> Result<Self> {
        for g in &generators {
            if g.len() != rank {
                return Err(Error::Dimension(format!("vector of length {} in R^{rank}", g.len())));
            }
            if g.iter().any(|p| !RingContext::same(p.ring(), ring)) {
                return Err(RingError::MismatchedRings.into());
            }
        }
        Ok(ModuleBasis { ring: ring.clone(), rank, generators, shifts: None, gb: Arc::new(OnceLock::new()) })
    }

    /// The module generated by the columns of `m`; row shifts become the
    /// module shifts.
    pub fn from_columns(m: &PolyMatrix) -> Result<Self> {
        let out = Self::new(m.ring(), m.rows(), m.columns())?;
        match m.row_shifts() {
            Some(s) => out.with_shifts(s.to_vec()),
            None => Ok(out),
        }
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Result<Self> {
        if shifts.len() != self.rank {
            return Err(Error::Dimension("shift vector length".into()));
        }
        self.shifts = Some(shifts);
        self.gb = Arc::new(OnceLock::new());
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    pub fn shifts(&self) -> Option<&[i64]> {
        self.shifts.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|p| p.is_zero()))
    }

    fn order(&self) -> ModuleOrder {
        ModuleOrder::new(
            self.ring.order(),
            ModuleOrderKind::PositionOverTerm,
            self.shifts.clone().unwrap_or_else(|| vec![0; self.rank]),
        )
    }

    fn inputs(&self) -> Vec<Vector> {
        let ord = self.order();
        self.generators.iter().map(|g| Vector::from_polys(g, &ord)).collect()
    }

    /// Degree of each generator when all are homogeneous under the shifts
    /// (zero vectors get degree 0).
    pub fn generator_degrees(&self) -> Option<Vec<i64>> {
        let shifts = self.shifts.as_ref()?;
        let mut out = Vec::with_capacity(self.generators.len());
        for v in self.inputs() {
            if !v.is_homogeneous(shifts) {
                return None;
            }
            out.push(if v.is_zero() { 0 } else { v.max_degree(shifts) });
        }
        Some(out)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generator_degrees().is_some()
    }

    /// Generators as the columns of a matrix, graded when the module is.
    pub fn to_matrix(&self) -> Result<PolyMatrix> {
        let m = PolyMatrix::from_columns(&self.ring, self.rank, &self.generators)?;
        match (&self.shifts, self.generator_degrees()) {
            (Some(s), Some(d)) => m.with_shifts(s.clone(), d),
            _ => Ok(m),
        }
    }

    fn basis(&self, budget: &Budget) -> Result<&[Vector]> {
        if let Some(b) = self.gb.get() {
            return Ok(b);
        }
        let out = Engine::new(self.order(), self.ring.nvars(), false, budget, "module basis").run(&self.inputs())?;
        let _ = self.gb.set(out.basis);
        Ok(self.gb.get().unwrap())
    }

    /// Reduced Gröbner basis (position over term).
    pub fn groebner_basis(&self, budget: &Budget) -> Result<Vec<Vec<Polynomial>>> {
        Ok(self.basis(budget)?.iter().map(|v| v.to_polys(&self.ring, self.rank)).collect())
    }

    pub fn contains(&self, v: &[Polynomial], budget: &Budget) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::Dimension(format!("vector of length {} in R^{}", v.len(), self.rank)));
        }
        let ord = self.order();
        let (r, _) = reduce_by(self.basis(budget)?, None, &ord, &Vector::from_polys(v, &ord));
        Ok(r.is_zero())
    }

    pub fn contains_module(&self, other: &ModuleBasis, budget: &Budget) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as submodules, by double inclusion.
    pub fn same_module(&self, other: &ModuleBasis, budget: &Budget) -> Result<bool> {
        Ok(self.contains_module(other, budget)? && other.contains_module(self, budget)?)
    }

    /// Generators of the module of relations among the generators.
    pub fn syzygies(&self, budget: &Budget) -> Result<ModuleBasis> {
        let out = Engine::new(self.order(), self.ring.nvars(), true, budget, "syzygies").run(&self.inputs())?;
        let m = self.generators.len();
        let gens = out.syzygies.iter().map(|s| s.to_polys(&self.ring, m)).collect();
        let module = ModuleBasis::new(&self.ring, m, gens)?;
        match self.generator_degrees() {
            Some(d) => module.with_shifts(d),
            None => Ok(module),
        }
    }

    /// Minimal homogeneous generators, by ascending degree.
    pub fn minimal_generators(&self, budget: &Budget) -> Result<ModuleBasis> {
        let degrees = self
            .generator_degrees()
            .ok_or_else(|| Error::NotHomogeneous("minimal generators of an ungraded module".into()))?;
        let out = Engine::new(self.order(), self.ring.nvars(), false, budget, "minimal generators").run(&self.inputs())?;
        let mut idx = out.minimal_inputs;
        idx.sort_by_key(|&i| (degrees[i], i));
        let gens = idx.into_iter().map(|i| self.generators[i].clone()).collect();
        let min = ModuleBasis::new(&self.ring, self.rank, gens)?.with_shifts(self.shifts.clone().unwrap())?;
        let _ = min.gb.set(out.basis);
        Ok(min)
    }
}
