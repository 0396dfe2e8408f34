use super::budget::Budget;
use super::module::ModuleBasis;
use super::IdealBasis;
use crate::error::{Error, Result};
use crate::matrices::PolyMatrix;
use crate::ring::{Polynomial, Ring};

/// A graded free complex `... -> F_2 -> F_1 -> F_0`, stored as the maps
/// `phi_k: F_k -> F_{k-1}` (rightmost first) and the shifts of each `F_k`
/// (`F_k = ⊕ R(-shifts[k][i])`).
#[derive(Clone, Debug)]
pub struct GradedResolution {
    ring: Ring,
    maps: Vec<PolyMatrix>,
    shifts: Vec<Vec<i64>>,
    minimal: bool,
}

impl GradedResolution {
    pub fn new(ring: &Ring, maps: Vec<PolyMatrix>, shifts: Vec<Vec<i64>>) -> Result<Self> {
        if shifts.len() != maps.len() + 1 {
            return Err(Error::Dimension(format!("{} maps need {} shift vectors", maps.len(), maps.len() + 1)));
        }
        let mut graded = Vec::with_capacity(maps.len());
        for (k, m) in maps.into_iter().enumerate() {
            if m.rows() != shifts[k].len() || m.cols() != shifts[k + 1].len() {
                return Err(Error::Dimension(format!(
                    "map {} is {}x{}, modules have ranks {} and {}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    shifts[k].len(),
                    shifts[k + 1].len()
                )));
            }
            graded.push(m.with_shifts(shifts[k].clone(), shifts[k + 1].clone())?);
        }
        let minimal = graded.iter().all(|m| m.is_minimal());
        Ok(GradedResolution { ring: ring.clone(), maps: graded, shifts, minimal })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// `shifts()[k]` are the twists of `F_k`.
    pub fn shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `sum (-1)^i rank F_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks().iter().enumerate().map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }

    /// Every composite `phi_k phi_{k+1}` is the zero matrix.
    pub fn composites_vanish(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every map is graded for the stored shifts.
    pub fn is_graded(&self) -> Result<bool> {
        for m in &self.maps {
            if !m.check_graded()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Shifts of each `F_k` in ascending order.
    pub fn sorted_shifts(&self) -> Vec<Vec<i64>> {
        self.shifts
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort();
                s
            })
            .collect()
    }

    /// Cancels unit entries until every entry lies in the maximal ideal.
    ///
    /// A unit `c` in position `(i, j)` of `phi_k` (`k >= 2`) splits off the
    /// trivial complex `R e_j -> R phi_k(e_j)`: row `i` and column `j` of
    /// `phi_k` are removed after clearing row `i`, column `i` of
    /// `phi_{k-1}` and row `j` of `phi_{k+1}` are deleted.
    pub fn minimalize(&self) -> Result<GradedResolution> {
        let mut maps: Vec<PolyMatrix> = self.maps.iter().map(|m| m.clone().clear_shifts()).collect();
        let mut shifts = self.shifts.clone();
        loop {
            let found = maps.iter().enumerate().find_map(|(k, m)| {
                (0..m.rows())
                    .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                    .find(|&(i, j)| m.get(i, j).is_unit())
                    .map(|(i, j)| (k, i, j))
            });
            let Some((k, i, j)) = found else { break };
            if k == 0 {
                return Err(Error::UnitIdeal);
            }
            let m = &maps[k];
            let c_inv = m.get(i, j).constant_term().inv();
            let ring = self.ring.clone();
            let rows: Vec<usize> = (0..m.rows()).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..m.cols()).filter(|&s| s != j).collect();
            let mut next = PolyMatrix::zeros(&ring, rows.len(), cols.len());
            for (a, &r) in rows.iter().enumerate() {
                let factor = m.get(r, j).scale(&c_inv);
                for (b, &s) in cols.iter().enumerate() {
                    let v = if factor.is_zero() { m.get(r, s).clone() } else { m.get(r, s) - &(&factor * m.get(i, s)) };
                    next.set(a, b, v);
                }
            }
            maps[k] = next;
            maps[k - 1] = maps[k - 1].delete_row_col(None, Some(i));
            if k + 1 < maps.len() {
                maps[k + 1] = maps[k + 1].delete_row_col(Some(j), None);
            }
            shifts[k].remove(i);
            shifts[k + 1].remove(j);
        }
        // drop trailing zero modules
        while shifts.len() > 1 && shifts.last().is_some_and(|s| s.is_empty()) {
            shifts.pop();
            maps.pop();
        }
        GradedResolution::new(&self.ring, maps, shifts)
    }
}

/// Iterated minimal syzygies of minimal generators.
pub(super) fn minimal_free_resolution(ideal: &IdealBasis, max_length: usize, budget: &Budget) -> Result<GradedResolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("resolution of an inhomogeneous ideal".into()));
    }
    let ring = ideal.ring().clone();
    let gens: Vec<Polynomial> = ideal
        .minimal_generators(budget)?
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if gens.iter().any(|g| g.is_unit()) {
        return Err(Error::UnitIdeal);
    }
    let mut shifts: Vec<Vec<i64>> = vec![vec![0]];
    let mut maps: Vec<PolyMatrix> = Vec::new();
    if gens.is_empty() || max_length == 0 {
        return GradedResolution::new(&ring, maps, shifts);
    }
    let first = PolyMatrix::from_rows(&ring, vec![gens.clone()])?;
    shifts.push(gens.iter().map(|g| g.degree().unwrap() as i64).collect());
    maps.push(first);
    while maps.len() < max_length {
        let k = maps.len();
        let columns = ModuleBasis::from_columns(&maps[k - 1].clone().with_shifts(shifts[k - 1].clone(), shifts[k].clone())?)?;
        let syz = columns.syzygies(budget)?;
        let nonzero: Vec<Vec<Polynomial>> =
            syz.generators().iter().filter(|v| v.iter().any(|p| !p.is_zero())).cloned().collect();
        if nonzero.is_empty() {
            break;
        }
        let syz = ModuleBasis::new(&ring, syz.rank(), nonzero)?.with_shifts(shifts[k].clone())?;
        let min = syz.minimal_generators(budget)?;
        let degrees = min.generator_degrees().ok_or_else(|| Error::Internal("syzygies not homogeneous".into()))?;
        maps.push(PolyMatrix::from_columns(&ring, syz.rank(), min.generators())?);
        shifts.push(degrees);
    }
    GradedResolution::new(&ring, maps, shifts)
}
