//! Exact linear algebra over the polynomial ring.

mod det;
mod pfaffian;

pub use det::det_by_expansion;

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring, RingContext};
use std::fmt;

/// Dense matrix of polynomials, optionally graded.
///
/// With shifts present, entry `(i, j)` is zero or homogeneous of degree
/// `col_shifts[j] - row_shifts[i]`: the matrix is a degree-zero map
/// `⊕ R(-col_shifts[j]) → ⊕ R(-row_shifts[i])`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    row_shifts: Option<Vec<i64>>,
    col_shifts: Option<Vec<i64>>,
}

/// `d_ij = b_j - a_i`, the degrees of the entries of a graded matrix.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DegreeMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl DegreeMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Entries do not increase going down a column or right along a row,
    /// which holds when rows are sorted by ascending `a_i` and columns by
    /// descending `b_j`.
    pub fn is_monotone(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        (0..r).all(|i| {
            (0..c).all(|j| {
                (i + 1 >= r || self.entries[i][j] >= self.entries[i + 1][j])
                    && (j + 1 >= c || self.entries[i][j] >= self.entries[i][j + 1])
            })
        })
    }
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
            row_shifts: None,
            col_shifts: None,
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| !RingContext::same(p.ring(), ring)) {
            return Err(crate::ring::RingError::MismatchedRings.into());
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, entries, row_shifts: None, col_shifts: None })
    }

    /// Parses a matrix given as rows of polynomial text.
    pub fn parse<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(ring, parsed)
    }

    pub fn from_columns(ring: &Ring, nrows: usize, cols: &[Vec<Polynomial>]) -> Result<Self> {
        let mut m = Self::zeros(ring, nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::Dimension(format!("column {j} has length {}, expected {nrows}", col.len())));
            }
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(RingContext::same(p.ring(), &self.ring), "entry from another ring");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn row_shifts(&self) -> Option<&[i64]> {
        self.row_shifts.as_deref()
    }

    pub fn col_shifts(&self) -> Option<&[i64]> {
        self.col_shifts.as_deref()
    }

    pub fn with_shifts(mut self, row_shifts: Vec<i64>, col_shifts: Vec<i64>) -> Result<Self> {
        if row_shifts.len() != self.rows || col_shifts.len() != self.cols {
            return Err(Error::Dimension("shift vector length".into()));
        }
        self.row_shifts = Some(row_shifts);
        self.col_shifts = Some(col_shifts);
        Ok(self)
    }

    pub fn clear_shifts(mut self) -> Self {
        self.row_shifts = None;
        self.col_shifts = None;
        self
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        // transpose of a degree-zero map between graded modules: the
        // dual reverses shifts
        if let (Some(r), Some(c)) = (&self.row_shifts, &self.col_shifts) {
            t.row_shifts = Some(c.iter().map(|x| -x).collect());
            t.col_shifts = Some(r.iter().map(|x| -x).collect());
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        if let (Some(r), Some(c)) = (&self.row_shifts, &other.col_shifts) {
            out.row_shifts = Some(r.clone());
            out.col_shifts = Some(c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyMatrix {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            *e = -&*e;
        }
        m
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            *e = &*e * p;
        }
        m
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        if let (Some(r), Some(c)) = (&self.row_shifts, &self.col_shifts) {
            m.row_shifts = Some(rows.iter().map(|&i| r[i]).collect());
            m.col_shifts = Some(cols.iter().map(|&j| c[j]).collect());
        }
        m
    }

    pub fn delete_row_col(&self, row: Option<usize>, col: Option<usize>) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| Some(i) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| Some(j) != col).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn hstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let mut m = PolyMatrix::zeros(&self.ring, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    pub fn vstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        Ok(self.transpose().clear_shifts().hstack(&other.transpose().clear_shifts())?.transpose())
    }

    /// Moves every entry into `target` (variables matched by name).
    pub fn embed(&self, target: &Ring) -> PolyMatrix {
        PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.embed(target)).collect(),
            row_shifts: self.row_shifts.clone(),
            col_shifts: self.col_shifts.clone(),
        }
    }

    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Every entry has zero constant term (entries lie in the maximal ideal).
    pub fn is_minimal(&self) -> bool {
        self.entries.iter().all(|p| p.constant_term().is_zero())
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(det::bareiss_det(self))
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::NotSquare { rows: rows.len(), cols: cols.len() });
        }
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::Dimension("minor index out of range".into()));
        }
        self.submatrix(rows, cols).det()
    }

    /// `C_ij = (-1)^(i+j) det(M with row i and column j removed)`.
    pub fn cofactor_matrix(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut c = PolyMatrix::zeros(&self.ring, n, n);
        if n == 1 {
            c.set(0, 0, Polynomial::one(&self.ring));
            return Ok(c);
        }
        for i in 0..n {
            for j in 0..n {
                let d = det::bareiss_det(&self.delete_row_col(Some(i), Some(j)));
                c.set(i, j, if (i + j) % 2 == 1 { -d } else { d });
            }
        }
        Ok(c)
    }

    /// All `k x k` minors, rows and columns taken in lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        use itertools::Itertools;
        if k == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                out.push(det::bareiss_det(&self.submatrix(&rows, &cols)));
            }
        }
        out
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        det::bareiss_rank(self)
    }

    /// Submaximal pfaffians `p_h = (-1)^(h+1) pf(M without row/column h)`
    /// (1-based `h`) of an odd alternating matrix.
    pub fn pfaffians(&self) -> Result<Vec<Polynomial>> {
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        if self.rows % 2 == 0 {
            return Err(Error::Invalid("submaximal pfaffians need odd size".into()));
        }
        Ok((0..self.rows)
            .map(|h| {
                let idx: Vec<usize> = (0..self.rows).filter(|&k| k != h).collect();
                let p = pfaffian::pfaffian(&self.submatrix(&idx, &idx));
                if h % 2 == 1 {
                    -p
                } else {
                    p
                }
            })
            .collect())
    }

    /// Pfaffian of an even alternating matrix.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        if self.rows % 2 == 1 {
            return Ok(Polynomial::zero(&self.ring));
        }
        Ok(pfaffian::pfaffian(self))
    }

    pub fn degree_matrix(&self) -> Result<DegreeMatrix> {
        let (r, c) = match (&self.row_shifts, &self.col_shifts) {
            (Some(r), Some(c)) => (r, c),
            _ => return Err(Error::Grading("matrix carries no shifts".into())),
        };
        Ok(DegreeMatrix {
            entries: r.iter().map(|a| c.iter().map(|b| b - a).collect()).collect(),
        })
    }

    /// Every nonzero entry is homogeneous of degree `col_shift - row_shift`.
    pub fn check_graded(&self) -> Result<bool> {
        let d = self.degree_matrix()?;
        Ok((0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let p = self.get(i, j);
                p.is_zero() || (p.is_homogeneous() && p.degree().map(|x| x as i64) == Some(d.get(i, j)))
            })
        }))
    }

    /// Finds shifts making the matrix graded, given the shift of one
    /// anchor: `row_anchor` fixes `row_shifts[0]`. Unreached rows or columns
    /// (all-zero) get no constraint and default consistently where possible.
    pub fn infer_shifts(&self, row0: i64) -> Result<(Vec<i64>, Vec<i64>)> {
        let mut rows: Vec<Option<i64>> = vec![None; self.rows];
        let mut cols: Vec<Option<i64>> = vec![None; self.cols];
        for p in &self.entries {
            if !p.is_homogeneous() {
                return Err(Error::Grading(format!("entry {p} is not homogeneous")));
            }
        }
        let deg = |i: usize, j: usize| self.get(i, j).degree().map(|d| d as i64);
        let mut start = 0;
        let mut first = true;
        loop {
            // seed the next unassigned row
            let seed = (start..self.rows).find(|&i| rows[i].is_none());
            let Some(s) = seed else { break };
            start = s;
            rows[s] = Some(if first { row0 } else { rows.iter().flatten().copied().max().unwrap_or(row0) });
            first = false;
            let mut changed = true;
            while changed {
                changed = false;
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let Some(d) = deg(i, j) else { continue };
                        match (rows[i], cols[j]) {
                            (Some(a), None) => {
                                cols[j] = Some(a + d);
                                changed = true;
                            }
                            (None, Some(b)) => {
                                rows[i] = Some(b - d);
                                changed = true;
                            }
                            (Some(a), Some(b)) if b - a != d => {
                                return Err(Error::Grading(format!(
                                    "entry ({i},{j}) has degree {d}, expected {}",
                                    b - a
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let rows: Vec<i64> = rows.into_iter().map(|r| r.unwrap_or(row0)).collect();
        let fallback = rows.iter().copied().max().unwrap_or(row0) + 1;
        let cols: Vec<i64> = cols.into_iter().map(|c| c.unwrap_or(fallback)).collect();
        Ok((rows, cols))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.to_string()).collect()).collect()
    }
}

impl serde::Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PolyMatrix", 3)?;
        st.serialize_field("rows", &self.to_strings())?;
        st.serialize_field("row_shifts", &self.row_shifts)?;
        st.serialize_field("col_shifts", &self.col_shifts)?;
        st.end()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    pub(crate) fn example_ring() -> Ring {
        RingContext::grevlex(&["x", "y", "z", "t"]).unwrap()
    }

    pub(crate) fn example_matrix(r: &Ring) -> PolyMatrix {
        PolyMatrix::parse(
            r,
            &[
                vec!["y", "-x", "0", "0"],
                vec!["0", "z", "-y", "0"],
                vec!["0", "0", "t", "-z"],
                vec!["-t", "0", "0", "x"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_matrix_det_rank_cofactors() {
        let r = example_ring();
        let m = example_matrix(&r);
        assert!(m.det().unwrap().is_zero());
        assert_eq!(m.rank(), 3);
        assert_eq!(m.transpose().rank(), 3);
        // cofactors factor as u * g_i * h_j with g = (zt, xt, xy, yz), h = (x, y, z, t)
        let c = m.cofactor_matrix().unwrap();
        let g = ["z*t", "x*t", "x*y", "y*z"];
        let h = ["x", "y", "z", "t"];
        let u = {
            let prod = &r.parse(g[0]).unwrap() * &r.parse(h[0]).unwrap();
            c.get(0, 0).div_exact(&prod).unwrap()
        };
        assert!(u.is_unit());
        for i in 0..4 {
            for j in 0..4 {
                let expected = &(&u * &r.parse(g[i]).unwrap()) * &r.parse(h[j]).unwrap();
                assert_eq!(*c.get(i, j), expected, "cofactor ({i},{j})");
            }
        }
    }

    #[test]
    fn small_dets_and_rank() {
        let r = RingContext::grevlex(&["x", "y", "z"]).unwrap();
        let d = PolyMatrix::parse(&r, &[vec!["x", "0", "0"], vec!["0", "y", "0"], vec!["0", "0", "z"]]).unwrap();
        assert_eq!(d.det().unwrap(), r.parse("x*y*z").unwrap());
        let k = PolyMatrix::parse(&r, &[vec!["0", "z", "-y"], vec!["-z", "0", "x"], vec!["y", "-x", "0"]]).unwrap();
        assert_eq!(k.rank(), 2);
        assert_eq!(PolyMatrix::zeros(&r, 3, 2).rank(), 0);
        assert!(matches!(PolyMatrix::zeros(&r, 2, 3).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn pfaffians_of_koszul() {
        let r = RingContext::grevlex(&["x", "y", "z"]).unwrap();
        let k = PolyMatrix::parse(&r, &[vec!["0", "z", "-y"], vec!["-z", "0", "x"], vec!["y", "-x", "0"]]).unwrap();
        let p = k.pfaffians().unwrap();
        assert_eq!(p, vec![r.parse("x").unwrap(), r.parse("y").unwrap(), r.parse("z").unwrap()]);
        let z = PolyMatrix::zeros(&r, 3, 3);
        assert!(z.pfaffians().unwrap().iter().all(|p| p.is_zero()));
        assert!(matches!(d_not_alt(&r).pfaffians(), Err(Error::NotAlternating)));
    }

    fn d_not_alt(r: &Ring) -> PolyMatrix {
        PolyMatrix::parse(r, &[vec!["x", "0", "0"], vec!["0", "y", "0"], vec!["0", "0", "z"]]).unwrap()
    }

    #[test]
    fn grading() {
        let r = RingContext::grevlex(&["x", "y"]).unwrap();
        let m = PolyMatrix::parse(&r, &[vec!["x^2", "0"], vec!["0", "y^2"]])
            .unwrap()
            .with_shifts(vec![0, 0], vec![2, 2])
            .unwrap();
        assert!(m.check_graded().unwrap());
        assert_eq!(m.degree_matrix().unwrap().entries, vec![vec![2, 2], vec![2, 2]]);
        let bad = PolyMatrix::parse(&r, &[vec!["x+x^2"]]).unwrap().with_shifts(vec![0], vec![1]).unwrap();
        assert!(!bad.check_graded().unwrap());
        assert!(PolyMatrix::parse(&r, &[vec!["x"]]).unwrap().check_graded().is_err());
    }

    #[test]
    fn infers_shifts() {
        let r = example_ring();
        let m = example_matrix(&r);
        let (rows, cols) = m.infer_shifts(2).unwrap();
        assert_eq!(rows, vec![2, 2, 2, 2]);
        assert_eq!(cols, vec![3, 3, 3, 3]);
    }
}
