use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A graded Betti sequence `(a_1, ..., a_n; b_1, ..., b_n; s)` of a resolution
/// `0 -> R(-s) -> ⊕R(-b_j) -> ⊕R(-a_i) -> R`, stored with `a` ascending and
/// `b` descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiSequence {
    a: Vec<i64>,
    b: Vec<i64>,
    s: i64,
}

impl BettiSequence {
    /// Sorts the inputs; requires `n >= 3` entries on both sides.
    pub fn new(mut a: Vec<i64>, mut b: Vec<i64>, s: i64) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Invalid(format!("{} generator degrees but {} syzygy degrees", a.len(), b.len())));
        }
        if a.len() < 3 {
            return Err(Error::Invalid(format!("a Betti sequence needs n >= 3, got {}", a.len())));
        }
        a.sort_unstable();
        b.sort_unstable_by(|x, y| y.cmp(x));
        Ok(BettiSequence { a, b, s })
    }

    /// `(a^n; b^n; n(b - a))`.
    pub fn homogeneous(n: usize, a: i64, b: i64) -> Result<Self> {
        BettiSequence::new(vec![a; n], vec![b; n], n as i64 * (b - a))
    }

    /// Reads the twists of a length-three resolution: `shifts[1]`,
    /// `shifts[2]` and the single entry of `shifts[3]`.
    pub fn from_shifts(shifts: &[Vec<i64>]) -> Result<Self> {
        if shifts.len() != 4 || shifts[3].len() != 1 {
            return Err(Error::Invalid("expected the twists of 0 -> R(-s) -> F_2 -> F_1 -> R".into()));
        }
        BettiSequence::new(shifts[1].clone(), shifts[2].clone(), shifts[3][0])
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// `a_i`, 1-based.
    pub fn a_at(&self, i: usize) -> i64 {
        self.a[i - 1]
    }

    /// `b_j`, 1-based.
    pub fn b_at(&self, j: usize) -> i64 {
        self.b[j - 1]
    }

    /// `c_j = s - b_j`, ascending.
    pub fn c(&self) -> Vec<i64> {
        self.b.iter().map(|b| self.s - b).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.s == self.b.iter().sum::<i64>() - self.a.iter().sum::<i64>()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.a.iter().all(|&x| x == self.a[0]) && self.b.iter().all(|&x| x == self.b[0])
    }

    /// `b_{n+2-i} > a_i` for `2 <= i <= n`, together with consistency.
    pub fn is_gaeta(&self) -> bool {
        let n = self.n();
        self.is_consistent() && (2..=n).all(|i| self.b_at(n + 2 - i) > self.a_at(i))
    }

    /// Every sequence shifted down by `d`.
    pub fn shifted(&self, d: i64) -> Self {
        BettiSequence {
            a: self.a.iter().map(|x| x - d).collect(),
            b: self.b.iter().map(|x| x - d).collect(),
            s: self.s - d,
        }
    }
}

impl fmt::Display for BettiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}; {}; {})", join(&self.a), join(&self.b), self.s)
    }
}

impl std::str::FromStr for BettiSequence {
    type Err = Error;

    /// Parses `a_1,...,a_n; b_1,...,b_n; s`, with optional parentheses.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Invalid(format!("expected 'a..; b..; s', got {text:?}")));
        }
        let list = |p: &str| -> Result<Vec<i64>> {
            p.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Invalid(format!("{x:?}: {e}"))))
                .collect()
        };
        let s = parts[2].trim().parse::<i64>().map_err(|e| Error::Invalid(format!("{:?}: {e}", parts[2])))?;
        BettiSequence::new(list(parts[0])?, list(parts[1])?, s)
    }
}
