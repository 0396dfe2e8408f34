//! Sparse multivariate polynomials over the rationals.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod rational;

pub use gcd::gcd_many;
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use rational::{ParseRatError, Rat};

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("polynomials belong to different rings")]
    MismatchedRings,
    #[error("variable names must be unique and nonempty (offending name `{0}`)")]
    BadVariable(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
}

/// A polynomial ring `Q[x_1, ..., x_r]` together with its monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
    order: MonomialOrder,
    index: HashMap<String, usize>,
}

/// Shared handle; polynomials keep one of these.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Ring, RingError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            let ok = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || index.insert(v.clone(), i).is_some() {
                return Err(RingError::BadVariable(v.clone()));
            }
        }
        Ok(Arc::new(RingContext { vars, order, index }))
    }

    /// Graded reverse lexicographic ring on the given variables.
    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Result<Ring, RingError> {
        Self::new(vars, MonomialOrder::GrevLex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| Polynomial::var(self, i))
    }

    /// The same variables under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingContext { order, ..self.clone() })
    }

    /// This ring with `extra` appended; fails on a name collision.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring, RingError> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::new(&vars, self.order)
    }

    /// Fresh variable names `{stem}{k}` for k = 1, 2, ... skipping names in use.
    pub fn fresh_names(&self, stem: &str, count: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(count);
        let mut k = 1;
        while out.len() < count {
            let name = format!("{stem}{k}");
            if !self.index.contains_key(&name) {
                out.push(name);
            }
            k += 1;
        }
        out
    }

    pub fn same(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || (a.vars == b.vars && a.order == b.order)
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial, RingError> {
        parse::parse(text, self)
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}] ({:?})", self.vars.join(","), self.order)
    }
}
