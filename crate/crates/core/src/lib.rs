//! Presentation matrices, Gröbner machinery and graded Betti sequences of
//! codimension-three algebras, in exact rational arithmetic.

pub mod betti;
pub mod construct;
pub mod error;
pub mod groebner;
pub mod matrices;
pub mod presentation;
pub mod ring;

pub use error::{Error, Result};
