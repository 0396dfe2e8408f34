//! Graded Betti sequences of codimension-three algebras defined by
//! presentation matrices: essentiality tests, Gaeta reductions, lifts,
//! degree-matrix recovery and Hilbert functions. Integer arithmetic only.

mod classify;
mod hilbert;
mod sequence;
mod verdict;

pub use classify::{
    catalog, classify, classify_gaeta_reduce, classify_homogeneous, classify_n3, decremented_candidates,
    is_minimal_sequence, lift, lift_with_verdict, recover_from_degree_matrix, reduce, reduce_at, reduction_indices,
    GaetaReduction, Strategy,
};
pub use hilbert::{binom_or_zero, hilbert_from_betti, hilbert_from_twists, homogeneous_closed_form};
pub use sequence::BettiSequence;
pub use verdict::{Minimality, MinimalityReport, ReductionStep, Status, Verdict, Witness};

#[cfg(test)]
mod tests;
