mod common;

use common::*;

#[test]
fn gamma_is_independent_of_the_column_subset() {
    run_suite(tall_strategy(), check_gamma_independence).unwrap();
}

#[test]
fn gamma_annihilates_the_matrix() {
    run_suite(tall_strategy(), check_gamma_annihilates).unwrap();
}

#[test]
fn cofactors_factor_through_gamma() {
    run_suite(shuffled_strategy(), check_cofactor_identity).unwrap();
}

#[test]
fn alternating_matrices_agree_with_pfaffians() {
    run_suite(alt_strategy(), check_pfaffians).unwrap();
}

#[test]
fn zero_components_match_rank_drops() {
    run_suite(zero_strategy(), check_zero_components).unwrap();
}

#[test]
fn built_resolutions_are_exact() {
    run_suite(shuffled_strategy(), check_exactness).unwrap();
}

#[test]
fn star_products_multiply_gamma() {
    run_suite(star_strategy(), check_star).unwrap();
}

#[test]
fn lifting_shifts_the_sequence() {
    run_suite(lift_strategy(), check_lift).unwrap();
}

#[test]
fn classification_is_consistent_with_constructions() {
    run_suite(sequence_strategy(), check_sequence_verdict).unwrap();
}
