use super::*;
use crate::matrices::DegreeMatrix;

fn seq(text: &str) -> BettiSequence {
    text.parse().unwrap()
}

#[test]
fn parsing_sorts_and_displays() {
    let s = seq("(5,3,4; 6,8,7; 9)");
    assert_eq!(s.a(), &[3, 4, 5]);
    assert_eq!(s.b(), &[8, 7, 6]);
    assert_eq!(s.to_string(), "(3,4,5; 8,7,6; 9)");
    assert_eq!(s.c(), vec![1, 2, 3]);
    assert!("1,2;3,4;5".parse::<BettiSequence>().is_err());
}

#[test]
fn three_generator_examples() {
    assert!(classify_n3(&seq("1,1,1;2,2,2;3")).unwrap().is_essential());
    let v = classify_n3(&seq("2,2,2;3,3,3;3")).unwrap();
    assert!(v.is_not_essential());
    assert_eq!(v.violated_condition(), Some("sum a < b_2 + b_3"));
    let v = classify_n3(&seq("3,4,5;8,7,6;9")).unwrap();
    assert_eq!(v.witness, Some(Witness::ThreeGenerators { c: [1, 2, 3], t: [1, 1, 1] }));
    assert!(classify_n3(&seq("1,1,1,1;2,2,2,2;4")).is_err());
    assert_eq!(classify_n3(&seq("1,1,1;2,2,2;4")).unwrap().violated_condition(), Some("s = sum b - sum a"));
}

#[test]
fn reductions() {
    let r = classify_gaeta_reduce(&seq("2,2,2,3;4,3,3,3;4")).unwrap();
    assert_eq!(r.steps.len(), 1);
    assert_eq!((r.steps[0].t, r.steps[0].d), (4, 1));
    assert_eq!(r.residue, seq("1,1,1;2,2,2;3"));
    assert!(r.verdict.is_essential());

    let g = seq("3,3,3,3;5,5,5,5;8");
    assert!(g.is_gaeta());
    let r = classify_gaeta_reduce(&g).unwrap();
    assert!(r.steps.is_empty() && r.residue == g && r.verdict.is_unknown());
    let v = classify(&g).unwrap();
    assert!(v.is_not_essential());
    assert_eq!(v.violated_condition(), Some("(n-1)b < (n+1)a for even n"));

    // b_{n+1-i} > a_i fails at i = 4 while t = 4 is admissible
    let bad = seq("1,1,1,3;3,2,2,2;3");
    assert_eq!(reduction_indices(&bad), vec![4]);
    let r = classify_gaeta_reduce(&bad).unwrap();
    assert_eq!(r.verdict.violated_condition(), Some("b_(n+1-i) > a_i for i >= t"));
}

#[test]
fn strategies_agree_on_nested_reductions() {
    // two admissible indices, t = 4 and t = 5
    let s = seq("1,1,1,2,3;4,3,2,2,2;5");
    assert!(s.is_consistent());
    let ts = reduction_indices(&s);
    assert_eq!(ts, vec![4, 5]);
    let (la, lr) = reduce(&s, Strategy::LargestT).unwrap();
    let (sa, sr) = reduce(&s, Strategy::SmallestT).unwrap();
    assert_eq!(lr, sr);
    assert_eq!(la.len(), 2);
    assert_eq!(sa.len(), 1);
}

#[test]
fn homogeneous_rules() {
    assert!(classify_homogeneous(4, 3, 5).unwrap().is_not_essential());
    assert!(classify_homogeneous(4, 5, 8).unwrap().is_unknown());
    assert!(classify_homogeneous(5, 3, 4).unwrap().is_essential());
    assert!(classify_homogeneous(4, 5, 5).is_err());
    assert!(classify_homogeneous(3, 1, 2).unwrap().is_essential());
    assert!(classify_homogeneous(3, 2, 3).unwrap().is_not_essential());
    // the catalog decides the sixteen-variable example in the full pipeline
    let v = classify(&BettiSequence::homogeneous(4, 5, 8).unwrap()).unwrap();
    assert_eq!(v.witness, Some(Witness::Catalog { name: "closing-remark".into() }));
}

#[test]
fn hilbert_values() {
    assert_eq!(hilbert_from_betti(&BettiSequence::homogeneous(4, 3, 5).unwrap(), 6, 3), 0);
    assert_eq!(hilbert_from_betti(&BettiSequence::homogeneous(4, 5, 8).unwrap(), 10, 3), 6);
    assert_eq!(homogeneous_closed_form(4, 5, 8), 6);
    for d in 0..10 {
        assert_eq!(hilbert_from_twists(&[], &[], None, d, 3), binom_or_zero(d + 2, 2));
    }
    // (x, y, z) leaves only the constants
    let ci = seq("1,1,1;2,2,2;3");
    assert_eq!((0..5).map(|d| hilbert_from_betti(&ci, d, 3)).collect::<Vec<_>>(), vec![1, 0, 0, 0, 0]);
}

#[test]
fn lifts() {
    let ci = seq("1,1,1;2,2,2;3");
    assert_eq!(lift(&ci, &[0, 0, 0]).unwrap(), ci);
    assert_eq!(lift(&ci, &[1, 1, 1]).unwrap(), seq("3,3,3;5,5,5;6"));
    assert_eq!(lift(&seq("3,4,5;8,7,6;9"), &[1, 0, 0]).unwrap(), seq("3,5,6;9,8,7;10"));
    assert!(lift(&ci, &[1, 1]).is_err());
    let (l, v) = lift_with_verdict(&ci, &[2, 0, 1]).unwrap();
    assert!(v.is_essential());
    assert!(classify(&l).unwrap().is_essential());
}

#[test]
fn degree_matrix_recovery() {
    let ones = DegreeMatrix { entries: vec![vec![1; 6]; 6] };
    assert_eq!(recover_from_degree_matrix(&ones, 0, 2).unwrap(), BettiSequence::homogeneous(6, 3, 4).unwrap());
    assert_eq!(recover_from_degree_matrix(&ones, 0, 1).unwrap(), BettiSequence::homogeneous(6, 4, 5).unwrap());
    assert!(recover_from_degree_matrix(&ones, 6, 1).is_err());
    // d_ij = b_j - a_i for (3,4,5; 8,7,6; 9), c = (1,2,3)
    let s = seq("3,4,5;8,7,6;9");
    let d = DegreeMatrix { entries: s.a().iter().map(|a| s.b().iter().map(|b| b - a).collect()).collect() };
    for r in 0..3 {
        assert_eq!(recover_from_degree_matrix(&d, r, s.c()[r]).unwrap(), s);
    }
}

#[test]
fn minimality() {
    assert_eq!(is_minimal_sequence(&seq("1,1,1;2,2,2;3")).unwrap().status, Minimality::Minimal);
    let rep = is_minimal_sequence(&seq("3,3,3;5,5,5;6")).unwrap();
    assert_eq!(rep.status, Minimality::NotMinimal);
    assert!(rep.candidates.iter().any(|(c, v)| *c == seq("3,2,2;4,4,4;5") && v.is_essential()));
    for text in ["2,2,2,3;4,3,3,3;4", "3,3,3,3;5,5,5,5;8", "5,5,5,5,5;7,7,7,7,7;10", "4,4,4,4;6,6,6,6;8"] {
        let rep = is_minimal_sequence(&seq(text)).unwrap();
        let any = |st: Status| rep.candidates.iter().any(|(_, v)| v.status == st);
        let expected = if any(Status::Essential) {
            Minimality::NotMinimal
        } else if any(Status::Unknown) {
            Minimality::Unknown
        } else {
            Minimality::Minimal
        };
        assert_eq!(rep.status, expected, "{text}");
    }
}
