use super::*;
use crate::groebner::{Budget, IdealBasis};
use crate::presentation::{check_presentation, koszul_matrix};
use crate::ring::{Ring, RingContext};

fn b() -> Budget {
    Budget::default()
}

fn seq(t: &str) -> BettiSequence {
    t.parse().unwrap()
}

fn r6() -> Ring {
    RingContext::grevlex(&["x", "y", "z", "u", "v", "w"]).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

fn three(r: &Ring, s: [&str; 3]) -> [Polynomial; 3] {
    [p(r, s[0]), p(r, s[1]), p(r, s[2])]
}

#[test]
fn three_generator_constructions() {
    let r = r6();
    let k = prop_bet(&three(&r, ["x", "y", "z"]), &three(&r, ["1", "1", "1"]), &b()).unwrap();
    assert_eq!(k.sequence, seq("1,1,1;2,2,2;3"));
    let c = prop_bet(&three(&r, ["x", "y", "z"]), &three(&r, ["u", "v", "w"]), &b()).unwrap();
    assert_eq!(c.sequence, seq("3,3,3;5,5,5;6"));
    let expected = IdealBasis::parse(&r, &["x*v*w", "y*u*w", "z*u*v"]).unwrap();
    assert!(IdealBasis::new(&r, c.ideal.clone()).unwrap().same_ideal(&expected, &b()).unwrap());
    assert_eq!(resolve_sequence(&c.matrix, &b()).unwrap(), c.sequence);

    let d = prop_bet(&three(&r, ["x", "y^2", "z^3"]), &three(&r, ["u", "v", "w"]), &b()).unwrap();
    assert_eq!(d.sequence, seq("3,4,5;8,7,6;9"));
    assert_eq!(resolve_sequence(&d.matrix, &b()).unwrap(), d.sequence);

    assert!(prop_bet(&three(&r, ["x", "y", "x*y"]), &three(&r, ["u", "v", "w"]), &b()).is_err());
    assert!(prop_bet(&three(&r, ["x", "y", "z"]), &three(&r, ["u", "0", "w"]), &b()).is_err());
    // a common factor drops the height to 1
    assert!(prop_bet(&three(&r, ["x", "y", "z"]), &three(&r, ["u", "u", "u"]), &b()).is_err());
}

#[test]
fn hilbert_burch_three_matches_three_generators() {
    let r = r6();
    let bm = PolyMatrix::parse(&r, &[vec!["u", "0", "0"], vec!["0", "v", "0"], vec!["0", "0", "w"], vec!["x", "y", "z"]]).unwrap();
    let hb = hilbert_burch_ideal(&HilbertBurchData::new(bm).unwrap(), &b()).unwrap();
    assert_eq!(hb.zeta.zeta, 0);
    let pb = prop_bet(&three(&r, ["x", "y", "z"]), &three(&r, ["u", "v", "w"]), &b()).unwrap();
    let i1 = IdealBasis::new(&r, hb.ideal.clone()).unwrap();
    assert!(i1.same_ideal(&IdealBasis::new(&r, pb.ideal.clone()).unwrap(), &b()).unwrap());
    assert_eq!(hb.decomposition.intersection_identity, Some(true));

    let bad = PolyMatrix::parse(&r, &[vec!["u", "0", "0"], vec!["0", "v", "0"], vec!["0", "0", "w"], vec!["x", "y", "x*y"]]).unwrap();
    assert!(hilbert_burch_ideal(&HilbertBurchData::new(bad).unwrap(), &b()).is_err());
}

#[test]
fn hilbert_burch_four_has_maximal_zeta() {
    let r = RingContext::grevlex(&["x", "y", "z", "u", "v", "w", "p"]).unwrap();
    let bm = PolyMatrix::parse(
        &r,
        &[
            vec!["u", "0", "0", "p"],
            vec!["0", "v", "0", "u"],
            vec!["0", "0", "w", "v"],
            vec!["p", "u", "v", "w"],
            vec!["x", "y", "z", "0"],
        ],
    )
    .unwrap();
    let hb = hilbert_burch_ideal(&HilbertBurchData::new(bm).unwrap(), &b()).unwrap();
    assert_eq!(hb.zeta.zeta, 1);
    assert_eq!(hb.zeta.nu_j, 3);
    assert!(check_presentation(&hb.matrix, &b()).unwrap().is_minimal_presentation());
    let oracle = resolve_sequence(&hb.matrix, &b()).unwrap();
    assert_eq!(oracle, sort_to_sequence(&hb.matrix, &b()).unwrap().1);
}

#[test]
fn lifting_matrices() {
    let r = RingContext::grevlex(&["x", "y", "z"]).unwrap();
    let k = koszul_matrix(&three(&r, ["x", "y", "z"]));
    let same = lift_matrix(&k, &[0, 0, 0], None, &b()).unwrap();
    assert_eq!(same.matrix.ring().nvars(), 6);
    assert_eq!(same.matrix, k.embed(same.matrix.ring()));
    let l = lift_matrix(&k, &[1, 1, 1], None, &b()).unwrap();
    assert_eq!(l.fresh_vars, vec!["y1", "y2", "y3"]);
    assert_eq!(resolve_sequence(&l.matrix, &b()).unwrap(), seq("3,3,3;5,5,5;6"));
    assert_eq!(sort_to_sequence(&l.matrix, &b()).unwrap().1, crate::betti::lift(&seq("1,1,1;2,2,2;3"), &[1, 1, 1]).unwrap());
    assert!(lift_matrix(&k, &[1, 1, 1], Some(&["x".into(), "q".into(), "s".into()]), &b()).is_err());

    let r4 = RingContext::grevlex(&["x", "y", "z", "t"]).unwrap();
    let m = PolyMatrix::parse(
        &r4,
        &[vec!["y", "-x", "0", "0"], vec!["0", "z", "-y", "0"], vec!["0", "0", "t", "-z"], vec!["-t", "0", "0", "x"]],
    )
    .unwrap();
    let l = lift_matrix(&m, &[1, 0, 0, 0], None, &b()).unwrap();
    assert!(check_presentation(&l.matrix, &b()).unwrap().is_presentation);
    let g = crate::presentation::gamma(&m).unwrap().components;
    let gl = crate::presentation::gamma(&l.matrix).unwrap().components;
    let y1 = p(l.matrix.ring(), "y1");
    assert_eq!(gl[0], g[0].embed(l.matrix.ring()));
    for i in 1..4 {
        assert_eq!(gl[i], &g[i].embed(l.matrix.ring()) * &y1);
    }
}

#[test]
fn star_products() {
    let names: Vec<String> = (1..=10).map(|i| format!("v{i}")).collect();
    let r = RingContext::grevlex(&names).unwrap();
    let m = cyclic_base(&r, &[0, 1, 2, 3, 4], 2).unwrap();
    let n = cyclic_base(&r, &[5, 6, 7, 8, 9], 1).unwrap();
    let prod = star_product(&m, &n).unwrap();
    assert!(prod.det().is_zero());
    assert!(prod.to_matrix().det().unwrap().is_zero());
    assert!(verify_star_product(&m, &n, &prod, &b()).unwrap().passes());
    // (a^5; (a+2)^5; 10) with s - b = 3
    assert_eq!(resolve_sequence(&prod.to_matrix(), &b()).unwrap(), BettiSequence::homogeneous(5, 5, 7).unwrap());
    let (mm, nn, pm) = (m.to_matrix(), n.to_matrix(), prod.to_matrix());
    for i in 0..5 {
        for j in 0..5 {
            let lhs = pm.delete_row_col(Some(i), Some(j)).det().unwrap();
            let rhs = &mm.delete_row_col(Some(i), Some(j)).det().unwrap() * &nn.delete_row_col(Some(i), Some(j)).det().unwrap();
            // each superdiagonal factor carries a sign
            assert!(lhs == rhs || lhs == -&rhs, "minor ({i},{j})");
        }
    }
    assert!(star_product(&m, &m).is_err());
}

#[test]
fn homogeneous_constructions() {
    let c = homogeneous_matrix(5, 3, 4, &b()).unwrap();
    assert_eq!(resolve_sequence(&c.matrix, &b()).unwrap(), BettiSequence::homogeneous(5, 3, 4).unwrap());

    let c = homogeneous_matrix(6, 3, 4, &b()).unwrap();
    assert_eq!(c.sequence, BettiSequence::homogeneous(6, 3, 4).unwrap());
    let r = c.matrix.ring().clone();
    let ideal = IdealBasis::new(&r, crate::presentation::gamma(&c.matrix).unwrap().components).unwrap();
    let cyclic = IdealBasis::parse(&r, &["x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x4*x5*x6", "x5*x6*x1", "x6*x1*x2"]).unwrap();
    assert!(ideal.same_ideal(&cyclic, &b()).unwrap());

    let c = homogeneous_matrix(5, 4, 6, &b()).unwrap();
    assert_eq!(c.recipe, HomogeneousRecipe::Star { parts: vec![2, 2] });
    assert_eq!(resolve_sequence(&c.matrix, &b()).unwrap(), BettiSequence::homogeneous(5, 4, 6).unwrap());

    let c = homogeneous_matrix(5, 7, 9, &b()).unwrap();
    assert!(matches!(c.recipe, HomogeneousRecipe::Lift { .. }));
    assert_eq!(resolve_sequence(&c.matrix, &b()).unwrap(), BettiSequence::homogeneous(5, 7, 9).unwrap());

    assert!(homogeneous_matrix(5, 3, 5, &b()).is_err());
    assert!(homogeneous_matrix(4, 5, 8, &b()).is_err());
}

#[test]
fn nogaeta_extension() {
    let r = RingContext::grevlex(&["x", "y", "z"]).unwrap();
    let k = koszul_matrix(&three(&r, ["x", "y", "z"]));
    let outer = seq("2,2,2,3;4,3,3,3;4");
    let ext = nogaeta_extend(&k, &outer, 4, &b()).unwrap();
    assert_eq!(ext.matrix.rows(), 4);
    assert_eq!(ext.sequence, outer);
    let h = crate::presentation::gamma(&ext.matrix.transpose()).unwrap().components;
    assert!(h[0].is_zero());
    assert!(h[1..].iter().all(|p| !p.is_zero()));
    let g = crate::presentation::gamma(&ext.matrix).unwrap().components;
    let degs: Vec<i64> = g.iter().map(|p| p.degree().unwrap() as i64).collect();
    assert_eq!(degs, outer.a());
    assert_eq!(resolve_sequence(&ext.matrix, &b()).unwrap(), outer);
    assert!(nogaeta_extend(&k, &seq("1,1,1,3;3,2,2,2;3"), 4, &b()).is_err());
}

#[test]
fn realize_from_verdicts() {
    for text in ["1,1,1;2,2,2;3", "3,4,5;8,7,6;9", "2,2,2,3;4,3,3,3;4", "3,5,6;9,8,7;10"] {
        let s = seq(text);
        let c = realize(&s, &b()).unwrap();
        assert_eq!(c.sequence, s);
        assert_eq!(resolve_sequence(&c.matrix, &b()).unwrap(), s, "{text}");
    }
    assert!(realize(&seq("3,3,3,3;5,5,5,5;8"), &b()).is_err());
}
