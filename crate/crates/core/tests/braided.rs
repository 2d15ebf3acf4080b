use std::time::Instant;

use wha_core::braided::{braided_group_verify, decompose_braided_group, verify_components, BraidedGroup};
use wha_core::builders::{build_drinfeld_double, build_group_algebra, build_groupoid_algebra, GroupTable, GroupoidTable};
use wha_core::linalg::commalg::SplitOptions;
use wha_core::{Field, RMatrix, Report, SVec, Subspace};

fn ok(rep: &Report) {
    let bad: Vec<_> = rep.failures().collect();
    assert!(bad.is_empty(), "failures: {bad:?}");
}

#[test]
fn group_algebra_with_trivial_r() {
    let g = GroupTable::symmetric(3);
    let ex = build_group_algebra(&g, &Field::cyclotomic(3)).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let bg = BraidedGroup::build(h, &r).unwrap();
    assert_eq!(bg.dim(), 6);
    // B = H, and Δ_B, S_B reduce to Δ, S.
    for i in 0..6 {
        let e = SVec::unit(i);
        assert_eq!(bg.comult_ambient(&e), h.delta(&e));
        assert_eq!(bg.antipode.apply(&e), h.s(&e));
    }
    ok(&braided_group_verify(h, &bg, &r).unwrap());
    let comps = decompose_braided_group(h, &bg, &SplitOptions::default()).unwrap();
    ok(&verify_components(&bg, &comps));
    let mut dims: Vec<usize> = comps.iter().map(|c| c.space.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 2, 3]);
    for class in g.conjugacy_classes() {
        let span = Subspace::span(6, class.iter().map(|&i| SVec::unit(i)));
        assert!(comps.iter().any(|c| c.space == span), "class {class:?}");
    }
}

#[test]
fn groupoid_braided_group() {
    let ex = build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let bg = BraidedGroup::build(h, &r).unwrap();
    assert_eq!(bg.dim(), 2);
    let id1 = (0..h.dim()).find(|&i| h.label(i) == "id1").unwrap();
    let e = SVec::unit(id1);
    assert_eq!(bg.comult_ambient(&e), e.kron(&e, h.dim()));
    ok(&braided_group_verify(h, &bg, &r).unwrap());
    let comps = decompose_braided_group(h, &bg, &SplitOptions::default()).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].space.dim(), 2);
}

#[test]
fn drinfeld_double_s3() {
    let t = Instant::now();
    let ex = build_drinfeld_double(&GroupTable::symmetric(3), &Field::cyclotomic(3)).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let bg = BraidedGroup::build(h, &r).unwrap();
    assert_eq!(bg.dim(), 36);
    ok(&braided_group_verify(h, &bg, &r).unwrap());
    let comps = decompose_braided_group(h, &bg, &SplitOptions::default()).unwrap();
    ok(&verify_components(&bg, &comps));
    eprintln!("D(S3) braided group: {} components in {:?}", comps.len(), t.elapsed());

    let flipped = bg.with_flipped_comult();
    let rep = braided_group_verify(h, &flipped, &r).unwrap();
    assert!(rep.get("bialgebra law").is_some_and(|c| !c.passed));
}
