use wha_core::builders::{build_drinfeld_double, build_group_algebra, build_groupoid_algebra, GroupTable, GroupoidTable};
use wha_core::{qt_verify, wha_verify, Field, Matrix, SVec};

fn assert_all_pass(rep: &wha_core::Report) {
    let bad: Vec<_> = rep.failures().collect();
    assert!(bad.is_empty(), "failures: {bad:?}");
}

#[test]
fn group_algebra_s3() {
    let ex = build_group_algebra(&GroupTable::symmetric(3), &Field::cyclotomic(3)).unwrap();
    assert_all_pass(&wha_verify(&ex.algebra));
    let (rep, rm) = qt_verify(&ex.algebra, &ex.r);
    assert_all_pass(&rep);
    assert_eq!(rm.unwrap().rbar, ex.r);
}

#[test]
fn indiscrete_groupoid() {
    let ex = build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap();
    let h = &ex.algebra;
    assert_all_pass(&wha_verify(h));
    let (rep, rm) = qt_verify(h, &ex.r);
    assert_all_pass(&rep);
    assert_eq!(&rm.unwrap().rbar, h.delta_one());
    // eps_t(f) = id of the target.
    let f = h.labels().iter().position(|l| l == "f21").unwrap();
    let id2 = h.labels().iter().position(|l| l == "id2").unwrap();
    assert_eq!(h.eps_t(&SVec::unit(f)), SVec::unit(id2));
    assert_eq!(h.eps_t(h.unit()), *h.unit());
    assert_eq!(h.h_t().dim(), 2);
}

#[test]
fn drinfeld_doubles() {
    for g in [GroupTable::cyclic(1), GroupTable::cyclic(2)] {
        let ex = build_drinfeld_double(&g, &Field::rationals()).unwrap();
        assert_all_pass(&wha_verify(&ex.algebra));
        assert_all_pass(&qt_verify(&ex.algebra, &ex.r).0);
    }
}

#[test]
fn identity_antipode_breaks_axiom_4() {
    let ex = build_group_algebra(&GroupTable::symmetric(3), &Field::rationals()).unwrap();
    let h = ex.algebra;
    let n = h.dim();
    let mult = (0..n * n).map(|t| h.algebra().basis_product(t / n, t % n).clone()).collect();
    let comult = (0..n).map(|i| h.comult_matrix().col(i).clone()).collect();
    let broken = wha_core::WeakHopfAlgebra::new(
        h.field().clone(),
        h.labels().to_vec(),
        mult,
        h.unit().clone(),
        comult,
        h.counit().clone(),
        Matrix::identity(n),
    )
    .unwrap();
    let rep = wha_verify(&broken);
    assert!(!rep.get("axiom 4").unwrap().passed);
    assert!(!rep.get("axiom 6").unwrap().passed);
}

#[test]
fn drinfeld_double_s3() {
    let ex = build_drinfeld_double(&GroupTable::symmetric(3), &Field::cyclotomic(3)).unwrap();
    assert_eq!(ex.algebra.dim(), 36);
    assert_all_pass(&wha_verify(&ex.algebra));
    assert_all_pass(&qt_verify(&ex.algebra, &ex.r).0);
}
