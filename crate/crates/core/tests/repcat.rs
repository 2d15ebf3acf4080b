use wha_core::builders::{build_drinfeld_double, build_group_algebra, build_groupoid_algebra, GroupTable, GroupoidTable};
use wha_core::repcat::{
    braiding, ttensor, unitors, verify_braiding, verify_duality, verify_hexagons, verify_naturality,
};
use wha_core::{Field, HModule, Matrix, RMatrix, Report, SVec, Subspace};

fn ok(rep: &Report) {
    let bad: Vec<_> = rep.failures().collect();
    assert!(bad.is_empty(), "failures: {bad:?}");
}

/// The 2-dimensional simple module of the indiscrete groupoid: left ideal
/// spanned by the morphisms out of object 1.
fn groupoid_simple(h: &wha_core::WeakHopfAlgebra) -> HModule {
    let reg = HModule::regular(h);
    let src1: Vec<SVec> = (0..h.dim())
        .filter(|&i| ["id1", "f21"].contains(&h.label(i)))
        .map(SVec::unit)
        .collect();
    reg.submodule(&Subspace::span(h.dim(), src1)).unwrap()
}

#[test]
fn groupoid_tensor_and_duals() {
    let ex = build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let v = groupoid_simple(h);
    ok(&v.verify(h));
    assert_eq!(ttensor(h, &v, &v).carrier.dim(), 2);
    ok(&verify_duality(h, &v).unwrap());
    ok(&verify_duality(h, &HModule::unit(h)).unwrap());
    ok(&verify_braiding(h, &v, &v, &r));
    // c_{V,V} squares to the identity on the carrier.
    let (c, _) = braiding(h, &v, &v, &r);
    let vv = ttensor(h, &v, &v);
    for b in vv.carrier.basis() {
        assert_eq!(&c.apply(&c.apply(b)), b);
    }
    ok(&verify_hexagons(h, [&v, &v, &HModule::regular(h)], &r));
    ok(&verify_naturality(h, &v, &r).unwrap());
}

#[test]
fn group_algebra_rigidity() {
    let ex = build_group_algebra(&GroupTable::symmetric(3), &Field::cyclotomic(3)).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let reg = HModule::regular(h);
    let adj = HModule::adjoint(h);
    ok(&reg.verify(h));
    ok(&adj.verify(h));
    assert_eq!(ttensor(h, &reg, &adj).carrier.dim(), 36);
    ok(&verify_duality(h, &reg).unwrap());
    // Trivial R: the braiding is the plain swap.
    let (c, _) = braiding(h, &reg, &adj, &r);
    assert_eq!(c, wha_core::linalg::tensor::permutation_matrix(&[6, 6], &[1, 0]));
    ok(&verify_hexagons(h, [&reg, &adj, &reg], &r));
    ok(&verify_naturality(h, &adj, &r).unwrap());
    let u = unitors(h, &reg).unwrap();
    assert_eq!(u.l.compose(&u.l_inv), Matrix::identity(6));
    assert_eq!(HModule::unit(h).dual(h), HModule::unit(h));
}

#[test]
fn double_braiding() {
    let ex = build_drinfeld_double(&GroupTable::cyclic(2), &Field::rationals()).unwrap();
    let h = &ex.algebra;
    let r = RMatrix::new(h, &ex.r).unwrap();
    let reg = HModule::regular(h);
    ok(&verify_braiding(h, &reg, &reg, &r));
    ok(&verify_hexagons(h, [&reg, &reg, &reg], &r));
    ok(&verify_naturality(h, &reg, &r).unwrap());
    ok(&verify_duality(h, &reg).unwrap());
}
