use std::time::Instant;

use wha_core::braided::{decompose_braided_group, BraidedGroup, Component};
use wha_core::builders::{build_group_algebra, build_groupoid_algebra, GroupTable, GroupoidTable};
use wha_core::comod::{
    adjunction_report, cotensor, dual_right_coaction, enumerate_yd, expansion_report, induce,
    internal_end_unit_report, internal_hom_report, PlainComodule, RightModule, UserModule,
};
use wha_core::linalg::commalg::{split_commutative, SplitOptions};
use wha_core::linalg::Algebra;
use wha_core::{SVec, Subspace};
use wha_core::yd::BComodule;
use wha_core::{Field, RMatrix, Report, WeakHopfAlgebra};

fn ok(rep: &Report) {
    let bad: Vec<_> = rep.failures().collect();
    assert!(bad.is_empty(), "failures: {bad:?}");
}

fn setup(ex: wha_core::builders::Example) -> (WeakHopfAlgebra, RMatrix, BraidedGroup, Vec<Component>) {
    let h = ex.algebra;
    let r = RMatrix::new(&h, &ex.r).unwrap();
    let bg = BraidedGroup::build(&h, &r).unwrap();
    let comps = decompose_braided_group(&h, &bg, &SplitOptions::default()).unwrap();
    (h, r, bg, comps)
}

#[test]
fn group_algebra_enumeration() {
    let t = Instant::now();
    let g = GroupTable::symmetric(3);
    let (h, r, bg, comps) = setup(build_group_algebra(&g, &Field::cyclotomic(3)).unwrap());
    let en = enumerate_yd(&h, &bg, &r, &comps, &SplitOptions::default(), &[]).unwrap();
    ok(&en.report);
    assert_eq!(en.simple_count(), 8);
    assert_eq!(en.simple_dims(), vec![1, 1, 2, 2, 2, 2, 3, 3]);
    assert_eq!(en.sum_of_squares(), 36);
    eprintln!("{:?}", en.components);
    eprintln!("enumeration took {:?}", t.elapsed());

    let mut corpus: Vec<BComodule> = comps.iter().map(|c| BComodule::from_subcoalgebra(&bg, &c.space).unwrap()).collect();
    corpus.push(BComodule::regular(&bg));
    corpus.push(BComodule::unit(&bg).unwrap());
    corpus.extend(en.induced.iter().map(|(_, ind, _)| ind.comodule.clone()));
    corpus.extend(en.simples.iter().map(|s| s.comodule.clone()));
    for m in &corpus {
        ok(&internal_end_unit_report(&h, m).unwrap());
        for n in &corpus {
            ok(&internal_hom_report(&h, &bg, m, n).unwrap());
        }
        for (w, ind, _) in &en.induced {
            ok(&adjunction_report(&bg, w, ind, m));
        }
    }
    eprintln!("corpus checks done at {:?}", t.elapsed());
}

#[test]
fn class_cotensor_dimensions() {
    let g = GroupTable::symmetric(3);
    let (h, _r, bg, comps) = setup(build_group_algebra(&g, &Field::cyclotomic(3)).unwrap());
    let by_dim = |d: usize| comps.iter().find(|c| c.space.dim() == d).unwrap();
    let trans = BComodule::from_subcoalgebra(&bg, &by_dim(3).space).unwrap();
    let right = dual_right_coaction(&trans.coaction, 3, bg.dim());
    assert_eq!(cotensor(&right, 3, &trans.coaction, 3).dim(), 3);
    let cyc = PlainComodule::regular(&bg, &by_dim(2).space).unwrap();
    assert_eq!(wha_core::comod::hom_colinear(&bg, &cyc, &cyc).dim(), 2);
    let triv = PlainComodule::regular(&bg, &by_dim(1).space).unwrap();
    let ind = induce(&h, &bg, &triv).unwrap();
    assert_eq!(ind.comodule.dim(), 6);
}

/// A simple right module `eA` for a block of dimension `d²`: searches the
/// basis for an element whose polynomial subalgebra splits the block into
/// `d` idempotents.
fn block_module(a: &Algebra, z: &SVec, d: usize) -> Option<RightModule> {
    (0..a.dim()).find_map(|k| {
        let x = a.mul(z, &SVec::unit(k));
        let mut powers = vec![z.clone()];
        for _ in 0..a.dim() {
            powers.push(a.mul(powers.last().unwrap(), &x));
        }
        let sub = Subspace::span(a.dim(), powers);
        let poly = a.restrict(&sub, z).ok()?;
        let idems = split_commutative(&poly, &SplitOptions::default()).ok()?;
        (idems.len() == d).then(|| RightModule::ideal(a, &sub.element(&idems[0])))
    })
}

#[test]
fn groupoid_enumeration() {
    let (h, r, bg, comps) = setup(build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap());
    assert_eq!(comps.len(), 1);
    let en = enumerate_yd(&h, &bg, &r, &comps, &SplitOptions::default(), &[]).unwrap();
    ok(&en.report);
    assert_eq!(en.simple_dims(), vec![2]);
    // W = B is the sum of two grouplike comodules, so Ind(W) ≅ V ⊕ V.
    assert_eq!(en.components[0].induced_dim, 4);
    assert!(!en.all_constructed());

    let end = &en.induced[0].2;
    let u = block_module(&end.algebra, &end.idempotents[0], 2).expect("block splits");
    let user = [UserModule { component: 0, block: 0, module: u }];
    let en = enumerate_yd(&h, &bg, &r, &comps, &SplitOptions::default(), &user).unwrap();
    ok(&en.report);
    assert!(en.all_constructed());
    let v = &en.simples[0];
    assert_eq!(v.comodule.dim(), 2);
    let ind = en.induced[0].1.comodule.clone();
    for m in [BComodule::regular(&bg), BComodule::unit(&bg).unwrap(), v.comodule.clone(), ind] {
        let y = wha_core::yd::to_yd(&h, &bg, &r, &m);
        ok(&expansion_report(&h, &en.simples, &y));
        ok(&internal_hom_report(&h, &bg, &m, &v.comodule).unwrap());
        ok(&adjunction_report(&bg, &en.induced[0].0, &en.induced[0].1, &m));
    }
}

