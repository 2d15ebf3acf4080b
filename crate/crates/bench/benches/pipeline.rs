use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use wha_core::braided::{braided_group_verify, decompose_braided_group, BraidedGroup};
use wha_core::builders::{build_drinfeld_double, build_group_algebra, build_groupoid_algebra, GroupTable, GroupoidTable};
use wha_core::comod::enumerate_yd;
use wha_core::linalg::commalg::SplitOptions;
use wha_core::smash::{smash_build, ModuleAlgebra};
use wha_core::{wha_verify, Field, RMatrix};

fn pipeline(c: &mut Criterion) {
    let q3 = Field::cyclotomic(3);
    let s3 = GroupTable::symmetric(3);
    let opts = SplitOptions::default();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);

    let ks3 = build_group_algebra(&s3, &q3).unwrap();
    group.bench_function("kS3 axioms", |b| b.iter(|| wha_verify(black_box(&ks3.algebra))));

    group.bench_function("kS3 enumerate", |b| {
        b.iter(|| {
            let h = &ks3.algebra;
            let r = RMatrix::new(h, &ks3.r).unwrap();
            let bg = BraidedGroup::build(h, &r).unwrap();
            let comps = decompose_braided_group(h, &bg, &opts).unwrap();
            enumerate_yd(h, &bg, &r, &comps, &opts, &[]).unwrap().simple_count()
        })
    });

    let gpd = build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap();
    group.bench_function("groupoid smash H*#H", |b| {
        let ma = ModuleAlgebra::dual_hit(&gpd.algebra).unwrap();
        b.iter(|| smash_build(&gpd.algebra, black_box(&ma)).unwrap().dim())
    });

    let dz3 = build_drinfeld_double(&GroupTable::cyclic(3), &q3).unwrap();
    group.bench_function("D(Z3) braided group", |b| {
        let r = RMatrix::new(&dz3.algebra, &dz3.r).unwrap();
        b.iter(|| {
            let bg = BraidedGroup::build(&dz3.algebra, &r).unwrap();
            braided_group_verify(&dz3.algebra, &bg, &r).unwrap().passed()
        })
    });
    group.finish();
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
