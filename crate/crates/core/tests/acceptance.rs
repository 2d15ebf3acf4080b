//! Acceptance suite: one PASS/FAIL line per criterion, all exact.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use wha_core::braided::{braided_group_verify, decompose_braided_group, BraidedGroup, Component};
use wha_core::builders::{
    build_drinfeld_double, build_group_algebra, build_groupoid_algebra, Example, GroupTable, GroupoidTable,
};
use wha_core::comod::{
    adjunction_report, enumerate_yd, induce, internal_hom_report, Enumeration, PlainComodule, RightModule,
    UserModule,
};
use wha_core::io::AlgebraFile;
use wha_core::linalg::commalg::{split_commutative, SplitOptions};
use wha_core::linalg::{Algebra, Matrix};
use wha_core::smash::{dual_smash_check, invariants_beta, phi_check, smash_build, ModuleAlgebra};
use wha_core::yd::{roundtrip_report, BComodule};
use wha_core::{qt_verify, wha_verify, Field, RMatrix, Report, SVec, Subspace, WeakHopfAlgebra};

struct Line {
    pass: bool,
    detail: String,
}

impl Line {
    fn new() -> Line {
        Line { pass: true, detail: String::new() }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            if self.detail.len() < 400 {
                self.detail.push_str(&what());
                self.detail.push_str("; ");
            }
        }
    }

    fn report(&mut self, label: &str, rep: &Report) {
        let bad: Vec<String> =
            rep.failures().map(|c| format!("{} ({})", c.name, c.witness.clone().unwrap_or_default())).collect();
        self.require(bad.is_empty(), || format!("{label}: {}", bad.join(", ")));
    }
}

struct Input {
    name: &'static str,
    h: WeakHopfAlgebra,
    r: RMatrix,
    bg: BraidedGroup,
    comps: Vec<Component>,
}

fn input(name: &'static str, ex: Example) -> Input {
    let h = ex.algebra;
    let r = RMatrix::new(&h, &ex.r).unwrap();
    let bg = BraidedGroup::build(&h, &r).unwrap();
    let comps = decompose_braided_group(&h, &bg, &SplitOptions::default()).unwrap();
    Input { name, h, r, bg, comps }
}

/// Conjugacy classes by direct orbit computation on the Cayley table.
fn classes_brute_force(g: &GroupTable) -> Vec<BTreeSet<usize>> {
    let n = g.mult.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..n).map(|x| g.mult[g.mult[x][a]][g.inverse[x]]).collect();
        orbit.iter().for_each(|&b| seen[b] = true);
        out.push(orbit);
    }
    out
}

/// Irreducible degrees of a small group from `Σ d² = |C|`, `#irreps = #classes`
/// and `#(d = 1) = |C / [C, C]|`; asserts that these determine the degrees.
fn irrep_degrees(g: &GroupTable, sub: &[usize]) -> Vec<usize> {
    let order = sub.len();
    let classes = sub
        .iter()
        .map(|&a| sub.iter().map(|&x| g.mult[g.mult[x][a]][g.inverse[x]]).collect::<BTreeSet<_>>())
        .collect::<BTreeSet<_>>()
        .len();
    let mut comm: BTreeSet<usize> =
        sub.iter().flat_map(|&x| sub.iter().map(move |&y| (x, y))).map(|(x, y)| {
            g.mult[g.mult[x][y]][g.mult[g.inverse[x]][g.inverse[y]]]
        }).collect();
    loop {
        let next: BTreeSet<usize> = comm.iter().flat_map(|&x| comm.iter().map(move |&y| g.mult[x][y])).collect();
        if next == comm {
            break;
        }
        comm = next;
    }
    let linear = order / comm.len();
    let rest = classes - linear;
    let mut solutions = Vec::new();
    fn search(left: usize, count: usize, min: usize, order: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if count == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut d = min;
        while d * d <= left {
            if order % d == 0 {
                acc.push(d);
                search(left - d * d, count - 1, d, order, acc, out);
                acc.pop();
            }
            d += 1;
        }
    }
    search(order - linear, rest, 2, order, &mut Vec::new(), &mut solutions);
    assert_eq!(solutions.len(), 1, "degrees not determined for a subgroup of order {order}");
    let mut degrees = vec![1; linear];
    degrees.extend(&solutions[0]);
    degrees
}

/// Simple modules of D(G) counted as pairs (class, irrep of the centralizer).
fn dpr_dimensions(g: &GroupTable) -> Vec<usize> {
    let n = g.mult.len();
    let mut dims = Vec::new();
    for class in classes_brute_force(g) {
        let a = *class.iter().next().unwrap();
        let centralizer: Vec<usize> = (0..n).filter(|&x| g.mult[x][a] == g.mult[a][x]).collect();
        dims.extend(irrep_degrees(g, &centralizer).into_iter().map(|d| d * class.len()));
    }
    dims.sort_unstable();
    dims
}

/// A simple right module for a block of dimension `d²`, split off by a
/// polynomial subalgebra generated inside the block.
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

/// At least ten B-comodules built from components, units, sums and simples.
fn module_corpus(inp: &Input, en: Option<&Enumeration>) -> Vec<BComodule> {
    let bd = inp.bg.dim();
    let mut out: Vec<BComodule> =
        inp.comps.iter().map(|c| BComodule::from_subcoalgebra(&inp.bg, &c.space).unwrap()).collect();
    let unit = BComodule::unit(&inp.bg).unwrap();
    out.push(BComodule::zero(&inp.h));
    out.push(unit.clone());
    out.push(unit.direct_sum(&out[0], bd));
    if let Some(en) = en {
        out.extend(en.induced.iter().map(|(_, ind, _)| ind.comodule.clone()));
        out.extend(en.simples.iter().map(|s| s.comodule.clone()));
        if let Some(s) = en.simples.first() {
            out.push(s.comodule.direct_sum(&s.comodule, bd));
            out.push(s.comodule.direct_sum(&unit, bd));
        }
    }
    let mut k = 0;
    while out.len() < 10 {
        let next = out[k].direct_sum(&out[(k + 1) % out.len()], bd);
        out.push(next);
        k += 1;
    }
    out
}

fn with_regular(inp: &Input, corpus: &[BComodule]) -> Vec<BComodule> {
    let mut v = corpus.to_vec();
    v.push(BComodule::regular(&inp.bg));
    v
}

fn print(n: usize, title: &str, line: &Line, elapsed: Duration) {
    let mark = if line.pass { "PASS" } else { "FAIL" };
    let extra = if line.detail.is_empty() { String::new() } else { format!(": {}", line.detail.trim_end_matches("; ")) };
    println!("criterion {n:>2} {mark}  {title} [{:.1}s]{extra}", elapsed.as_secs_f64());
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let opts = SplitOptions::default();
    let s3 = GroupTable::symmetric(3);
    let q3 = Field::cyclotomic(3);

    // 1: axiom suites on the three reference algebras.
    let t = Instant::now();
    let mut line = Line::new();
    let sources: [(&str, Example); 3] = [
        ("kS3", build_group_algebra(&s3, &q3).unwrap()),
        ("groupoid", build_groupoid_algebra(&GroupoidTable::indiscrete(2), &Field::rationals()).unwrap()),
        ("D(S3)", build_drinfeld_double(&s3, &q3).unwrap()),
    ];
    let mut inputs = Vec::new();
    for (name, ex) in sources {
        line.report(&format!("{name} weak Hopf"), &wha_verify(&ex.algebra));
        let (qt, rm) = qt_verify(&ex.algebra, &ex.r);
        line.report(&format!("{name} quasi-triangular"), &qt);
        let rm = rm.expect("R-matrix");
        let bg = BraidedGroup::build(&ex.algebra, &rm).unwrap();
        line.report(&format!("{name} braided group"), &braided_group_verify(&ex.algebra, &bg, &rm).unwrap());
        inputs.push(input(name, ex));
    }
    let elapsed = t.elapsed();
    line.require(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"));
    print(1, "axiom suites on kS3, groupoid and D(S3)", &line, elapsed);
    results.push(line.pass);

    // 2: trivial R collapses the braided group onto H.
    let t = Instant::now();
    let mut line = Line::new();
    for g in [GroupTable::symmetric(3), GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::cyclic(1)] {
        let inp = input("group", build_group_algebra(&g, &q3).unwrap());
        let n = inp.h.dim();
        line.require(inp.bg.carrier == Subspace::full(n), || format!("B ≠ H for |G| = {n}"));
        line.require(inp.bg.comult == *inp.h.comult_matrix(), || format!("Δ_B ≠ Δ for |G| = {n}"));
        line.require(inp.bg.antipode == *inp.h.antipode(), || format!("S_B ≠ S for |G| = {n}"));
    }
    print(2, "Δ_B = Δ and S_B = S for group algebras with R = 1 ⊗ 1", &line, t.elapsed());
    results.push(line.pass);

    // 3: components of kS3 are the conjugacy class spans.
    let t = Instant::now();
    let mut line = Line::new();
    let ks3 = &inputs[0];
    let n = ks3.h.dim();
    let mut want: Vec<Subspace> = classes_brute_force(&s3)
        .iter()
        .map(|c| Subspace::span(n, c.iter().map(|&g| SVec::unit(g))))
        .collect();
    want.sort_by_key(|s| (s.dim(), s.pivots().to_vec()));
    let got: Vec<Subspace> = ks3.comps.iter().map(|c| c.space.clone()).collect();
    line.require(got.len() == 3, || format!("r = {}", got.len()));
    line.require(got.iter().map(Subspace::dim).collect::<Vec<_>>() == [1, 2, 3], || "dims".into());
    line.require(got == want, || "components differ from class spans".into());
    print(3, "kS3 decomposes into the three conjugacy class spans", &line, t.elapsed());
    results.push(line.pass);

    // 4: enumeration of kS3 against the class × centralizer-irrep count.
    let t = Instant::now();
    let mut line = Line::new();
    let en_s3 = enumerate_yd(&ks3.h, &ks3.bg, &ks3.r, &ks3.comps, &opts, &[]).unwrap();
    line.report("enumeration", &en_s3.report);
    let oracle = dpr_dimensions(&s3);
    line.require(oracle == [1, 1, 2, 2, 2, 2, 3, 3], || format!("oracle {oracle:?}"));
    line.require(en_s3.simple_count() == 8, || format!("{} simples", en_s3.simple_count()));
    line.require(en_s3.simple_dims() == oracle, || format!("dims {:?}", en_s3.simple_dims()));
    line.require(en_s3.sum_of_squares() == 36, || format!("Σ dim² = {}", en_s3.sum_of_squares()));
    let elapsed = t.elapsed();
    line.require(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"));
    print(4, "kS3 has 8 simple YD modules of dims 1,1,2,2,2,2,3,3", &line, elapsed);
    results.push(line.pass);

    // 5: the genuinely weak groupoid case.
    let t = Instant::now();
    let mut line = Line::new();
    let gpd = &inputs[1];
    let en0 = enumerate_yd(&gpd.h, &gpd.bg, &gpd.r, &gpd.comps, &opts, &[]).unwrap();
    line.report("enumeration", &en0.report);
    let end = &en0.induced[0].2;
    let user = block_module(&end.algebra, &end.idempotents[0], 2)
        .map(|module| vec![UserModule { component: 0, block: 0, module }])
        .unwrap_or_default();
    let en_gpd = enumerate_yd(&gpd.h, &gpd.bg, &gpd.r, &gpd.comps, &opts, &user).unwrap();
    line.report("enumeration with module", &en_gpd.report);
    line.require(gpd.bg.dim() == 2, || format!("dim B = {}", gpd.bg.dim()));
    line.require(gpd.comps.len() == 1, || format!("r = {}", gpd.comps.len()));
    line.require(en_gpd.simple_dims() == [2], || format!("simples {:?}", en_gpd.simple_dims()));
    line.require(en_gpd.all_constructed() && en_gpd.simples[0].comodule.dim() == 2, || "V not built".into());
    print(5, "groupoid: dim B = 2, r = 1, one simple of dim 2", &line, t.elapsed());
    results.push(line.pass);

    let corpora = [
        module_corpus(&inputs[0], Some(&en_s3)),
        module_corpus(&inputs[1], Some(&en_gpd)),
        module_corpus(&inputs[2], None),
    ];

    // 6: round trips YD ↔ B-comodules.
    let t = Instant::now();
    let mut line = Line::new();
    for (inp, corpus) in inputs.iter().zip(&corpora) {
        let all = with_regular(inp, corpus);
        line.require(all.len() >= 10, || format!("{}: corpus of {}", inp.name, all.len()));
        for (k, m) in all.iter().enumerate() {
            line.report(&format!("{} module {k}", inp.name), &roundtrip_report(&inp.h, &inp.bg, &inp.r, m).unwrap());
        }
    }
    print(6, "toYD and toBComod are mutually inverse on every corpus module", &line, t.elapsed());
    results.push(line.pass);

    // 7: S_B T_B = T_B S_B = id.
    let t = Instant::now();
    let mut line = Line::new();
    let mut extra = vec![
        input("Z2", build_group_algebra(&GroupTable::cyclic(2), &Field::rationals()).unwrap()),
        input("D(Z2)", build_drinfeld_double(&GroupTable::cyclic(2), &Field::rationals()).unwrap()),
        input("discrete groupoid", build_groupoid_algebra(&GroupoidTable::discrete(2), &Field::rationals()).unwrap()),
    ];
    for inp in inputs.iter().chain(&extra) {
        let id = Matrix::identity(inp.bg.dim());
        let st = inp.bg.antipode.compose(&inp.bg.antipode_inv);
        let ts = inp.bg.antipode_inv.compose(&inp.bg.antipode);
        line.require(st == id && ts == id, || format!("{}", inp.name));
    }
    print(7, "S_B T_B = T_B S_B = id on every input", &line, t.elapsed());
    results.push(line.pass);

    // 8: internal Hom against the cotensor product.
    let t = Instant::now();
    let mut line = Line::new();
    for (inp, corpus) in inputs.iter().zip(&corpora) {
        for (i, m) in corpus.iter().enumerate() {
            for (j, nn) in corpus.iter().enumerate() {
                let rep = internal_hom_report(&inp.h, &inp.bg, m, nn).unwrap();
                line.report(&format!("{} ({i}, {j})", inp.name), &rep);
            }
        }
    }
    print(8, "Hom^D(M, N) ≅ *M □_D N on every corpus pair", &line, t.elapsed());
    results.push(line.pass);

    // 9: induction adjunction.
    let t = Instant::now();
    let mut line = Line::new();
    let ds3_induced: Vec<_> = inputs[2]
        .comps
        .iter()
        .map(|c| {
            let w = PlainComodule::regular(&inputs[2].bg, &c.space).unwrap();
            let ind = induce(&inputs[2].h, &inputs[2].bg, &w).unwrap();
            (w, ind)
        })
        .collect();
    let induced: [Vec<_>; 3] = [
        en_s3.induced.iter().map(|(w, ind, _)| (w.clone(), ind.clone())).collect(),
        en_gpd.induced.iter().map(|(w, ind, _)| (w.clone(), ind.clone())).collect(),
        ds3_induced,
    ];
    for ((inp, corpus), ws) in inputs.iter().zip(&corpora).zip(&induced) {
        for (i, (w, ind)) in ws.iter().enumerate() {
            for (j, m) in corpus.iter().enumerate() {
                line.report(&format!("{} (W{i}, M{j})", inp.name), &adjunction_report(&inp.bg, w, ind, m));
            }
        }
    }
    print(9, "dim Hom_H^D(Ind W, M) = dim Hom^D(W, M) on every corpus pair", &line, t.elapsed());
    results.push(line.pass);

    // 10: smash products, β and the dual smash product.
    let t = Instant::now();
    let mut line = Line::new();
    let smash_inputs: Vec<&Input> = vec![&inputs[0], &inputs[1], &extra[1], &extra[0]];
    for inp in &smash_inputs {
        let algebras = [
            ("H_t", ModuleAlgebra::target_subalgebra(&inp.h).unwrap()),
            ("B", ModuleAlgebra::braided_group(&inp.h, &inp.bg).unwrap()),
            ("H*", ModuleAlgebra::dual_hit(&inp.h).unwrap()),
        ];
        for (a_name, ma) in &algebras {
            let label = format!("{} A = {a_name}", inp.name);
            line.report(&label, &ma.verify(&inp.h));
            let sp = smash_build(&inp.h, ma).unwrap();
            line.report(&label, &phi_check(&inp.h, ma, &sp).unwrap());
            let ds = dual_smash_check(&inp.h, ma, &sp, &opts).unwrap();
            line.report(&label, &ds.report);
            line.require(ds.double_smash_dim == ds.end_dim, || format!("{label}: dual smash dims"));
        }
    }
    for (inp, corpus) in inputs.iter().zip(&corpora) {
        for (k, m) in with_regular(inp, corpus).iter().enumerate() {
            let inv = invariants_beta(&inp.h, &m.module);
            line.report(&format!("{} β on module {k}", inp.name), &inv.report);
        }
    }
    print(10, "Φ and β bijective, (A#H)#H* matches End(A#H)_A", &line, t.elapsed());
    results.push(line.pass);

    // 11: negative controls.
    let t = Instant::now();
    let mut line = Line::new();
    let named = |rep: &Report, name: &str| rep.get(name).is_some_and(|c| !c.passed && c.witness.is_some());
    let mut file = AlgebraFile::from_algebra(&ks3.h, None);
    file.antipode = (0..file.dim).map(|i| (i, i, "1".to_string())).collect();
    let (broken, _) = file.to_algebra().unwrap();
    line.require(named(&wha_verify(&broken), "axiom 4"), || "identity antipode accepted".into());
    let g = 2;
    let (qt, _) = qt_verify(&ks3.h, &SVec::unit(g * n + g));
    line.require(named(&qt, "R intertwiner"), || "R = g ⊗ g accepted".into());
    let ds3 = &inputs[2];
    let flipped = ds3.bg.with_flipped_comult();
    let rep = braided_group_verify(&ds3.h, &flipped, &ds3.r).unwrap();
    line.require(named(&rep, "bialgebra law"), || "flipped Δ_B accepted".into());
    print(11, "mutants rejected: axiom 4, R intertwiner, flipped Δ_B", &line, t.elapsed());
    results.push(line.pass);

    extra.clear();
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
