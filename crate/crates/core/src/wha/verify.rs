use rayon::prelude::*;

use super::WeakHopfAlgebra;
use crate::linalg::tensor::{apply_legs, decode, permute};
use crate::linalg::{Matrix, SVec, Subspace};
use crate::report::Report;
use crate::scalars::Scalar;

fn first<F>(n: usize, f: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..n).into_par_iter().find_first(|&i| !f(i))
}

fn first_pair<F>(h: &WeakHopfAlgebra, f: F) -> Option<String>
where
    F: Fn(usize, usize) -> bool + Sync + Send,
{
    let n = h.dim();
    (0..n * n)
        .into_par_iter()
        .find_first(|&t| !f(t / n, t % n))
        .map(|t| format!("x = {}, y = {}", h.witness(t / n), h.witness(t % n)))
}

fn matrix_witness(h: &WeakHopfAlgebra, a: &Matrix, b: &Matrix) -> Option<String> {
    a.first_difference(b).map(|j| format!("at {}", h.witness(j)))
}

/// Exhaustive check of the weak Hopf algebra axioms and their standard
/// consequences on basis elements.
pub fn wha_verify(h: &WeakHopfAlgebra) -> Report {
    let n = h.dim();
    let e = |i: usize| SVec::unit(i);
    let mut rep = Report::new();

    rep.check(
        "associativity",
        h.algebra().associativity_failure().map(|(i, j, k)| {
            format!("({}, {}, {})", h.witness(i), h.witness(j), h.witness(k))
        }),
    );
    rep.check("unit", h.algebra().unit_failure().map(|i| h.witness(i)));

    let coassoc = first(n, |i| {
        let d = h.delta(&e(i));
        apply_legs(&d, &[n, n], &[(0, h.comult_matrix())]) == apply_legs(&d, &[n, n], &[(1, h.comult_matrix())])
    });
    rep.check("coassociativity", coassoc.map(|i| h.witness(i)));

    let counit_row = Matrix::from_columns(1, (0..n).map(|i| SVec::single(0, h.eps(&e(i)))).collect());
    let counit = first(n, |i| {
        let d = h.delta(&e(i));
        apply_legs(&d, &[n, n], &[(0, &counit_row)]) == e(i) && apply_legs(&d, &[n, n], &[(1, &counit_row)]) == e(i)
    });
    rep.check("counit", counit.map(|i| h.witness(i)));

    rep.check(
        "axiom 1",
        first_pair(h, |i, j| h.delta(h.algebra().basis_product(i, j)) == h.tmul(2, &h.delta(&e(i)), &h.delta(&e(j)))),
    );

    let d1 = h.delta_one();
    let d2 = apply_legs(d1, &[n, n], &[(0, h.comult_matrix())]);
    let d1_1 = d1.kron(h.unit(), n);
    let one_d1 = h.unit().kron(d1, n * n);
    let ax2 = if d2 != h.tmul(3, &d1_1, &one_d1) {
        Some("Δ²(1) ≠ (Δ(1) ⊗ 1)(1 ⊗ Δ(1))".to_string())
    } else if d2 != h.tmul(3, &one_d1, &d1_1) {
        Some("Δ²(1) ≠ (1 ⊗ Δ(1))(Δ(1) ⊗ 1)".to_string())
    } else {
        None
    };
    rep.check("axiom 2", ax2);

    // ε(b_i b_j) as a dense table.
    let et: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| h.eps(h.algebra().basis_product(i, j))).collect()).collect();
    let deltas: Vec<Vec<(usize, usize, Scalar)>> = (0..n).map(|k| h.delta_terms(k)).collect();
    let ax3 = (0..n * n * n).into_par_iter().find_first(|&t| {
        let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
        let lhs = h.algebra().basis_product(x, y).iter().fold(Scalar::zero(), |acc, (k, c)| acc + c * &et[*k][z]);
        let mut mid = Scalar::zero();
        let mut right = Scalar::zero();
        for (a, b, c) in &deltas[y] {
            mid = mid + c * &(&et[x][*a] * &et[*b][z]);
            right = right + c * &(&et[x][*b] * &et[*a][z]);
        }
        lhs != mid || lhs != right
    });
    rep.check(
        "axiom 3",
        ax3.map(|t| {
            format!("x = {}, y = {}, z = {}", h.witness(t / (n * n)), h.witness((t / n) % n), h.witness(t % n))
        }),
    );

    let sb: Vec<SVec> = (0..n).map(|i| h.s(&e(i))).collect();
    let ax4 = first(n, |x| {
        let mut acc = SVec::zero();
        for (a, b, c) in &deltas[x] {
            acc = acc.axpy(c, &h.mul(&e(*a), &sb[*b]));
        }
        acc == h.eps_t(&e(x))
    });
    rep.check("axiom 4", ax4.map(|i| h.witness(i)));

    let ax5 = first(n, |x| {
        let mut acc = SVec::zero();
        for (a, b, c) in &deltas[x] {
            acc = acc.axpy(c, &h.mul(&sb[*a], &e(*b)));
        }
        acc == h.eps_s(&e(x))
    });
    rep.check("axiom 5", ax5.map(|i| h.witness(i)));

    let ax6 = first(n, |x| {
        let d2 = apply_legs(&h.delta(&e(x)), &[n, n], &[(0, h.comult_matrix())]);
        let mut acc = SVec::zero();
        for (k, c) in d2.iter() {
            let d = decode(*k, &[n, n, n]);
            acc = acc.axpy(c, &h.mul(&h.mul(&sb[d[0]], &e(d[1])), &sb[d[2]]));
        }
        acc == sb[x]
    });
    rep.check("axiom 6", ax6.map(|i| h.witness(i)));

    rep.check("antipode invertible", h.antipode_inv().err().map(|_| "S is singular".to_string()));

    let (et_m, es_m, s_m) = (h.eps_t_matrix(), h.eps_s_matrix(), h.antipode());
    rep.check("eps_t idempotent", matrix_witness(h, &et_m.compose(et_m), et_m));
    rep.check("eps_s idempotent", matrix_witness(h, &es_m.compose(es_m), es_m));

    rep.check(
        "relation 1",
        first_pair(h, |x, y| {
            let v = h.eps(h.algebra().basis_product(x, y));
            v == h.eps(&h.mul(&h.eps_s(&e(x)), &e(y))) && v == h.eps(&h.mul(&e(x), &h.eps_t(&e(y))))
        }),
    );
    let rel2 = matrix_witness(h, &et_m.compose(s_m), &et_m.compose(es_m))
        .or_else(|| matrix_witness(h, &et_m.compose(es_m), &s_m.compose(es_m)));
    rep.check("relation 2", rel2);
    let rel3 = matrix_witness(h, &es_m.compose(s_m), &es_m.compose(et_m))
        .or_else(|| matrix_witness(h, &es_m.compose(et_m), &s_m.compose(et_m)));
    rep.check("relation 3", rel3);

    let rel4 = first(n, |x| {
        let lhs = h.tmul(2, d1, &e(x).kron(h.unit(), n));
        lhs == apply_legs(&h.delta(&e(x)), &[n, n], &[(1, et_m)])
    });
    rep.check("relation 4", rel4.map(|i| h.witness(i)));
    let rel5 = first(n, |x| {
        let lhs = h.tmul(2, &h.unit().kron(&e(x), n), d1);
        lhs == apply_legs(&h.delta(&e(x)), &[n, n], &[(0, es_m)])
    });
    rep.check("relation 5", rel5.map(|i| h.witness(i)));

    let anti_mult = first_pair(h, |x, y| h.s(h.algebra().basis_product(x, y)) == h.mul(&sb[y], &sb[x]))
        .or_else(|| (h.s(h.unit()) != *h.unit()).then(|| "S(1) ≠ 1".to_string()));
    rep.check("antipode anti-multiplicative", anti_mult);
    let anti_comult = first(n, |x| {
        let lhs = h.delta(&sb[x]);
        let rhs = apply_legs(&permute(&h.delta(&e(x)), &[n, n], &[1, 0]), &[n, n], &[(0, s_m), (1, s_m)]);
        lhs == rhs && h.eps(&sb[x]) == h.eps(&e(x))
    });
    rep.check("antipode anti-comultiplicative", anti_comult.map(|i| h.witness(i)));

    let ts = Subspace::span(
        n,
        h.h_t().basis().iter().flat_map(|z| h.h_s().basis().iter().map(move |y| h.mul(z, y))),
    );
    let reg = ts
        .basis()
        .iter()
        .position(|v| h.s(&h.s(v)) != *v)
        .map(|k| format!("basis vector {k} of H_t H_s: {:?}", ts.basis()[k]));
    rep.check("regularity", reg);

    rep
}
