use rayon::prelude::*;

use super::WeakHopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::tensor::{apply_legs, permute};
use crate::linalg::{Matrix, SVec};
use crate::report::Report;

/// A verified R-matrix together with its weak inverse `R̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub r: SVec,
    pub rbar: SVec,
}

impl RMatrix {
    /// Verifies `r` and solves for `R̄`; the first failing law is the error.
    pub fn new(h: &WeakHopfAlgebra, r: &SVec) -> Result<RMatrix> {
        let (rep, rm) = qt_verify(h, r);
        if let Some(c) = rep.failures().next() {
            if c.name == "R inverse" {
                return Err(Error::NoInverse);
            }
            return Err(Error::NotQuasiTriangular {
                law: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
        rm.ok_or(Error::NoInverse)
    }
}

/// Solves `R X = Δ^op(1)`, `X R = Δ(1)`, `Δ(1) X Δ^op(1) = X`.
fn solve_rbar(h: &WeakHopfAlgebra, r: &SVec) -> Option<SVec> {
    let n = h.dim();
    let nn = n * n;
    let d1 = h.delta_one();
    let d1op = permute(d1, &[n, n], &[1, 0]);
    let system = Matrix::from_fn(3 * nn, nn, |k| {
        let x = SVec::unit(k);
        let a = h.tmul(2, r, &x);
        let b = h.tmul(2, &x, r);
        let c = h.tmul(2, &h.tmul(2, d1, &x), &d1op).sub(&x);
        a.concat(nn, &b).concat(2 * nn, &c)
    });
    let rhs = d1op.concat(nn, d1);
    system.solve(&rhs)
}

/// Checks the quasi-triangular axioms and the standard consequences;
/// returns the R-matrix when everything holds.
pub fn qt_verify(h: &WeakHopfAlgebra, r: &SVec) -> (Report, Option<RMatrix>) {
    let n = h.dim();
    let dims2 = [n, n];
    let mut rep = Report::new();
    let d1 = h.delta_one();
    let d1op = permute(d1, &dims2, &[1, 0]);

    let contained = h.tmul(2, &h.tmul(2, &d1op, r), d1) == *r;
    rep.check("R containment", (!contained).then(|| "Δ^op(1) R Δ(1) ≠ R".to_string()));

    let inter = (0..n).into_par_iter().find_first(|&i| {
        let e = SVec::unit(i);
        h.tmul(2, r, &h.delta(&e)) != h.tmul(2, &h.delta_op(&e), r)
    });
    rep.check("R intertwiner", inter.map(|i| format!("h = {}", h.witness(i))));

    let one = h.unit();
    let r12 = r.kron(one, n);
    let r23 = one.kron(r, n * n);
    let r13 = permute(&r12, &[n, n, n], &[0, 2, 1]);
    let id_delta = apply_legs(r, &dims2, &[(1, h.comult_matrix())]);
    rep.check(
        "(id ⊗ Δ)R = R13 R12",
        (id_delta != h.tmul(3, &r13, &r12)).then(|| "coproduct on the second leg".to_string()),
    );
    let delta_id = apply_legs(r, &dims2, &[(0, h.comult_matrix())]);
    rep.check(
        "(Δ ⊗ id)R = R13 R23",
        (delta_id != h.tmul(3, &r13, &r23)).then(|| "coproduct on the first leg".to_string()),
    );

    let rbar = solve_rbar(h, r);
    rep.check("R inverse", rbar.is_none().then(|| "no R̄ with R R̄ = Δ^op(1), R̄ R = Δ(1)".to_string()));

    let (et, es, s) = (h.eps_t_matrix(), h.eps_s_matrix(), h.antipode());
    let er1 = if apply_legs(r, &dims2, &[(0, es)]) != *d1 {
        Some("(ε_s ⊗ id)R ≠ Δ(1)".to_string())
    } else if apply_legs(r, &dims2, &[(0, et)]) != d1op {
        Some("(ε_t ⊗ id)R ≠ Δ^op(1)".to_string())
    } else {
        None
    };
    rep.check("eR1", er1);
    let er2 = if apply_legs(r, &dims2, &[(1, es)]) != apply_legs(&d1op, &dims2, &[(0, s)]) {
        Some("(id ⊗ ε_s)R ≠ (S ⊗ id)Δ^op(1)".to_string())
    } else if apply_legs(r, &dims2, &[(1, et)]) != apply_legs(d1, &dims2, &[(0, s)]) {
        Some("(id ⊗ ε_t)R ≠ (S ⊗ id)Δ(1)".to_string())
    } else {
        None
    };
    rep.check("eR2", er2);
    let sotsr = match &rbar {
        _ if apply_legs(r, &dims2, &[(0, s), (1, s)]) != *r => Some("(S ⊗ S)R ≠ R".to_string()),
        Some(rb) if apply_legs(r, &dims2, &[(0, s)]) != *rb => Some("(S ⊗ id)R ≠ R̄".to_string()),
        None => Some("R̄ unavailable".to_string()),
        _ => None,
    };
    rep.check("SotSR", sotsr);

    let rm = if rep.passed() { rbar.map(|rbar| RMatrix { r: r.clone(), rbar }) } else { None };
    (rep, rm)
}
