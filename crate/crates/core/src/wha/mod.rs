//! Weak Hopf algebras given by structure constants.

mod qt;
mod verify;

use std::sync::OnceLock;

use rayon::prelude::*;

pub use qt::{qt_verify, RMatrix};
pub use verify::wha_verify;

use crate::error::{Error, Result};
use crate::linalg::tensor::{decode, permute};
use crate::linalg::{Algebra, Matrix, SVec, Subspace};
use crate::scalars::{Field, Scalar};

/// Basis `b_0, …, b_{n-1}`; `H ⊗ H` is indexed by `i·n + j`.
#[derive(Debug)]
pub struct WeakHopfAlgebra {
    labels: Vec<String>,
    algebra: Algebra,
    comult: Matrix,
    counit: SVec,
    antipode: Matrix,
    antipode_inv: Option<Matrix>,
    delta_one: SVec,
    eps_t: Matrix,
    eps_s: Matrix,
    h_t: Subspace,
    h_s: Subspace,
    lmul: OnceLock<Vec<Matrix>>,
    rmul: OnceLock<Vec<Matrix>>,
    ad: OnceLock<Vec<Matrix>>,
}

impl Clone for WeakHopfAlgebra {
    fn clone(&self) -> Self {
        WeakHopfAlgebra::assemble(
            self.labels.clone(),
            self.algebra.clone(),
            self.comult.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }
}

impl WeakHopfAlgebra {
    /// `mult[i·n + j] = b_i b_j`, `comult[i] = Δ(b_i) ∈ H ⊗ H`,
    /// `counit` is the covector of `ε`, `antipode` the matrix of `S`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: Vec<SVec>,
        unit: SVec,
        comult: Vec<SVec>,
        counit: SVec,
        antipode: Matrix,
    ) -> Result<WeakHopfAlgebra> {
        let n = labels.len();
        let mismatch = |what: &str, got: usize, want: usize| {
            Error::DimensionMismatch(format!("{what}: got {got}, expected {want}"))
        };
        if comult.len() != n {
            return Err(mismatch("coproduct entries", comult.len(), n));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(mismatch("antipode size", antipode.rows().max(antipode.cols()), n));
        }
        let bound = |v: &SVec, lim: usize| v.max_index().map_or(true, |i| i < lim);
        if !mult.iter().all(|v| bound(v, n)) || !bound(&unit, n) || !bound(&counit, n) {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        if !comult.iter().all(|v| bound(v, n * n)) {
            return Err(Error::DimensionMismatch("coproduct index out of range".into()));
        }
        let algebra = Algebra::new(field, n, mult, unit)?;
        Ok(WeakHopfAlgebra::assemble(labels, algebra, Matrix::from_columns(n * n, comult), counit, antipode))
    }

    fn assemble(labels: Vec<String>, algebra: Algebra, comult: Matrix, counit: SVec, antipode: Matrix) -> Self {
        let n = algebra.dim();
        let delta_one = comult.apply(algebra.unit());
        let antipode_inv = antipode.inverse().ok();
        let terms = split_terms(&delta_one, n);
        let eps = |x: &SVec| counit.dot(x);
        let eps_t = Matrix::from_fn(n, n, |j| {
            let x = SVec::unit(j);
            let mut acc = SVec::zero();
            for (a, b, c) in &terms {
                let e = eps(&algebra.mul(&SVec::unit(*a), &x));
                acc = acc.axpy(&(&e * c), &SVec::unit(*b));
            }
            acc
        });
        let eps_s = Matrix::from_fn(n, n, |j| {
            let x = SVec::unit(j);
            let mut acc = SVec::zero();
            for (a, b, c) in &terms {
                let e = eps(&algebra.mul(&x, &SVec::unit(*b)));
                acc = acc.axpy(&(&e * c), &SVec::unit(*a));
            }
            acc
        });
        let h_t = eps_t.image();
        let h_s = eps_s.image();
        WeakHopfAlgebra {
            labels,
            algebra,
            comult,
            counit,
            antipode,
            antipode_inv,
            delta_one,
            eps_t,
            eps_s,
            h_t,
            h_s,
            lmul: OnceLock::new(),
            rmul: OnceLock::new(),
            ad: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn unit(&self) -> &SVec {
        self.algebra.unit()
    }

    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &SVec {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<&Matrix> {
        self.antipode_inv.as_ref().ok_or(Error::Singular)
    }

    pub fn eps_t_matrix(&self) -> &Matrix {
        &self.eps_t
    }

    pub fn eps_s_matrix(&self) -> &Matrix {
        &self.eps_s
    }

    /// `Δ(1) ∈ H ⊗ H`.
    pub fn delta_one(&self) -> &SVec {
        &self.delta_one
    }

    pub fn h_t(&self) -> &Subspace {
        &self.h_t
    }

    pub fn h_s(&self) -> &Subspace {
        &self.h_s
    }

    pub fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        self.algebra.mul(x, y)
    }

    pub fn delta(&self, x: &SVec) -> SVec {
        self.comult.apply(x)
    }

    pub fn delta_op(&self, x: &SVec) -> SVec {
        let n = self.dim();
        permute(&self.delta(x), &[n, n], &[1, 0])
    }

    pub fn eps(&self, x: &SVec) -> Scalar {
        self.counit.dot(x)
    }

    pub fn s(&self, x: &SVec) -> SVec {
        self.antipode.apply(x)
    }

    pub fn s_inv(&self, x: &SVec) -> Result<SVec> {
        Ok(self.antipode_inv()?.apply(x))
    }

    pub fn eps_t(&self, x: &SVec) -> SVec {
        self.eps_t.apply(x)
    }

    pub fn eps_s(&self, x: &SVec) -> SVec {
        self.eps_s.apply(x)
    }

    /// Terms `(i, j, c)` of `Δ(b_k)`.
    pub fn delta_terms(&self, k: usize) -> Vec<(usize, usize, Scalar)> {
        split_terms(self.comult.col(k), self.dim())
    }

    /// Left multiplication matrices `L_{b_i}`.
    pub fn lmul(&self) -> &[Matrix] {
        self.lmul.get_or_init(|| {
            (0..self.dim()).into_par_iter().map(|i| self.algebra.left_matrix(&SVec::unit(i))).collect()
        })
    }

    /// Right multiplication matrices `R_{b_i}`.
    pub fn rmul(&self) -> &[Matrix] {
        self.rmul.get_or_init(|| {
            (0..self.dim()).into_par_iter().map(|i| self.algebra.right_matrix(&SVec::unit(i))).collect()
        })
    }

    /// Adjoint action matrices `b ↦ h_(1) b S(h_(2))` for basis `h`.
    pub fn ad(&self) -> &[Matrix] {
        self.ad.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .into_par_iter()
                .map(|h| {
                    let terms = self.delta_terms(h);
                    Matrix::from_fn(n, n, |b| {
                        let eb = SVec::unit(b);
                        let mut acc = SVec::zero();
                        for (i, j, c) in &terms {
                            let left = self.mul(&SVec::unit(*i), &eb);
                            let v = self.mul(&left, &self.s(&SVec::unit(*j)));
                            acc = acc.axpy(c, &v);
                        }
                        acc
                    })
                })
                .collect()
        })
    }

    pub fn ad_action(&self, h: &SVec, b: &SVec) -> SVec {
        SVec::from_terms(h.iter().flat_map(|(i, c)| {
            self.ad()[*i].apply(b).into_entries().into_iter().map(move |(k, a)| (k, a * c))
        }))
    }

    /// `1 ⊗ … ⊗ 1` in `H^{⊗k}`.
    pub fn one_tensor(&self, k: usize) -> SVec {
        let n = self.dim();
        (0..k).fold(SVec::unit(0), |acc, _| acc.kron(self.unit(), n))
    }

    /// Product in `H^{⊗k}`.
    pub fn tmul(&self, k: usize, x: &SVec, y: &SVec) -> SVec {
        let n = self.dim();
        let dims = vec![n; k];
        let mut acc = Vec::new();
        for (i, a) in x.iter() {
            let di = decode(*i, &dims);
            for (j, b) in y.iter() {
                let dj = decode(*j, &dims);
                let mut prod = SVec::single(0, a * b);
                for leg in 0..k {
                    prod = prod.kron(self.algebra.basis_product(di[leg], dj[leg]), n);
                    if prod.is_zero() {
                        break;
                    }
                }
                acc.extend(prod.into_entries());
            }
        }
        SVec::from_terms(acc)
    }

    /// Names basis element `i` for witnesses.
    pub fn witness(&self, i: usize) -> String {
        format!("b{i} ({})", self.labels[i])
    }

    /// The dual weak Hopf algebra `H*` on the dual basis.
    pub fn dual(&self) -> Result<WeakHopfAlgebra> {
        let n = self.dim();
        let mult = (0..n * n)
            .map(|t| {
                let (i, j) = (t / n, t % n);
                SVec::from_terms((0..n).map(|k| (k, self.comult.col(k).get(i * n + j))))
            })
            .collect();
        let comult = (0..n)
            .map(|k| {
                SVec::from_terms((0..n * n).map(|t| (t, self.algebra.basis_product(t / n, t % n).get(k))))
            })
            .collect();
        let unit = self.counit.clone();
        let counit = self.unit().clone();
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        WeakHopfAlgebra::new(
            self.field().clone(),
            labels,
            mult,
            unit,
            comult,
            counit,
            self.antipode.transpose(),
        )
    }
}

/// Splits `x ∈ H ⊗ H` into `(i, j, c)` terms.
pub fn split_terms(x: &SVec, n: usize) -> Vec<(usize, usize, Scalar)> {
    x.iter().map(|(k, c)| (k / n, k % n, c.clone())).collect()
}

/// Structural equality of two algebras' tensors, for builder consistency checks.
pub fn same_structure(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra) -> bool {
    let n = a.dim();
    n == b.dim()
        && (0..n * n).all(|t| a.algebra.basis_product(t / n, t % n) == b.algebra.basis_product(t / n, t % n))
        && a.unit() == b.unit()
        && a.comult == b.comult
        && a.counit == b.counit
        && a.antipode == b.antipode
}
