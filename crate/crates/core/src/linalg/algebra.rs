//! Finite-dimensional associative algebras given by structure constants.

use rayon::prelude::*;

use super::matrix::Matrix;
use super::poly::{min_poly_by, Poly};
use super::subspace::Subspace;
use super::svec::SVec;
use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

/// `table[i * dim + j]` is the product `e_i e_j`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<SVec>,
    unit: SVec,
}

impl Algebra {
    pub fn new(field: Field, dim: usize, table: Vec<SVec>, unit: SVec) -> Result<Algebra> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "product table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        Ok(Algebra { field, dim, table, unit })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &SVec {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SVec {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        SVec::from_terms(x.iter().flat_map(|(i, a)| {
            y.iter().flat_map(move |(j, b)| {
                let ab = a * b;
                self.basis_product(*i, *j).iter().map(move |(k, c)| (*k, c * &ab)).collect::<Vec<_>>()
            })
        }))
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_matrix(&self, x: &SVec) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |j| self.mul(x, &SVec::unit(j)))
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_matrix(&self, x: &SVec) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |j| self.mul(&SVec::unit(j), x))
    }

    /// First basis triple violating associativity.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        (0..n * n * n).into_par_iter().find_first(|&t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let (ei, ek) = (SVec::unit(i), SVec::unit(k));
            let left = self.mul(self.basis_product(i, j), &ek);
            let right = self.mul(&ei, self.basis_product(j, k));
            left != right
        })
        .map(|t| (t / (n * n), (t / n) % n, t % n))
    }

    pub fn unit_failure(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let e = SVec::unit(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `{z : z e_j = e_j z for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let comm = Matrix::from_fn(n * n, n, |i| {
            SVec::from_terms((0..n).flat_map(|j| {
                self.basis_product(i, j)
                    .sub(self.basis_product(j, i))
                    .into_entries()
                    .into_iter()
                    .map(move |(k, c)| (j * n + k, c))
            }))
        });
        comm.kernel()
    }

    /// Gram matrix of the trace form `(x, y) ↦ tr(L_{xy})`.
    pub fn trace_form(&self) -> Matrix {
        let traces: Vec<Scalar> =
            (0..self.dim).into_par_iter().map(|k| self.left_matrix(&SVec::unit(k)).trace()).collect();
        let t = SVec::from_dense(&traces);
        Matrix::from_fn(self.dim, self.dim, |j| {
            SVec::from_terms((0..self.dim).map(|i| (i, self.basis_product(i, j).dot(&t))))
        })
    }

    /// The trace-form radical; it is zero exactly when the algebra is
    /// semisimple (characteristic zero).
    pub fn trace_radical(&self) -> Subspace {
        self.trace_form().kernel()
    }

    pub fn is_semisimple(&self) -> bool {
        self.trace_radical().is_zero()
    }

    /// The subalgebra spanned by `sub`, expressed in the coordinates of
    /// its canonical basis. Fails if `sub` is not closed or lacks the unit.
    pub fn restrict(&self, sub: &Subspace, unit: &SVec) -> Result<Algebra> {
        let b = sub.basis();
        let m = b.len();
        let table = (0..m * m)
            .into_par_iter()
            .map(|t| {
                let p = self.mul(&b[t / m], &b[t % m]);
                sub.coords(&p).ok_or_else(|| Error::IllFormed("subspace is not closed under products".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let unit = sub.coords(unit).ok_or_else(|| Error::IllFormed("unit outside subspace".into()))?;
        Algebra::new(self.field.clone(), m, table, unit)
    }

    /// Minimal polynomial of `x` acting by left multiplication on `e A`,
    /// where `e` is an idempotent commuting with `x`.
    pub fn min_poly_in(&self, x: &SVec, e: &SVec) -> Poly {
        min_poly_by(self.dim, e.clone(), |v| self.mul(x, v))
    }

    pub fn min_poly(&self, x: &SVec) -> Poly {
        self.min_poly_in(x, &self.unit)
    }
}
