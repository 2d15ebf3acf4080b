use rayon::prelude::*;

use super::subspace::{Echelon, Solver, Subspace};
use super::svec::SVec;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A linear map `k^cols → k^rows`, stored as the sparse images of the
/// standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, columns: vec![SVec::zero(); cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix { rows: n, cols: n, columns: (0..n).map(SVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SVec>) -> Matrix {
        debug_assert!(columns.iter().all(|c| c.max_index().map_or(true, |i| i < rows)));
        Matrix { rows, cols: columns.len(), columns }
    }

    /// Builds column `j` as `f(j)`, in parallel.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize) -> SVec + Sync + Send) -> Matrix {
        let columns = (0..cols).into_par_iter().map(f).collect();
        Matrix::from_columns(rows, columns)
    }

    pub fn from_dense_rows(rows: &[Vec<Scalar>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let columns = (0..c)
            .map(|j| SVec::from_terms((0..r).map(|i| (i, rows[i][j].clone()))))
            .collect();
        Matrix { rows: r, cols: c, columns }
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SVec::is_zero)
    }

    pub fn apply(&self, x: &SVec) -> SVec {
        match x.nnz() {
            0 => SVec::zero(),
            1 => {
                let (j, c) = &x.entries()[0];
                self.columns[*j].scale(c)
            }
            _ => SVec::from_terms(
                x.iter()
                    .flat_map(|(j, c)| self.columns[*j].iter().map(move |(i, a)| (*i, a * c))),
            ),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "composition shape mismatch");
        let columns = other.columns.par_iter().map(|c| self.apply(c)).collect();
        Matrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                cols[*i].push((j, c.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            columns: cols.into_iter().map(SVec::from_sorted).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// `A ⊗ B` with the index of `e_i ⊗ e_j` equal to `i·dim_B + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let columns = (0..self.cols * other.cols)
            .into_par_iter()
            .map(|c| {
                let (i, j) = (c / other.cols, c % other.cols);
                self.columns[i].kron(&other.columns[j], other.rows)
            })
            .collect();
        Matrix { rows: self.rows * other.rows, cols: self.cols * other.cols, columns }
    }

    /// Stacks maps with a common domain: `x ↦ (A x, B x, …)`.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let columns = (0..cols)
            .map(|j| {
                let mut v = Vec::new();
                let mut off = 0;
                for b in blocks {
                    v.extend(b.columns[j].iter().map(|(i, c)| (i + off, c.clone())));
                    off += b.rows;
                }
                SVec::from_sorted(v)
            })
            .collect();
        Matrix { rows, cols, columns }
    }

    /// Places maps side by side: `(x, y, …) ↦ A x + B y + …`.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows));
        let columns = blocks.iter().flat_map(|b| b.columns.iter().cloned()).collect();
        Matrix::from_columns(rows, columns)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for c in &self.columns {
            e.insert(c.clone());
        }
        e.len()
    }

    /// `{v : Mv = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        Solver::new(self).kernel()
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns.iter().cloned())
    }

    /// Solves `M x = b` for one particular `x`.
    pub fn solve(&self, b: &SVec) -> Option<SVec> {
        Solver::new(self).solve(b)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let solver = Solver::new(self);
        if solver.rank() != self.rows {
            return Err(Error::Singular);
        }
        let columns = (0..self.rows)
            .map(|i| solver.solve(&SVec::unit(i)).ok_or(Error::Singular))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, columns })
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, c) in self.columns.iter().enumerate() {
            acc = &acc + &c.get(j);
        }
        acc
    }

    /// First column where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        self.columns.iter().zip(&other.columns).position(|(a, b)| a != b)
    }

    pub fn restrict_columns(&self, which: &[usize]) -> Matrix {
        Matrix::from_columns(self.rows, which.iter().map(|&j| self.columns[j].clone()).collect())
    }
}
