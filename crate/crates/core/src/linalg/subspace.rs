use std::collections::HashMap;

use rayon::prelude::*;

use super::matrix::Matrix;
use super::svec::SVec;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Incremental semi-echelon basis: every stored vector has leading
/// coefficient one and a leading index no other stored vector shares.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ambient: usize,
    pivots: HashMap<usize, usize>,
    vecs: Vec<SVec>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Echelon {
        Echelon { ambient, pivots: HashMap::new(), vecs: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    /// Reduces until the leading index is not a pivot (or `v` vanishes),
    /// stopping early once the leading index reaches `stop`.
    fn reduce_leading(&self, mut v: SVec, stop: usize) -> SVec {
        while let Some((i, c)) = v.leading() {
            if *i >= stop {
                break;
            }
            match self.pivots.get(i) {
                Some(&p) => {
                    let c = -c.clone();
                    v = v.axpy(&c, &self.vecs[p]);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce_leading(v.clone(), usize::MAX).is_zero()
    }

    /// Adds `v` if independent; returns whether it was added.
    pub fn insert(&mut self, v: SVec) -> bool {
        let r = self.reduce_leading(v, usize::MAX);
        match r.leading() {
            None => false,
            Some((i, c)) => {
                let i = *i;
                let inv = c.inv().expect("nonzero leading coefficient");
                self.pivots.insert(i, self.vecs.len());
                self.vecs.push(r.scale(&inv));
                true
            }
        }
    }

    /// If `v` reduces to something supported on indices `>= stop`, returns
    /// that tail re-based to zero: the relation expressing the dependency.
    pub fn dependency(&self, v: &SVec, stop: usize) -> Option<SVec> {
        let r = self.reduce_leading(v.clone(), stop);
        match r.leading() {
            Some((i, _)) if *i < stop => None,
            _ => Some(r.slice(stop, self.ambient)),
        }
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_echelon(self.ambient, self.vecs)
    }
}

/// Solves systems `A x = b` for a fixed `A` and reports its kernel.
pub struct Solver {
    rows: usize,
    cols: usize,
    ech: Echelon,
}

impl Solver {
    pub fn new(a: &Matrix) -> Solver {
        let (rows, cols) = (a.rows(), a.cols());
        let mut ech = Echelon::new(rows + cols);
        for j in 0..cols {
            ech.insert(a.col(j).concat(rows, &SVec::unit(j)));
        }
        Solver { rows, cols, ech }
    }

    pub fn rank(&self) -> usize {
        self.ech.pivots.keys().filter(|&&i| i < self.rows).count()
    }

    pub fn kernel(&self) -> Subspace {
        let vs = self
            .ech
            .vecs
            .iter()
            .filter(|v| v.leading().is_some_and(|(i, _)| *i >= self.rows))
            .map(|v| v.slice(self.rows, self.rows + self.cols));
        Subspace::span(self.cols, vs)
    }

    pub fn solve(&self, b: &SVec) -> Option<SVec> {
        let r = self.ech.reduce_leading(b.clone(), self.rows);
        match r.leading() {
            Some((i, _)) if *i < self.rows => None,
            _ => Some(r.slice(self.rows, self.rows + self.cols).neg()),
        }
    }
}

/// A subspace of `k^ambient` with a basis in reduced row echelon form.
/// The representation is canonical, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: (0..ambient).map(SVec::unit).collect(), pivots: (0..ambient).collect() }
    }

    pub fn span<I: IntoIterator<Item = SVec>>(ambient: usize, vectors: I) -> Subspace {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    /// Parallel span for large generating sets: independent chunks are
    /// reduced separately, then merged.
    pub fn span_par(ambient: usize, vectors: Vec<SVec>) -> Subspace {
        if vectors.len() < 256 {
            return Subspace::span(ambient, vectors);
        }
        let chunk = vectors.len().div_ceil(rayon::current_num_threads().max(1) * 2).max(64);
        let parts: Vec<Subspace> = vectors
            .par_chunks(chunk)
            .map(|c| Subspace::span(ambient, c.iter().cloned()))
            .collect();
        let mut e = Echelon::new(ambient);
        for p in parts {
            for v in p.basis {
                e.insert(v);
            }
        }
        e.into_subspace()
    }

    fn from_echelon(ambient: usize, mut vecs: Vec<SVec>) -> Subspace {
        vecs.sort_by_key(|v| v.leading().map(|(i, _)| *i));
        let pivots: Vec<usize> = vecs.iter().map(|v| v.leading().unwrap().0).collect();
        for i in (0..vecs.len()).rev() {
            let p = pivots[i];
            let (head, tail) = vecs.split_at_mut(i);
            let bi = &tail[0];
            head.par_iter_mut().for_each(|bj| {
                let c = bj.get(p);
                if !c.is_zero() {
                    *bj = bj.axpy(&-c, bi);
                }
            });
        }
        Subspace { ambient, basis: vecs, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_pos(&self, i: usize) -> Option<usize> {
        self.pivots.binary_search(&i).ok()
    }

    /// `v` minus its projection along the pivot coordinates.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut terms: Vec<(usize, Scalar)> = v.entries().to_vec();
        for (i, c) in v.iter() {
            if let Some(k) = self.pivot_pos(*i) {
                terms.extend(self.basis[k].iter().map(|(j, b)| (*j, -(b * c))));
            }
        }
        SVec::from_terms(terms)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &SVec) -> Option<SVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SVec::from_sorted(
            v.iter().filter_map(|(i, c)| self.pivot_pos(*i).map(|k| (k, c.clone()))).collect(),
        ))
    }

    /// Coordinates of each column of `m`, which must lie in the subspace.
    pub fn coords_matrix(&self, m: &Matrix) -> Result<Matrix> {
        let cols = m
            .columns()
            .par_iter()
            .map(|c| {
                self.coords(c)
                    .ok_or_else(|| Error::IllFormed("vector outside the expected subspace".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), cols))
    }

    /// The element with the given coordinates.
    pub fn element(&self, coords: &SVec) -> SVec {
        SVec::from_terms(
            coords.iter().flat_map(|(k, c)| self.basis[*k].iter().map(move |(i, b)| (*i, b * c))),
        )
    }

    /// Linear map `k^ambient → k^dim` reading the pivot entries; it agrees
    /// with [`Subspace::coords`] on the subspace.
    pub fn coord_map(&self) -> Matrix {
        Matrix::from_columns(
            self.dim(),
            (0..self.ambient).map(|i| self.pivot_pos(i).map_or_else(SVec::zero, SVec::unit)).collect(),
        )
    }

    /// Inclusion map `k^dim → k^ambient`.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.ambient, self.basis.clone())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned()))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let neg: Vec<SVec> = other.basis.iter().map(SVec::neg).collect();
        let stacked = Matrix::from_columns(
            self.ambient,
            self.basis.iter().cloned().chain(neg).collect(),
        );
        let k = stacked.kernel();
        let d = self.dim();
        Ok(Subspace::span(
            self.ambient,
            k.basis().iter().map(|v| self.element(&v.slice(0, d))),
        ))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::span_par(m.rows(), self.basis.par_iter().map(|v| m.apply(v)).collect())
    }

    /// Coordinates in the quotient `k^ambient / self`, indexed by the
    /// non-pivot positions in increasing order.
    pub fn quotient(&self) -> Quotient {
        let free: Vec<usize> = (0..self.ambient).filter(|i| self.pivot_pos(*i).is_none()).collect();
        let pos = free.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        Quotient { sub: self.clone(), free, pos }
    }
}

/// The quotient map onto `k^ambient / U`.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: Subspace,
    free: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.sub
    }

    pub fn project(&self, v: &SVec) -> SVec {
        self.sub.reduce(v).reindex(|i| self.pos[&i])
    }

    /// A representative of the class with the given coordinates.
    pub fn lift(&self, q: &SVec) -> SVec {
        q.reindex(|k| self.free[k])
    }

    pub fn projection(&self) -> Matrix {
        Matrix::from_fn(self.dim(), self.sub.ambient(), |i| self.project(&SVec::unit(i)))
    }
}
