//! Univariate polynomials over [`Scalar`], lowest degree first.

use super::matrix::Matrix;
use super::subspace::Echelon;
use super::svec::SVec;
use crate::scalars::Scalar;

pub type Poly = Vec<Scalar>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with the zero polynomial reported as `None`.
pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Scalar]) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_int(k as i64)).collect())
}

pub fn monic(p: &[Scalar]) -> Poly {
    let p = trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lc) => {
            let inv = lc.inv().expect("nonzero leading coefficient");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn rem(a: &[Scalar], b: &[Scalar]) -> Poly {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let inv = b[db].inv().expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &inv;
        for (k, c) in b.iter().enumerate() {
            r[dr - db + k] = &r[dr - db + k] - &(&f * c);
        }
        r = trim(r);
    }
    r
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&y).is_some() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn mul(a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

pub fn is_squarefree(p: &[Scalar]) -> bool {
    degree(&gcd(p, &derivative(p))) == Some(0)
}

/// Minimal polynomial of the sequence `v, T v, T² v, …` inside a space of
/// dimension `dim`: the monic `p` of least degree with `p(T) v = 0`.
pub fn min_poly_by(dim: usize, start: SVec, step: impl Fn(&SVec) -> SVec) -> Poly {
    let mut ech = Echelon::new(2 * dim + 2);
    let offset = dim;
    let mut cur = start;
    for k in 0..=dim {
        let tagged = cur.concat(offset, &SVec::unit(k));
        if let Some(dep) = ech.dependency(&tagged, offset) {
            let mut p = dep.to_dense(k + 1);
            p.truncate(k + 1);
            return p;
        }
        ech.insert(tagged);
        cur = step(&cur);
    }
    unreachable!("a sequence in a {dim}-dimensional space is dependent after {dim} steps")
}

/// Minimal polynomial of a square matrix.
pub fn min_poly(m: &Matrix) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "min_poly needs a square matrix");
    let flatten = |a: &Matrix| {
        SVec::from_terms(
            (0..n).flat_map(|j| a.col(j).iter().map(move |(i, c)| (j * n + i, c.clone()))),
        )
    };
    let unflatten = |v: &SVec| {
        let mut cols = vec![Vec::new(); n];
        for (k, c) in v.iter() {
            cols[k / n].push((k % n, c.clone()));
        }
        Matrix::from_columns(n, cols.into_iter().map(SVec::from_sorted).collect())
    };
    min_poly_by(n * n, flatten(&Matrix::identity(n)), |v| flatten(&m.compose(&unflatten(v))))
}
