//! Vectors in tensor products `V_0 ⊗ … ⊗ V_{k-1}`, indexed in mixed radix
//! with leg 0 most significant.

use itertools::Itertools;

use super::matrix::Matrix;
use super::svec::SVec;
use crate::scalars::Scalar;

pub fn decode(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (k, d) in dims.iter().enumerate().rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

pub fn encode(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (x, d)| acc * d + x)
}

pub fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Applies `ops = [(leg, matrix), …]` simultaneously, identity on the other
/// legs. Leg dimensions change to the row counts of the matrices.
pub fn apply_legs(v: &SVec, dims: &[usize], ops: &[(usize, &Matrix)]) -> SVec {
    if ops.is_empty() {
        return v.clone();
    }
    let mut out_dims = dims.to_vec();
    for (leg, m) in ops {
        debug_assert_eq!(m.cols(), dims[*leg]);
        out_dims[*leg] = m.rows();
    }
    let mut terms = Vec::new();
    for (idx, c) in v.iter() {
        let mut digits = decode(*idx, dims);
        let cols: Vec<&SVec> = ops.iter().map(|(leg, m)| m.col(digits[*leg])).collect();
        for combo in cols.iter().map(|col| col.entries().iter()).multi_cartesian_product() {
            let mut coef = c.clone();
            for ((leg, _), (i, a)) in ops.iter().zip(&combo) {
                digits[*leg] = *i;
                coef = &coef * a;
            }
            terms.push((encode(&digits, &out_dims), coef));
        }
    }
    SVec::from_terms(terms)
}

/// Acts by a sum of elementary tensors: `x ∈ A^{⊗k}` (basis of `A` of
/// size `n`) acts with its `t`-th factor on leg `legs[t].0` through the
/// per-basis-element matrices `legs[t].1`.
pub fn apply_element(v: &SVec, dims: &[usize], x: &SVec, n: usize, legs: &[(usize, &[Matrix])]) -> SVec {
    let xdims = vec![n; legs.len()];
    let mut acc = Vec::new();
    for (k, c) in x.iter() {
        let digits = decode(*k, &xdims);
        let ops: Vec<(usize, &Matrix)> =
            legs.iter().zip(&digits).map(|((leg, mats), d)| (*leg, &mats[*d])).collect();
        let w = apply_legs(v, dims, &ops);
        acc.extend(w.into_entries().into_iter().map(|(i, a)| (i, a * c)));
    }
    SVec::from_terms(acc)
}

/// Output leg `k` is input leg `perm[k]`.
pub fn permute(v: &SVec, dims: &[usize], perm: &[usize]) -> SVec {
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    SVec::from_terms(v.iter().map(|(idx, c)| {
        let d = decode(*idx, dims);
        let out: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
        (encode(&out, &out_dims), c.clone())
    }))
}

/// The matrix of a leg permutation on `⊗ dims`.
pub fn permutation_matrix(dims: &[usize], perm: &[usize]) -> Matrix {
    let n = total(dims);
    Matrix::from_fn(n, n, |j| permute(&SVec::unit(j), dims, perm))
}

/// `Σ c_k e_k` as a matrix with one column per tensor factor pairing:
/// reshapes `v ∈ U ⊗ V` into the linear map `V* → U`, i.e. a `dim U × dim V`
/// matrix.
pub fn reshape(v: &SVec, rows: usize, cols: usize) -> Matrix {
    let mut columns = vec![Vec::new(); cols];
    for (idx, c) in v.iter() {
        columns[idx % cols].push((idx / cols, c.clone()));
    }
    Matrix::from_columns(rows, columns.into_iter().map(SVec::from_sorted).collect())
}

/// Inverse of [`reshape`].
pub fn flatten(m: &Matrix) -> SVec {
    let cols = m.cols();
    SVec::from_terms(
        (0..cols).flat_map(|j| m.col(j).iter().map(move |(i, c)| (i * cols + j, c.clone()))),
    )
}

pub fn scalar_vec(c: Scalar) -> SVec {
    SVec::single(0, c)
}
