//! Primitive idempotents of a split semisimple commutative algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::Algebra;
use super::poly::{degree, is_squarefree, trim};
use super::subspace::Subspace;
use super::svec::SVec;
use crate::error::{Error, Result};
use crate::scalars::{roots_in_field, RootOptions, Scalar};

#[derive(Clone, Debug)]
pub struct SplitOptions {
    pub roots: RootOptions,
    pub seed: u64,
    /// Random separating elements tried after the basis is exhausted.
    pub random_attempts: usize,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions { roots: RootOptions::default(), seed: 0, random_attempts: 64 }
    }
}

fn block_dim(z: &Algebra, e: &SVec) -> usize {
    Subspace::span(z.dim(), (0..z.dim()).map(|j| z.mul(e, &SVec::unit(j)))).dim()
}

/// Splits `e` using `x`; returns `None` when `x e` is a scalar multiple of `e`.
fn refine(z: &Algebra, e: &SVec, x: &SVec, opts: &SplitOptions) -> Result<Option<Vec<SVec>>> {
    let y = z.mul(x, e);
    let p = trim(z.min_poly_in(&y, e));
    let deg = degree(&p).unwrap_or(0);
    if deg <= 1 {
        return Ok(None);
    }
    if !is_squarefree(&p) {
        return Err(Error::NotSemisimple("a central element has a repeated eigenvalue".into()));
    }
    let roots = roots_in_field(&p, z.field(), &opts.roots)?;
    if roots.len() < deg {
        return Err(Error::NotSplit(format!(
            "minimal polynomial of degree {deg} has only {} roots in {}",
            roots.len(),
            z.field().spec()
        )));
    }
    let parts = roots
        .iter()
        .enumerate()
        .map(|(j, lj)| {
            let mut acc = e.clone();
            for (l, ll) in roots.iter().enumerate() {
                if l == j {
                    continue;
                }
                let denom = (lj - ll).inv()?;
                let factor = y.sub(&e.scale(ll)).scale(&denom);
                acc = z.mul(&acc, &factor);
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(parts))
}

/// Complete set of primitive orthogonal idempotents of a commutative
/// semisimple algebra whose simple quotients are all the ground field.
pub fn split_commutative(z: &Algebra, opts: &SplitOptions) -> Result<Vec<SVec>> {
    if z.dim() == 0 {
        return Ok(Vec::new());
    }
    let mut blocks: Vec<(SVec, usize)> = vec![(z.unit().clone(), z.dim())];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut candidates = (0..z.dim()).map(SVec::unit).collect::<Vec<_>>().into_iter();
    let mut random_left = opts.random_attempts;
    while blocks.iter().any(|(_, d)| *d > 1) {
        let x = match candidates.next() {
            Some(x) => x,
            None if random_left > 0 => {
                random_left -= 1;
                SVec::from_terms((0..z.dim()).map(|i| (i, Scalar::from_int(rng.gen_range(-9..=9)))))
            }
            None => {
                return Err(Error::NotSplit("no element separates the remaining blocks".into()));
            }
        };
        let mut next = Vec::with_capacity(blocks.len());
        for (e, d) in blocks {
            if d == 1 {
                next.push((e, d));
                continue;
            }
            match refine(z, &e, &x, opts)? {
                None => next.push((e, d)),
                Some(parts) => {
                    for f in parts {
                        let d = block_dim(z, &f);
                        next.push((f, d));
                    }
                }
            }
        }
        blocks = next;
    }
    Ok(blocks.into_iter().map(|(e, _)| e).collect())
}
