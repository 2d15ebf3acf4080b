use std::fmt;

use crate::scalars::Scalar;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SVec(Vec<(usize, Scalar)>);

impl SVec {
    pub fn zero() -> SVec {
        SVec(Vec::new())
    }

    pub fn unit(i: usize) -> SVec {
        SVec(vec![(i, Scalar::one())])
    }

    pub fn single(i: usize, c: Scalar) -> SVec {
        if c.is_zero() {
            SVec::zero()
        } else {
            SVec(vec![(i, c)])
        }
    }

    /// Collects arbitrary `(index, coefficient)` terms, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> SVec {
        let mut v: Vec<(usize, Scalar)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if v.len() <= 1 {
            return SVec(v);
        }
        v.sort_unstable_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SVec(out)
    }

    /// Trusts the caller that `entries` is sorted and zero-free.
    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> SVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SVec(entries)
    }

    pub fn from_dense(v: &[Scalar]) -> SVec {
        SVec(v.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.0.iter()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.0.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.0.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        SVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn neg(&self) -> SVec {
        SVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    /// `self + c·other` by a sorted merge.
    pub fn axpy(&self, c: &Scalar, other: &SVec) -> SVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SVec(out)
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.axpy(&Scalar::from_int(-1), other)
    }

    pub fn dot(&self, other: &SVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc = &acc + &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Relabels indices through `f` (need not preserve order).
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SVec {
        SVec::from_terms(self.0.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SVec {
        SVec(self.0.iter().map(|(i, c)| (i + offset, c.clone())).collect())
    }

    /// Keeps entries with index in `lo..hi`, re-based to start at zero.
    pub fn slice(&self, lo: usize, hi: usize) -> SVec {
        SVec(
            self.0
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        )
    }

    /// Concatenates `self` (length `len`) with `other`.
    pub fn concat(&self, len: usize, other: &SVec) -> SVec {
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|(i, c)| (i + len, c.clone())));
        SVec(v)
    }

    /// Kronecker product where `other` lives in a space of dimension `m`.
    pub fn kron(&self, other: &SVec, m: usize) -> SVec {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for (i, x) in &self.0 {
            for (j, y) in &other.0 {
                out.push((i * m + j, x * y));
            }
        }
        SVec(out)
    }
}

impl fmt::Debug for SVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        write!(f, "]")
    }
}

impl FromIterator<(usize, Scalar)> for SVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SVec::from_terms(iter)
    }
}
