//! Field elements over the rationals and cyclotomic extensions `Q(ζ_n)`.
//!
//! A cyclotomic element is a dense coordinate vector in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}` reduced modulo the cyclotomic polynomial `Φ_n`.
//! Elements whose only nonzero coordinate is the constant term are always
//! stored in the rational variant, which keeps rational data fast inside
//! extension fields and makes equality structural.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::rational::Q;
use crate::error::{Error, Result};

/// Which field a structure lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Cyclotomic { order } => euler_phi(*order as u64) as usize,
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Cyclotomic { order } => *order,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Cyclotomic { order: 0 } => {
                Err(Error::Parse("cyclotomic order must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Cyclotomic { order } => write!(f, "cyclotomic:{order}"),
        }
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div(&num, &den);
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn] / lead;
        quot[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= c * dc;
        }
    }
    quot
}

/// Arithmetic tables for `Q(ζ_n)` with `φ(n) ≥ 2`.
#[derive(Debug)]
pub struct Cyclotomic {
    order: u32,
    degree: usize,
    /// `reduce[k]` is `x^{degree+k}` modulo `Φ_n`, for `k < degree - 1`.
    reduce: Vec<Vec<Q>>,
}

impl Cyclotomic {
    pub fn new(order: u32) -> Cyclotomic {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut reduce = Vec::new();
        // x^degree = -(phi_0 + ... + phi_{d-1} x^{d-1})
        let mut cur: Vec<Q> = phi[..degree].iter().map(|&c| Q::from_int(-c)).collect();
        for _ in 0..degree.saturating_sub(1) {
            reduce.push(cur.clone());
            // multiply by x
            let top = cur[degree - 1].clone();
            let mut next = vec![Q::ZERO; degree];
            for i in 1..degree {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..degree {
                    next[i] = &next[i] + &(&top * &Q::from_int(-phi[i]));
                }
            }
            cur = next;
        }
        Cyclotomic { order, degree, reduce }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn mul_coeffs(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let d = self.degree;
        let mut prod = vec![Q::ZERO; 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(x * y);
            }
        }
        let (low, high) = prod.split_at(d);
        let mut out = low.to_vec();
        for (k, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in self.reduce[k].iter().enumerate() {
                if !r.is_zero() {
                    out[i] = &out[i] + &(c * r);
                }
            }
        }
        out
    }

    /// `x^k mod Φ_n` as coordinates.
    pub fn power(&self, k: usize) -> Vec<Q> {
        let d = self.degree;
        let mut acc = vec![Q::ZERO; d];
        acc[0] = Q::ONE;
        let mut x = vec![Q::ZERO; d];
        x[1] = Q::ONE;
        for _ in 0..k {
            acc = self.mul_coeffs(&acc, &x);
        }
        acc
    }

    fn inverse_coeffs(&self, a: &[Q]) -> Result<Vec<Q>> {
        // solve (mult-by-a) x = e_0 over Q
        let d = self.degree;
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let mut e = vec![Q::ZERO; d];
            e[j] = Q::ONE;
            cols.push(self.mul_coeffs(a, &e));
        }
        let mut m: Vec<Vec<Q>> = (0..d)
            .map(|i| {
                let mut row: Vec<Q> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Q::ONE } else { Q::ZERO });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let inv = m[c][c].recip()?;
            for x in m[c].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=d {
                        let t = &m[c][k] * &f;
                        m[r][k] = &m[r][k] - &t;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[d].clone()).collect())
    }
}

/// An exact scalar. See the module documentation for the canonical form.
#[derive(Clone)]
pub enum Scalar {
    Rat(Q),
    Cyc(Arc<Cyclotomic>, Box<[Q]>),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Q::ZERO)
    }

    pub fn one() -> Scalar {
        Scalar::Rat(Q::ONE)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(Q::from_int(n))
    }

    pub fn from_q(q: Q) -> Scalar {
        Scalar::Rat(q)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_one())
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Cyc(..) => None,
        }
    }

    fn from_coeffs(field: &Arc<Cyclotomic>, coeffs: Vec<Q>) -> Scalar {
        if coeffs[1..].iter().all(Q::is_zero) {
            Scalar::Rat(coeffs.into_iter().next().unwrap())
        } else {
            Scalar::Cyc(field.clone(), coeffs.into_boxed_slice())
        }
    }

    /// Coordinates in the power basis of a field of the given degree.
    pub fn coords(&self, degree: usize) -> Vec<Q> {
        match self {
            Scalar::Rat(q) => {
                let mut v = vec![Q::ZERO; degree.max(1)];
                v[0] = q.clone();
                v
            }
            Scalar::Cyc(_, c) => c.to_vec(),
        }
    }

    fn common_field<'a>(&'a self, other: &'a Scalar) -> Result<Option<&'a Arc<Cyclotomic>>> {
        match (self, other) {
            (Scalar::Cyc(f, _), Scalar::Cyc(g, _)) => {
                if f.order == g.order {
                    Ok(Some(f))
                } else {
                    Err(Error::FieldMismatch(format!(
                        "Q(zeta_{}) vs Q(zeta_{})",
                        f.order, g.order
                    )))
                }
            }
            (Scalar::Cyc(f, _), _) | (_, Scalar::Cyc(f, _)) => Ok(Some(f)),
            _ => Ok(None),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match self.common_field(other)? {
            None => Ok(Scalar::Rat(self.rat() + other.rat())),
            Some(f) => {
                let a = self.coords(f.degree);
                let b = other.coords(f.degree);
                let c = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                Ok(Scalar::from_coeffs(f, c))
            }
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (Scalar::Rat(a), Scalar::Cyc(f, c)) | (Scalar::Cyc(f, c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Ok(Scalar::zero());
                }
                Ok(Scalar::Cyc(f.clone(), c.iter().map(|x| x * a).collect()))
            }
            (Scalar::Cyc(f, a), Scalar::Cyc(_, b)) => {
                self.common_field(other)?;
                Ok(Scalar::from_coeffs(f, f.mul_coeffs(a, b)))
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(q) => Ok(Scalar::Rat(q.recip()?)),
            Scalar::Cyc(f, c) => Ok(Scalar::from_coeffs(f, f.inverse_coeffs(c)?)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    fn rat(&self) -> &Q {
        match self {
            Scalar::Rat(q) => q,
            Scalar::Cyc(..) => unreachable!(),
        }
    }

    pub fn field_order(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Cyc(f, _) => Some(f.order),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Cyc(f, a), Scalar::Cyc(g, b)) => f.order == g.order && a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rat(q) => q.hash(state),
            Scalar::Cyc(f, c) => {
                f.order.hash(state);
                c.hash(state);
            }
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => self.try_add(rhs).expect("scalars from different fields"),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self.try_sub(rhs).expect("scalars from different fields"),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalars from different fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Cyc(f, c) => Scalar::Cyc(f.clone(), c.iter().map(|x| -x).collect()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Q> for Scalar {
    fn from(q: Q) -> Scalar {
        Scalar::Rat(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Cyc(_, c) => {
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{x}")?,
                        1 => write!(f, "{x}*z")?,
                        _ => write!(f, "{x}*z^{k}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A concrete field: the spec plus shared arithmetic tables.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    cyc: Option<Arc<Cyclotomic>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        self.spec == other.spec
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        spec.validate()?;
        let cyc = match spec {
            FieldSpec::Cyclotomic { order } if spec.degree() >= 2 => {
                Some(Arc::new(Cyclotomic::new(order)))
            }
            _ => None,
        };
        Ok(Field { spec, cyc })
    }

    pub fn rationals() -> Field {
        Field { spec: FieldSpec::Rationals, cyc: None }
    }

    pub fn cyclotomic(order: u32) -> Field {
        Field::new(FieldSpec::Cyclotomic { order }).expect("positive order")
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    pub fn order(&self) -> u32 {
        self.spec.order()
    }

    /// The distinguished primitive root of unity `ζ_n` (`1` over the rationals).
    pub fn zeta(&self) -> Scalar {
        self.zeta_power(1)
    }

    pub fn zeta_power(&self, k: usize) -> Scalar {
        match &self.cyc {
            Some(c) => Scalar::from_coeffs(c, c.power(k)),
            None => {
                // order 1 or 2: ζ = ±1
                if self.order() == 2 && k % 2 == 1 {
                    Scalar::from_int(-1)
                } else {
                    Scalar::one()
                }
            }
        }
    }

    /// Builds an element from power-basis coordinates (length = degree).
    pub fn from_coords(&self, coords: Vec<Q>) -> Result<Scalar> {
        if coords.len() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(match &self.cyc {
            Some(c) => Scalar::from_coeffs(c, coords),
            None => Scalar::Rat(coords.into_iter().next().unwrap()),
        })
    }

    /// Whether `x` can live in this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(_) => true,
            Scalar::Cyc(f, _) => f.order == self.order() && self.cyc.is_some(),
        }
    }

    /// Parses `"p/q"` or `"c0 + c1*z + c2*z^2 ..."`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut acc = Scalar::zero();
        for (sign, term) in split_terms(s)? {
            let t = self.parse_term(term.trim())?;
            acc = if sign { acc.try_sub(&t)? } else { acc.try_add(&t)? };
        }
        Ok(acc)
    }

    fn parse_term(&self, t: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid scalar term `{t}`"));
        let (coef, power) = match t.find('z') {
            None => (t, 0usize),
            Some(pos) => {
                let (c, zpart) = t.split_at(pos);
                let c = c.trim().trim_end_matches('*').trim();
                let p = match zpart[1..].trim() {
                    "" => 1,
                    rest => rest
                        .strip_prefix('^')
                        .ok_or_else(bad)?
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| bad())?,
                };
                (c, p)
            }
        };
        let q: Q = match coef {
            "" | "+" => Q::ONE,
            "-" => Q::from_int(-1),
            c => c.parse()?,
        };
        if power > 0 && self.spec == FieldSpec::Rationals {
            return Err(Error::Parse(format!("`{t}` uses z over the rationals")));
        }
        Ok(self.zeta_power(power).try_mul(&Scalar::Rat(q))?)
    }
}

/// Splits on top-level `+`/`-` separators that follow a complete term.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if (c == '+' || c == '-') && i > start {
            let prev = s[start..i].trim_end();
            let separator = !prev.is_empty()
                && !prev.ends_with('*')
                && !prev.ends_with('/')
                && !prev.ends_with('^')
                && bytes[i - 1] == b' ';
            if separator {
                out.push((neg, &s[start..i]));
                neg = c == '-';
                start = i + 1;
            }
        }
        i += 1;
    }
    let last = &s[start..];
    if last.trim().is_empty() {
        return Err(Error::Parse(format!("dangling operator in `{s}`")));
    }
    out.push((neg, last));
    Ok(out)
}
