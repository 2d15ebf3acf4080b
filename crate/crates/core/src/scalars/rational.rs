//! Exact rationals with an inline fast path.
//!
//! Almost every structure constant met in practice is a small integer or a
//! fraction with a tiny denominator, so values are kept as a reduced
//! `i64` pair until an operation overflows, at which point they move to
//! `BigRational` form. The representation is canonical: a value that fits
//! in the small form is always stored small, so derived equality and
//! hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    /// Numerator and positive denominator, coprime.
    Small(i64, i64),
    /// Canonical big form; only used when the value does not fit `Small`.
    Big(BigInt, BigInt),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q {
    pub const ZERO: Q = Q::Small(0, 1);
    pub const ONE: Q = Q::Small(1, 1);

    pub fn from_int(n: i64) -> Q {
        Q::Small(n, 1)
    }

    /// Builds `num/den`, reducing to canonical form. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Q {
        let g = gcd_i128(num, den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Q::ZERO;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Q::Small(n, d),
            _ => Q::Big(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Q {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() { (num, den) } else { (num / &g, den / &g) };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Q::canon_big(n, d)
    }

    fn canon_big(n: BigInt, d: BigInt) -> Q {
        if n.is_zero() {
            return Q::ZERO;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) => Q::Small(a, b),
            _ => Q::Big(n, d),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(n, _) => BigInt::from(*n),
            Q::Big(n, _) => n.clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(_, d) => BigInt::from(*d),
            Q::Big(_, d) => d.clone(),
        }
    }

    fn parts(&self) -> (BigInt, BigInt) {
        (self.numer(), self.denom())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Q::Small(_, 1)) || matches!(self, Q::Big(_, d) if d.is_one())
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(n, _) => n.signum() as i32,
            Q::Big(n, _) => {
                if n.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn recip(&self) -> Result<Q, Error> {
        match self {
            Q::Small(0, _) => Err(Error::DivisionByZero),
            Q::Small(n, d) => Ok(Q::from_i128(*d as i128, *n as i128)),
            Q::Big(n, d) => Ok(Q::from_big(d.clone(), n.clone())),
        }
    }

    pub fn abs(&self) -> Q {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Q::Small(n, d) => *n as f64 / *d as f64,
            Q::Big(n, d) => {
                // scale down to keep the quotient representable
                let nb = n.bits() as i64;
                let db = d.bits() as i64;
                let shift = (nb.max(db) - 60).max(0);
                let nn = (n >> shift as usize).to_f64().unwrap_or(0.0);
                let dd = (d >> shift as usize).to_f64().unwrap_or(1.0);
                if dd == 0.0 {
                    // denominator dominated away; value is huge
                    let s = nb - db;
                    return nn.signum() * 2f64.powi(s as i32);
                }
                nn / dd
            }
        }
    }

    /// Best rational approximation of `self` with denominator at most `max_den`
    /// (continued-fraction convergents and the best semiconvergent).
    pub fn best_approximation(&self, max_den: &BigInt) -> Q {
        let (n, d) = self.parts();
        let (mut p0, mut q0, mut p1, mut q1) =
            (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
        let (mut num, mut den) = (n.clone(), d.clone());
        loop {
            let (a, r) = num.div_mod_floor(&den);
            let q2 = &a * &q1 + &q0;
            if &q2 > max_den {
                // semiconvergent candidate
                let k = (max_den - &q0) / &q1;
                let ps = &k * &p1 + &p0;
                let qs = &k * &q1 + &q0;
                let c1 = Q::from_big(p1.clone(), q1.clone());
                if qs.is_zero() {
                    return c1;
                }
                let c2 = Q::from_big(ps, qs);
                let e1 = (&c1 - self).abs();
                let e2 = (&c2 - self).abs();
                return if e2 < e1 { c2 } else { c1 };
            }
            let p2 = &a * &p1 + &p0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            if r.is_zero() {
                return Q::from_big(p1, q1);
            }
            num = den;
            den = r;
        }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::ZERO
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::Small(n, 1)
    }
}

impl Add<&Q> for &Q {
    type Output = Q;
    fn add(self, rhs: &Q) -> Q {
        match (self, rhs) {
            (Q::Small(0, _), _) => rhs.clone(),
            (_, Q::Small(0, _)) => self.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Q::from_i128(a + c, b)
                } else {
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Q::from_big(a * &d + c * &b, b * d)
            }
        }
    }
}

impl Sub<&Q> for &Q {
    type Output = Q;
    fn sub(self, rhs: &Q) -> Q {
        self + &(-rhs)
    }
}

impl Mul<&Q> for &Q {
    type Output = Q;
    fn mul(self, rhs: &Q) -> Q {
        match (self, rhs) {
            (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::ZERO,
            (Q::Small(1, 1), _) => rhs.clone(),
            (_, Q::Small(1, 1)) => self.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Q::from_big(a * c, b * d)
            }
        }
    }
}

impl Div<&Q> for &Q {
    type Output = Q;
    fn div(self, rhs: &Q) -> Q {
        self * &rhs.recip().expect("division by zero rational")
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::Small(n, d) => match n.checked_neg() {
                Some(m) => Q::Small(m, *d),
                None => Q::from_big(-BigInt::from(*n), BigInt::from(*d)),
            },
            Q::Big(n, d) => Q::canon_big(-n.clone(), d.clone()),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Q> for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Q> for Q {
            type Output = Q;
            fn $m(self, rhs: &Q) -> Q {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => {
                let (a, b) = self.parts();
                let (c, d) = other.parts();
                (a * d).cmp(&(c * b))
            }
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(n, d) if d.is_one() => write!(f, "{n}"),
            Q::Big(n, d) => write!(f, "{n}/{d}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = Error;
    fn from_str(s: &str) -> Result<Q, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Q::from_big(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Q::canon_big(n, BigInt::one()))
            }
        }
    }
}
