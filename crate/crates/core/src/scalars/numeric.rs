//! Fixed-point complex arithmetic, polynomial root isolation and exact
//! reconstruction of field elements from numerical approximations.
//!
//! Every number here is an approximation; nothing produced by this module is
//! trusted until the caller substitutes it back exactly.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Scalar};
use super::rational::Q;
use crate::error::{Error, Result};

/// A complex number `(re + i·im) / 2^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

/// Working precision shared by a family of [`Cx`] values.
#[derive(Clone, Copy, Debug)]
pub struct Fixed {
    pub prec: u32,
}

impl Fixed {
    pub fn new(prec: u32) -> Fixed {
        Fixed { prec: prec.max(64) }
    }

    pub fn zero(&self) -> Cx {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one(&self) -> Cx {
        Cx { re: BigInt::one() << self.prec, im: BigInt::zero() }
    }

    pub fn from_q(&self, q: &Q) -> Cx {
        Cx { re: self.real_from_q(q), im: BigInt::zero() }
    }

    fn real_from_q(&self, q: &Q) -> BigInt {
        let (n, d) = (q.numer(), q.denom());
        round_div(&(n << self.prec), &d)
    }

    pub fn from_c64(&self, z: Complex64) -> Cx {
        Cx { re: self.real_from_f64(z.re), im: self.real_from_f64(z.im) }
    }

    fn real_from_f64(&self, x: f64) -> BigInt {
        if x == 0.0 || !x.is_finite() {
            return BigInt::zero();
        }
        let (mant, exp) = decompose_f64(x);
        let shift = exp + self.prec as i32;
        if shift >= 0 {
            BigInt::from(mant) << shift as u32
        } else {
            BigInt::from(mant) >> (-shift) as u32
        }
    }

    pub fn real_to_f64(&self, v: &BigInt) -> f64 {
        let bits = v.bits() as i64;
        let extra = (bits - 60).max(0);
        let top = (v >> extra as u32).to_f64().unwrap_or(0.0);
        top * 2f64.powi(extra as i32 - self.prec as i32)
    }

    pub fn to_c64(&self, z: &Cx) -> Complex64 {
        Complex64::new(self.real_to_f64(&z.re), self.real_to_f64(&z.im))
    }

    pub fn abs_f64(&self, z: &Cx) -> f64 {
        self.to_c64(z).norm()
    }

    pub fn add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx { re: &a.re + &b.re, im: &a.im + &b.im }
    }

    pub fn sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx { re: &a.re - &b.re, im: &a.im - &b.im }
    }

    pub fn mul(&self, a: &Cx, b: &Cx) -> Cx {
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        Cx { re: re >> self.prec, im: im >> self.prec }
    }

    pub fn div(&self, a: &Cx, b: &Cx) -> Option<Cx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = (&a.re * &b.re + &a.im * &b.im) << self.prec;
        let im = (&a.im * &b.re - &a.re * &b.im) << self.prec;
        Some(Cx { re: round_div(&re, &den), im: round_div(&im, &den) })
    }

    /// The exact rational value of a fixed-point real.
    pub fn real_as_q(&self, v: &BigInt) -> Q {
        Q::from_big(v.clone(), BigInt::one() << self.prec)
    }
}

fn decompose_f64(x: f64) -> (i64, i32) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let mant = if exp == 0 {
        (bits & 0xfffffffffffff) << 1
    } else {
        (bits & 0xfffffffffffff) | 0x10000000000000
    };
    (sign * mant as i64, exp - 1075)
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (d, n) = if d.is_negative() { (-d, -n) } else { (d.clone(), n.clone()) };
    let twice: BigInt = &n * 2 + &d;
    twice.div_floor(&(&d * 2))
}

/// A complex embedding `ζ_n ↦ exp(2πi·j/n)` evaluated at fixed precision.
pub struct Embedding {
    pub fx: Fixed,
    /// Powers `1, ζ^j, ζ^{2j}, …` up to the field degree.
    powers: Vec<Cx>,
}

impl Embedding {
    pub fn new(field: &Field, j: u32, prec: u32) -> Embedding {
        let fx = Fixed::new(prec);
        let n = field.order().max(1);
        let zeta = root_of_unity(&fx, n, j);
        let mut powers = vec![fx.one()];
        for _ in 1..field.degree().max(1) {
            let next = fx.mul(powers.last().unwrap(), &zeta);
            powers.push(next);
        }
        Embedding { fx, powers }
    }

    pub fn eval(&self, x: &Scalar) -> Cx {
        let coords = x.coords(self.powers.len());
        let mut acc = self.fx.zero();
        for (c, p) in coords.iter().zip(&self.powers) {
            if c.is_zero() {
                continue;
            }
            let r = self.fx.real_from_q(c);
            acc.re += (&r * &p.re) >> self.fx.prec;
            acc.im += (&r * &p.im) >> self.fx.prec;
        }
        acc
    }

    pub fn power(&self, k: usize) -> &Cx {
        &self.powers[k]
    }
}

/// `exp(2πi·j/n)` refined by Newton iteration on `Φ_n`.
fn root_of_unity(fx: &Fixed, n: u32, j: u32) -> Cx {
    if n <= 2 {
        let v = if n == 2 && j % 2 == 1 { -1.0 } else { 1.0 };
        return fx.from_c64(Complex64::new(v, 0.0));
    }
    let angle = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
    let mut z = fx.from_c64(Complex64::new(angle.cos(), angle.sin()));
    let phi: Vec<Cx> = super::field::cyclotomic_polynomial(n)
        .iter()
        .map(|&c| fx.from_q(&Q::from_int(c)))
        .collect();
    newton_polish(fx, &phi, &mut z);
    z
}

fn horner(fx: &Fixed, coeffs: &[Cx], z: &Cx) -> (Cx, Cx) {
    let mut p = fx.zero();
    let mut dp = fx.zero();
    for c in coeffs.iter().rev() {
        dp = fx.add(&fx.mul(&dp, z), &p);
        p = fx.add(&fx.mul(&p, z), c);
    }
    (p, dp)
}

fn newton_polish(fx: &Fixed, coeffs: &[Cx], z: &mut Cx) {
    let tiny = BigInt::one() << 4;
    for _ in 0..(fx.prec.ilog2() + 8) {
        let (p, dp) = horner(fx, coeffs, z);
        let Some(step) = fx.div(&p, &dp) else { return };
        *z = fx.sub(z, &step);
        if step.re.abs() <= tiny && step.im.abs() <= tiny {
            return;
        }
    }
}

/// A root approximation with an inclusion radius.
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: Cx,
    pub radius: f64,
}

/// Isolates all complex roots of a squarefree polynomial with fixed-point
/// coefficients (lowest degree first): Aberth iteration in `f64`, Newton
/// polishing at full precision, then inclusion radii
/// `r_i = m·|p(z_i)| / (|lc|·Π_{j≠i}|z_i − z_j|)`.
pub fn isolate_roots(fx: &Fixed, coeffs: &[Cx]) -> Vec<Ball> {
    let m = coeffs.len() - 1;
    if m == 0 {
        return Vec::new();
    }
    let lc = &coeffs[m];
    let approx: Vec<Complex64> = coeffs.iter().map(|c| fx.to_c64(c)).collect();
    let mut roots = aberth(&approx);
    let mut centers: Vec<Cx> = roots.iter().map(|z| fx.from_c64(*z)).collect();
    for z in centers.iter_mut() {
        newton_polish(fx, coeffs, z);
    }
    roots = centers.iter().map(|z| fx.to_c64(z)).collect();
    let lc_abs = fx.abs_f64(lc);
    centers
        .into_iter()
        .enumerate()
        .map(|(i, center)| {
            let (p, _) = horner(fx, coeffs, &center);
            let mut denom = lc_abs;
            for (j, zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= (roots[i] - zj).norm();
                }
            }
            let radius = if denom > 0.0 {
                m as f64 * fx.abs_f64(&p) / denom
            } else {
                f64::INFINITY
            };
            Ball { center, radius }
        })
        .collect()
}

fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let m = coeffs.len() - 1;
    let lc = coeffs[m];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    let bound = 1.0 + monic[..m].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / m as f64 + 0.4;
            Complex64::from_polar(bound * 0.5 + 0.1, t)
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..m {
            let (p, dp) = horner_c64(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..m).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn horner_c64(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn tolerance(fx: &Fixed, ball: &Ball) -> f64 {
    ball.radius + 2f64.powi(-(fx.prec as i32) + 16)
}

fn round_q(q: &Q, height_bound: &BigInt) -> Q {
    q.best_approximation(height_bound)
}

/// Reconstructs a field element from a ball in the standard embedding
/// `ζ ↦ exp(2πi/n)`. Works for fields of degree at most two, where one
/// embedding determines all coordinates.
pub fn reconstruct_exact(
    ball: &Ball,
    field: &Field,
    height_bound: u64,
    precision_bits: u32,
) -> Result<Scalar> {
    let emb = Embedding::new(field, 1, precision_bits);
    let fx = emb.fx;
    let center = rescale(&ball.center, fx.prec, precision_bits);
    let ball = Ball { center, radius: ball.radius };
    let h = BigInt::from(height_bound.max(1));
    let candidate = match field.degree() {
        1 => {
            let q = round_q(&fx.real_as_q(&ball.center.re), &h);
            Scalar::from_q(q)
        }
        2 => {
            let z = emb.power(1);
            let b = fx.real_as_q(&ball.center.im) * fx.real_as_q(&z.im).recip()?;
            let b = round_q(&b, &h);
            let a = fx.real_as_q(&ball.center.re) - &b * &fx.real_as_q(&z.re);
            let a = round_q(&a, &h);
            field.from_coords(vec![a, b])?
        }
        d => {
            return Err(Error::ReconstructionFailed(format!(
                "degree {d} field needs conjugate embeddings"
            )))
        }
    };
    let dist = fx.abs_f64(&fx.sub(&emb.eval(&candidate), &ball.center));
    if dist <= tolerance(&fx, &ball) {
        Ok(candidate)
    } else {
        Err(Error::ReconstructionFailed(format!(
            "nearest candidate {candidate} lies {dist:e} from the ball center"
        )))
    }
}

fn rescale(z: &Cx, to: u32, from: u32) -> Cx {
    let from = from.max(64);
    if to >= from {
        Cx { re: &z.re << (to - from), im: &z.im << (to - from) }
    } else {
        Cx { re: &z.re >> (from - to), im: &z.im >> (from - to) }
    }
}

/// Options for numeric-assisted exact root finding.
#[derive(Clone, Copy, Debug)]
pub struct RootOptions {
    pub precision_bits: u32,
    pub height_bound: u64,
    /// Maximum number of conjugate-root combinations tried per root.
    pub combination_cap: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { precision_bits: 256, height_bound: 1_000_000, combination_cap: 20_000 }
    }
}

/// Evaluates a polynomial (lowest degree first) exactly.
pub fn eval_poly(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// All roots of `p` that lie in `field`, each verified by exact substitution.
/// `p` must be squarefree. Roots outside the field are simply absent.
pub fn roots_in_field(p: &[Scalar], field: &Field, opts: &RootOptions) -> Result<Vec<Scalar>> {
    let deg = p.len().saturating_sub(1);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let d = field.degree();
    let mut found: Vec<Scalar> = Vec::new();
    let push = |x: Scalar, found: &mut Vec<Scalar>| {
        if eval_poly(p, &x).is_zero() && !found.contains(&x) {
            found.push(x);
        }
    };
    if deg == 1 {
        let x = (-&p[0]).try_div(&p[1])?;
        push(x, &mut found);
        return Ok(found);
    }
    if d <= 2 {
        let emb = Embedding::new(field, 1, opts.precision_bits);
        let coeffs: Vec<Cx> = p.iter().map(|c| emb.eval(c)).collect();
        for ball in isolate_roots(&emb.fx, &coeffs) {
            if let Ok(x) = reconstruct_exact(&ball, field, opts.height_bound, emb.fx.prec) {
                push(x, &mut found);
            }
        }
        return Ok(found);
    }
    // One embedding per complex-conjugate pair of primitive roots of unity.
    let n = field.order();
    let units: Vec<u32> = (1..n).filter(|j| j.gcd(&n) == 1 && 2 * j < n).collect();
    let embs: Vec<Embedding> =
        units.iter().map(|&j| Embedding::new(field, j, opts.precision_bits)).collect();
    let fx = embs[0].fx;
    let balls: Vec<Vec<Ball>> = embs
        .iter()
        .map(|e| {
            let coeffs: Vec<Cx> = p.iter().map(|c| e.eval(c)).collect();
            isolate_roots(&fx, &coeffs)
        })
        .collect();
    let h = BigInt::from(opts.height_bound.max(1));
    for first in &balls[0] {
        let mut choice = vec![0usize; embs.len()];
        let mut tried = 0usize;
        'combos: loop {
            tried += 1;
            if tried > opts.combination_cap {
                break;
            }
            let picked: Vec<&Ball> = std::iter::once(first)
                .chain((1..embs.len()).map(|k| &balls[k][choice[k]]))
                .collect();
            if let Some(x) = solve_conjugates(&embs, &picked, field, &h) {
                let ok = embs.iter().zip(&picked).all(|(e, b)| {
                    fx.abs_f64(&fx.sub(&e.eval(&x), &b.center)) <= tolerance(&fx, b)
                });
                if ok && eval_poly(p, &x).is_zero() {
                    push(x, &mut found);
                    break 'combos;
                }
            }
            // advance the mixed-radix counter over embeddings 1..
            let mut k = 1;
            loop {
                if k >= embs.len() {
                    break 'combos;
                }
                choice[k] += 1;
                if choice[k] < balls[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }
    Ok(found)
}

/// Solves the real `d × d` system relating power-basis coordinates to the
/// chosen root in each embedding, rounding to bounded-height rationals.
fn solve_conjugates(embs: &[Embedding], picked: &[&Ball], field: &Field, h: &BigInt) -> Option<Scalar> {
    let d = field.degree();
    let fx = embs[0].fx;
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(d);
    for (e, b) in embs.iter().zip(picked) {
        let mut re_row: Vec<Q> = (0..d).map(|k| fx.real_as_q(&e.power(k).re)).collect();
        re_row.push(fx.real_as_q(&b.center.re));
        let mut im_row: Vec<Q> = (0..d).map(|k| fx.real_as_q(&e.power(k).im)).collect();
        im_row.push(fx.real_as_q(&b.center.im));
        rows.push(re_row);
        rows.push(im_row);
    }
    let sol = solve_dense(rows, d)?;
    let coords = sol.iter().map(|q| round_q(q, h)).collect();
    field.from_coords(coords).ok()
}

fn solve_dense(mut m: Vec<Vec<Q>>, d: usize) -> Option<Vec<Q>> {
    if m.len() != d {
        return None;
    }
    for c in 0..d {
        let p = (c..d).max_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))?;
        if m[p][c].is_zero() {
            return None;
        }
        m.swap(c, p);
        let inv = m[c][c].recip().ok()?;
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
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}
