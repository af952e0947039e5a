//! Dense univariate polynomials, coefficients stored low degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::{self, MAX_CHARPOLY_ORDER};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(rational::one())
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn x() -> Self {
        Self::monomial(rational::one(), 1)
    }

    /// `x - r`.
    pub fn linear_root(r: Rational) -> Self {
        Self::from_coeffs(vec![-r, rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &RationalPoly) -> (RationalPoly, RationalPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, d: &RationalPoly) -> Result<RationalPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::HypothesisViolated("polynomial division left a remainder".into()))
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RationalPoly) -> RationalPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: pairs `(factor, multiplicity)` with
    /// monic, pairwise coprime, square-free factors of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(RationalPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            b = nb;
            d = &nc - &b.derivative();
            i += 1;
        }
        out
    }

    /// Integer coefficients with the same roots.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect()
    }

    /// All roots of a square-free polynomial, provided they are all real:
    /// sign changes of the exact values on a dyadic grid are counted until
    /// they match the degree, then each bracket is bisected exactly.
    fn isolate_real_roots(&self) -> Option<Vec<f64>> {
        let d = self.degree()?;
        if d == 0 {
            return Some(Vec::new());
        }
        let c = self.integer_coeffs();
        // sign of q^d f(p / q) for q > 0
        let sign = |p: &BigInt, q: &BigInt| {
            let mut acc = c[d].clone();
            let mut qk = BigInt::one();
            for i in (0..d).rev() {
                qk *= q;
                acc = acc * p + &c[i] * &qk;
            }
            acc.sign()
        };
        let bound = BigInt::from((self.to_real().fujiwara_bound() * 1.01).ceil() as i64 + 1);
        let mut samples: u64 = 64 * d as u64;
        while samples <= 1 << 16 {
            let q = BigInt::from(samples);
            let step = 2 * &bound;
            let grid: Vec<BigInt> = (0..=samples).map(|j| -&bound * &q + &step * BigInt::from(j)).collect();
            let signs: Vec<Sign> = grid.iter().map(|p| sign(p, &q)).collect();
            let mut brackets = Vec::new();
            for j in 0..samples as usize {
                if signs[j] == Sign::NoSign {
                    brackets.push((grid[j].clone(), grid[j].clone(), signs[j]));
                } else if signs[j + 1] != Sign::NoSign && signs[j] != signs[j + 1] {
                    brackets.push((grid[j].clone(), grid[j + 1].clone(), signs[j]));
                }
            }
            if brackets.len() == d {
                let roots = brackets
                    .into_iter()
                    .map(|(mut a, mut b, sa)| {
                        let mut q = q.clone();
                        if sa != Sign::NoSign {
                            for _ in 0..60 {
                                a *= 2;
                                b *= 2;
                                q *= 2;
                                let mid: BigInt = (&a + &b) / 2;
                                match sign(&mid, &q) {
                                    Sign::NoSign => {
                                        a = mid.clone();
                                        b = mid;
                                        break;
                                    }
                                    s if s == sa => a = mid,
                                    _ => b = mid,
                                }
                            }
                        }
                        rational::to_f64(&Rational::new(a + b, 2 * q))
                    })
                    .collect();
                return Some(roots);
            }
            samples *= 2;
        }
        None
    }

    pub fn to_real(&self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(rational::to_f64).collect())
    }

    /// Real roots with multiplicity, via square-free factors.
    ///
    /// Each factor is isolated with exact signs first, which also certifies
    /// that all of its roots are real; the floating-point companion route
    /// is the fallback.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        for (factor, mult) in self.squarefree_decomposition() {
            let roots = match factor.isolate_real_roots() {
                Some(r) => r,
                None => factor.to_real().real_roots()?,
            };
            for r in roots {
                out.extend(std::iter::repeat_n(r, mult));
            }
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::format_rational).collect()
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                let s = rational::format_rational(&abs);
                if abs.is_integer() || k == 0 {
                    write!(f, "{s}")?;
                } else {
                    write!(f, "({s})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! rational_poly_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for &RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: &RationalPoly) -> RationalPoly {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                RationalPoly::from_coeffs(
                    (0..n).map(|k| self.coeff(k) $op rhs.coeff(k)).collect(),
                )
            }
        }
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                &self $op &rhs
            }
        }
    };
}

rational_poly_binop!(Add, add, +);
rational_poly_binop!(Sub, sub, -);

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Determinant of a square matrix over `Q[x]` by fraction-free (Bareiss)
/// elimination; every division is exact.
pub fn poly_determinant(mut m: Vec<Vec<RationalPoly>>) -> Result<RationalPoly> {
    let n = m.len();
    limits::check("polynomial determinant order", n, MAX_CHARPOLY_ORDER)?;
    if n == 0 {
        return Ok(RationalPoly::one());
    }
    let mut sign = false;
    let mut prev = RationalPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(RationalPoly::zero());
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { -&det } else { det })
}

/// Real-coefficient polynomial, low degree first.
#[derive(Clone, Debug, PartialEq, Default, Serialize)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

/// Relative residual accepted for a polished root.
pub const ROOT_RESIDUAL: f64 = 1e-9;
/// Imaginary parts below this (relative) are treated as round-off.
const IMAG_TOL: f64 = 1e-6;
/// Companion eigenvalues closer than this (relative) are read as one
/// multiple root.
const CLUSTER_TOL: f64 = 1e-5;

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    /// `a + b x + c x^2`.
    pub fn quadratic(a: f64, b: f64, c: f64) -> Self {
        Self::new(vec![a, b, c])
    }

    pub fn linear(a: f64, b: f64) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `sum |c_k| max(1, |x|)^k`, the scale against which a residual at `x`
    /// is judged.
    pub fn abs_eval(&self, x: f64) -> f64 {
        let t = x.abs().max(1.0);
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c.abs())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, o: &RealPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&0.0) + o.coeffs.get(k).unwrap_or(&0.0))
                .collect(),
        )
    }

    pub fn mul(&self, o: &RealPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut out = vec![0.0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Fujiwara bound on the moduli of the roots.
    pub fn fujiwara_bound(&self) -> f64 {
        let Some(d) = self.degree().filter(|&d| d > 0) else {
            return 0.0;
        };
        let lead = self.coeffs[d];
        2.0 * (1..=d)
            .map(|k| {
                let a = (self.coeffs[d - k] / lead).abs();
                let a = if k == d { a / 2.0 } else { a };
                a.powf(1.0 / k as f64)
            })
            .fold(0.0, f64::max)
    }

    /// Synthetic division by `x - r`: quotient and remainder `p(r)`.
    pub fn deflate(&self, r: f64) -> (RealPoly, f64) {
        let Some(d) = self.degree() else {
            return (Self::default(), 0.0);
        };
        if d == 0 {
            return (Self::default(), self.coeffs[0]);
        }
        let mut q = vec![0.0; d];
        let mut acc = 0.0;
        for k in (0..=d).rev() {
            acc = acc * r + self.coeffs[k];
            if k > 0 {
                q[k - 1] = acc;
            }
        }
        (Self::new(q), acc)
    }

    /// Complex roots as `(re, im)` pairs from the companion matrix.
    pub fn complex_roots(&self) -> Vec<(f64, f64)> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[d];
        let mut c = DMatrix::<f64>::zeros(d, d);
        for i in 1..d {
            c[(i, i - 1)] = 1.0;
        }
        for i in 0..d {
            c[(i, d - 1)] = -self.coeffs[i] / lead;
        }
        c.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
    }

    /// All roots, which must be real, in ascending order with multiplicity.
    ///
    /// Companion eigenvalues that cluster are merged at their mean and
    /// refined as a simple root of the matching derivative; isolated roots
    /// get Newton steps on the polynomial itself. Each result must satisfy
    /// `|p(r)| <= ROOT_RESIDUAL * sum |c_k| max(1, |r|)^k`.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        let mut raw = self.complex_roots();
        for &(re, im) in &raw {
            if im.abs() > IMAG_TOL * (1.0 + re.abs()) {
                return Err(Error::HypothesisViolated(format!(
                    "polynomial has a non-real root {re}{im:+}i"
                )));
            }
        }
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut clusters: Vec<Vec<f64>> = Vec::new();
        for (re, _) in raw {
            match clusters.last_mut() {
                Some(c) if (re - c[c.len() - 1]).abs() <= CLUSTER_TOL * (1.0 + re.abs()) => c.push(re),
                _ => clusters.push(vec![re]),
            }
        }
        let mut out = Vec::new();
        for c in clusters {
            let k = c.len();
            let mean = c.iter().sum::<f64>() / k as f64;
            let mut target = self.clone();
            for _ in 1..k {
                target = target.derivative();
            }
            let r = target.newton(mean);
            let r = if self.eval(r).abs() <= self.eval(mean).abs() { r } else { mean };
            if self.eval(r).abs() > ROOT_RESIDUAL * self.abs_eval(r).max(f64::MIN_POSITIVE) {
                return Err(Error::HypothesisViolated(format!(
                    "root {r} has residual {:e}",
                    self.eval(r).abs()
                )));
            }
            out.extend(std::iter::repeat_n(r, k));
        }
        Ok(out)
    }

    fn newton(&self, x0: f64) -> f64 {
        let d = self.derivative();
        let mut x = x0;
        for _ in 0..4 {
            let fx = self.eval(x);
            let dx = d.eval(x);
            if fx == 0.0 || dx == 0.0 {
                break;
            }
            let next = x - fx / dx;
            if !next.is_finite() || self.eval(next).abs() > fx.abs() {
                break;
            }
            x = next;
        }
        x
    }
}
