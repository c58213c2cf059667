//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! doubles with `|lo| <= ulp(hi)/2`, giving about 31 significant digits.
//!
//! Only what the reference evaluator needs is here: the four operations,
//! `exp`, `sin`/`cos` and a complex type on top.

use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

// requires |a| >= |b|
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };
    pub const PI: DoubleDouble = DoubleDouble { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };
    pub const FRAC_PI_2: DoubleDouble =
        DoubleDouble { hi: std::f64::consts::FRAC_PI_2, lo: 6.123233995736766e-17 };
    pub const LN_2: DoubleDouble = DoubleDouble { hi: std::f64::consts::LN_2, lo: 2.3190468138462996e-17 };
    pub const FRAC_2_SQRT_PI: DoubleDouble =
        DoubleDouble { hi: std::f64::consts::FRAC_2_SQRT_PI, lo: 1.533545961316588e-17 };
    pub const FRAC_1_SQRT_PI: DoubleDouble =
        DoubleDouble { hi: 0.5641895835477563, lo: 7.66772980658294e-18 };

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// Renormalises an arbitrary pair.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn mul_f64_exact(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleDouble { hi, lo }
    }

    /// Nearest double.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = self.lo.mul_add(b, e);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - DoubleDouble::mul_f64_exact(q1, b);
        let q2 = r.hi / b;
        let r = r - DoubleDouble::mul_f64_exact(q2, b);
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::from_f64(q3)
    }

    #[inline]
    pub fn sqr(self) -> Self {
        self * self
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        DoubleDouble { hi: self.hi * s, lo: self.lo * s }
    }

    /// `e^x`, by `x = k ln2 + r` and a Taylor series on `r / 2^10`.
    pub fn exp(self) -> Self {
        if self.hi > 709.8 {
            return DoubleDouble::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return DoubleDouble::ZERO;
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - DoubleDouble::LN_2.mul_f64(k);
        let r = r.ldexp(-10);

        // e^r - 1 for |r| < 4e-4
        let mut term = r;
        let mut sum = r;
        for n in 2..=14 {
            term = (term * r).div_f64(n as f64);
            sum += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        // (1 + s)^2 - 1 = s (2 + s), squared ten times
        for _ in 0..10 {
            sum = sum * (sum + DoubleDouble::from_f64(2.0));
        }
        let e = sum + DoubleDouble::ONE;
        // Split the power of two so subnormal results stay representable.
        let k = k as i32;
        if k < -1000 {
            e.ldexp(-1000).ldexp(k + 1000)
        } else if k > 1000 {
            e.ldexp(1000).ldexp(k - 1000)
        } else {
            e.ldexp(k)
        }
    }

    /// `(sin x, cos x)` with reduction modulo `pi/2`. Accurate for the
    /// moderate arguments (`|x|` up to a few thousand) used by the oracle.
    pub fn sin_cos(self) -> (Self, Self) {
        let q = (self.hi / std::f64::consts::FRAC_PI_2).round();
        let r = self - DoubleDouble::FRAC_PI_2.mul_f64(q);
        let r2 = r.sqr();

        let mut sin = r;
        let mut term = r;
        let mut n = 1.0;
        loop {
            term = -(term * r2).div_f64((n + 1.0) * (n + 2.0));
            sin += term;
            n += 2.0;
            if term.hi.abs() < 1e-35 * sin.hi.abs().max(1e-300) || n > 60.0 {
                break;
            }
        }
        let mut cos = DoubleDouble::ONE;
        let mut term = DoubleDouble::ONE;
        let mut n = 0.0;
        loop {
            term = -(term * r2).div_f64((n + 1.0) * (n + 2.0));
            cos += term;
            n += 2.0;
            if term.hi.abs() < 1e-35 || n > 60.0 {
                break;
            }
        }
        match (q as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::from_f64(q3)
    }
}

impl AddAssign for DoubleDouble {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ExtendedComplex {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ExtendedComplex {
    pub const ZERO: ExtendedComplex = ExtendedComplex { re: DoubleDouble::ZERO, im: DoubleDouble::ZERO };
    pub const ONE: ExtendedComplex = ExtendedComplex { re: DoubleDouble::ONE, im: DoubleDouble::ZERO };

    pub fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        ExtendedComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        ExtendedComplex { re: re.into(), im: im.into() }
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> Self {
        ExtendedComplex { re: self.re, im: -self.im }
    }

    /// Multiplication by `i`.
    pub fn mul_i(self) -> Self {
        ExtendedComplex { re: -self.im, im: self.re }
    }

    /// Square computed from the real parts so that `(x + iy)^2` with double
    /// `x, y` is exact.
    pub fn sqr(self) -> Self {
        let re = (self.re + self.im) * (self.re - self.im);
        let im = (self.re * self.im).mul_f64(2.0);
        ExtendedComplex { re, im }
    }

    pub fn scale(self, s: DoubleDouble) -> Self {
        ExtendedComplex { re: self.re * s, im: self.im * s }
    }

    pub fn div_f64(self, d: f64) -> Self {
        ExtendedComplex { re: self.re.div_f64(d), im: self.im.div_f64(d) }
    }

    /// L1 magnitude, enough for convergence tests.
    pub fn abs1(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }

    pub fn recip(self) -> Self {
        // scale by the larger component to keep the squares in range
        let s = self.re.hi.abs().max(self.im.hi.abs());
        let inv = 1.0 / s;
        let a = self.re.mul_f64(inv);
        let b = self.im.mul_f64(inv);
        let d = a * a + b * b;
        ExtendedComplex { re: (a / d).mul_f64(inv), im: (-b / d).mul_f64(inv) }
    }

    /// `e^z`.
    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        ExtendedComplex { re: m * c, im: m * s }
    }
}

impl Add for ExtendedComplex {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        ExtendedComplex { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for ExtendedComplex {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        ExtendedComplex { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for ExtendedComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ExtendedComplex { re: -self.re, im: -self.im }
    }
}

impl Mul for ExtendedComplex {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        ExtendedComplex {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Div for ExtendedComplex {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, b: Self) -> Self {
        self * b.recip()
    }
}

impl AddAssign for ExtendedComplex {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl MulAssign for ExtendedComplex {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd_rel(a: DoubleDouble, hi: f64, lo: f64) -> f64 {
        let diff = (a - DoubleDouble::new(hi, lo)).to_f64();
        (diff / hi).abs()
    }

    #[test]
    fn renormalised_pairs() {
        let x = DoubleDouble::new(1.0, 1e-20);
        assert_eq!(x.hi, 1.0);
        assert_eq!(x.lo, 1e-20);
        let y = DoubleDouble::from_f64(0.1) * DoubleDouble::from_f64(3.0);
        assert!(y.lo.abs() <= f64::EPSILON * y.hi.abs() / 2.0);
    }

    #[test]
    fn division_round_trip() {
        let a = DoubleDouble::PI;
        let b = DoubleDouble::new(7.0, 1e-17);
        let back = (a / b) * b;
        assert!(((back - a).to_f64() / a.hi).abs() < 1e-31);
        let third = DoubleDouble::ONE.div_f64(3.0);
        assert!(((third.mul_f64(3.0) - DoubleDouble::ONE).to_f64()).abs() < 1e-31);
    }

    #[test]
    fn exp_values() {
        // e and e^-49 from a 60-digit evaluation
        assert!(dd_rel(DoubleDouble::ONE.exp(), std::f64::consts::E, 1.4456468917292502e-16) < 1e-30);
        assert!(
            dd_rel(DoubleDouble::from_f64(-49.0).exp(), 5.242885663363464e-22, 3.946311221816784e-39)
                < 1e-29
        );
        assert_eq!(DoubleDouble::from_f64(-800.0).exp().to_f64(), 0.0);
        assert_eq!(DoubleDouble::ZERO.exp(), DoubleDouble::ONE);
    }

    #[test]
    fn sin_cos_values() {
        let (s, c) = DoubleDouble::ONE.sin_cos();
        assert!(dd_rel(s, 0.8414709848078965, 1.776845092935536e-18) < 1e-30);
        assert!(dd_rel(c, 0.5403023058681398, -4.760954612604417e-17) < 1e-30);
        let (s, c) = DoubleDouble::from_f64(100.0).sin_cos();
        assert!(dd_rel(s, -0.5063656411097588, -3.050947053792115e-18) < 1e-29);
        assert!(dd_rel(c, 0.8623188722876839, 4.334809858136501e-17) < 1e-29);
    }

    #[test]
    fn complex_ops() {
        let z = ExtendedComplex::from_f64(3.0, 4.0);
        let r = z.recip() * z;
        assert!((r.re - DoubleDouble::ONE).to_f64().abs() < 1e-31);
        assert!(r.im.to_f64().abs() < 1e-31);
        let s = z.sqr();
        assert_eq!(s.re.to_f64(), -7.0);
        assert_eq!(s.im.to_f64(), 24.0);
    }
}
