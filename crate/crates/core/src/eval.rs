//! Region dispatch and the three fast approximations of `w(z)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};

/// Radius of the internal disk.
pub const INTERNAL_RADIUS: f64 = 8.0;
/// Slope of the line `y = 0.05|x|` separating the two internal subdomains.
pub const SUBDOMAIN_SLOPE: f64 = 0.05;
/// Depth of the Laplace continued fraction used outside the disk.
pub const CONTFR_LEVELS: usize = 11;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// A point `x + iy` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        ComplexPoint { x, y }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        ComplexPoint::new(z.re, z.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.to_complex()
    }
}

/// Which approximation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `|z| > 8`, continued fraction.
    External,
    /// Inside the disk with `y > 0.05|x|`, shifted rational form.
    PrimarySubdomain,
    /// Inside the disk with `y <= 0.05|x|`, pole-free form.
    SecondarySubdomain,
}

impl Regime {
    pub const ALL: [Regime; 3] =
        [Regime::External, Regime::PrimarySubdomain, Regime::SecondarySubdomain];

    pub fn name(self) -> &'static str {
        match self {
            Regime::External => "external",
            Regime::PrimarySubdomain => "primary",
            Regime::SecondarySubdomain => "secondary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub regime: Regime,
    /// The point lay below the real axis and was mapped through the
    /// reflection formula.
    pub reflected: bool,
}

/// Picks the approximation for a point of the closed upper half-plane.
/// Both comparisons are strict, so ties stay internal and secondary.
pub fn dispatch(z: Complex64) -> Regime {
    debug_assert!(z.im >= 0.0);
    if z.norm() > INTERNAL_RADIUS {
        Regime::External
    } else if z.im > SUBDOMAIN_SLOPE * z.re.abs() {
        Regime::PrimarySubdomain
    } else {
        Regime::SecondarySubdomain
    }
}

/// `Omega(u) = sum_{m=1}^{M} (a_m + b_m u) / (c_m^2 - u^2)`.
///
/// The caller shifts the argument, `u = z + i varsigma/2`.
pub fn eval_omega(u: Complex64, table: &CoefficientTable) -> Complex64 {
    let u2 = u * u;
    let terms = table.params().m;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..terms {
        let c = table.c[k];
        sum += (table.a[k] + table.b[k] * u) / (c * c - u2);
    }
    sum
}

/// `exp(-z^2) + z sum_m (alpha_m - beta_m z^2) / (gamma_m - theta_m z^2 + z^4)`,
/// summed over `M + 2` terms (or `M` with the extra terms disabled).
///
/// Poles sit on `Im z = +-varsigma/2`, well away from the secondary subdomain.
pub fn eval_subdom2(z: Complex64, table: &CoefficientTable) -> Complex64 {
    let z2 = z * z;
    let z4 = z2 * z2;
    let terms = table.params().subdom2_terms();
    // alpha_m and beta_m are purely imaginary, so the factor i is pulled out
    // of the sum and only their imaginary parts enter the loop.
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..terms {
        let numerator = table.alpha[k].im - table.beta[k].im * z2;
        sum += numerator / (table.gamma[k] - table.theta[k] * z2 + z4);
    }
    (-z2).exp() + z * Complex64::new(-sum.im, sum.re)
}

/// Laplace continued fraction with partial numerators `1/2, 1, ..., 11/2`,
/// evaluated from the bottom level up.
pub fn eval_contfr(z: Complex64) -> Complex64 {
    let top = CONTFR_LEVELS as f64 / 2.0;
    let mut cf = top / z;
    for k in 1..CONTFR_LEVELS {
        let numerator = (CONTFR_LEVELS - k) as f64 / 2.0;
        cf = numerator / (z - cf);
    }
    Complex64::new(0.0, FRAC_1_SQRT_PI) / (z - cf)
}

/// Upper half-plane evaluation, `z.im >= 0`.
fn eval_upper(z: Complex64, table: &CoefficientTable) -> (Complex64, Regime) {
    let regime = dispatch(z);
    let value = match regime {
        Regime::External => {
            let cf = eval_contfr(z);
            if z.im == 0.0 {
                // On the real axis the truncated fraction is purely
                // imaginary; the real part there is exp(-x^2) exactly.
                Complex64::new((-z.re * z.re).exp(), cf.im)
            } else {
                cf
            }
        }
        Regime::PrimarySubdomain => {
            let shift = table.params().varsigma / 2.0;
            eval_omega(z + Complex64::new(0.0, shift), table)
        }
        Regime::SecondarySubdomain => eval_subdom2(z, table),
    };
    (value, regime)
}

/// `w(z)` anywhere in the plane.
///
/// Below the real axis the point is conjugated, evaluated, and mapped back
/// with `w(z) = conj(2 exp(-conj(z)^2) - w(conj(z)))`. For large negative
/// `Im z` the exponential overflows and the result is infinite.
pub fn eval_w(z: ComplexPoint, table: &CoefficientTable) -> Result<EvalResult> {
    if !z.is_finite() {
        return Err(Error::NonFinite { x: z.x, y: z.y });
    }
    let z = z.to_complex();
    if z.im < 0.0 {
        let zeta = z.conj();
        let (w, regime) = eval_upper(zeta, table);
        let value = (2.0 * (-(zeta * zeta)).exp() - w).conj();
        Ok(EvalResult { value, regime, reflected: true })
    } else {
        let (value, regime) = eval_upper(z, table);
        Ok(EvalResult { value, regime, reflected: false })
    }
}

/// Complex-valued shorthand for [`eval_w`].
pub fn wofz(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    eval_w(z.into(), table).map(|r| r.value)
}

/// Evaluates every point in order. Errors stay at their input position.
pub fn eval_batch(points: &[ComplexPoint], table: &CoefficientTable) -> Vec<Result<EvalResult>> {
    points.iter().map(|&p| eval_w(p, table)).collect()
}

/// Same as [`eval_batch`] but spread over the current rayon pool. Output is
/// identical to the sequential version.
pub fn eval_batch_parallel(
    points: &[ComplexPoint],
    table: &CoefficientTable,
) -> Vec<Result<EvalResult>> {
    points.par_iter().map(|&p| eval_w(p, table)).collect()
}

/// `i / (sqrt(pi) z)`, the leading term of the continued fraction.
pub fn leading_asymptote(z: Complex64) -> Complex64 {
    Complex64::new(0.0, 1.0 / PI.sqrt()) / z
}
