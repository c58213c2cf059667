//! Slow reference evaluation of `w(z)` in double-double arithmetic.
//!
//! Two algorithms, neither shared with the fast path:
//!
//! * **series** for `|x| <= 16`, `|y| <= 3`:
//!   `w(z) = e^{-z^2} (1 + 2i/sqrt(pi) S(z))` with
//!   `S(z) = sum_n z^{2n+1} / (n! (2n+1))`. Terms grow to about `e^{|z|^2}`
//!   but the sum only cancels by a factor near `e^{2y^2}`, at most `e^{18}`
//!   here, which the ~31-digit arithmetic absorbs.
//! * **continued fraction** everywhere else in the upper half-plane: the
//!   Laplace fraction run forward with the modified Lentz scheme until
//!   successive convergents agree to `1e-32`.
//!
//! On the real axis beyond the series strip the fraction only carries the
//! imaginary part; the real part is `e^{-x^2}` there and is set from that
//! identity. The lower half-plane strip `|y| <= 3` uses the series directly
//! (it is entire); below it `w(z) = 2e^{-z^2} - w(-z)` is applied in
//! extended precision.

use num_complex::Complex64;

use crate::dd::{DoubleDouble, ExtendedComplex};
use crate::error::{Error, Result};
use crate::eval::ComplexPoint;

/// Largest `|z|` the reference accepts.
pub const WINDOW_RADIUS: f64 = 1e5;
/// Half-width in `x` of the series strip.
pub const SERIES_MAX_X: f64 = 16.0;
/// Half-height in `y` of the series strip.
pub const SERIES_MAX_Y: f64 = 3.0;

const SERIES_TOL: f64 = 1e-34;
const SERIES_MAX_TERMS: usize = 4000;
const CF_TOL: f64 = 1e-32;
const CF_MAX_LEVELS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Series,
    ContinuedFraction,
}

/// Which algorithm serves `z` (upper half-plane or the series strip).
pub fn branch(z: ComplexPoint) -> Branch {
    if z.x.abs() <= SERIES_MAX_X && z.y.abs() <= SERIES_MAX_Y {
        Branch::Series
    } else {
        Branch::ContinuedFraction
    }
}

fn check_window(z: ComplexPoint) -> Result<()> {
    if !z.is_finite() {
        return Err(Error::NonFinite { x: z.x, y: z.y });
    }
    if z.to_complex().norm() > WINDOW_RADIUS {
        return Err(Error::OracleWindow { x: z.x, y: z.y });
    }
    Ok(())
}

/// `w(z)` rounded to double precision.
pub fn oracle_w(z: ComplexPoint) -> Result<Complex64> {
    oracle_w_extended(z).map(ExtendedComplex::to_complex)
}

/// `w(z)` in double-double.
pub fn oracle_w_extended(z: ComplexPoint) -> Result<ExtendedComplex> {
    check_window(z)?;
    match branch(z) {
        Branch::Series => Ok(series_branch(z)),
        Branch::ContinuedFraction if z.y >= 0.0 => cf_branch(z),
        Branch::ContinuedFraction => {
            let minus = ComplexPoint::new(-z.x, -z.y);
            let w_minus = oracle_w_extended(minus)?;
            let e = (-ExtendedComplex::from_f64(z.x, z.y).sqr()).exp();
            Ok(ExtendedComplex::new(e.re.mul_f64(2.0), e.im.mul_f64(2.0)) - w_minus)
        }
    }
}

/// The series algorithm, valid anywhere but accurate only in its strip.
pub fn series_branch(z: ComplexPoint) -> ExtendedComplex {
    let zc = ExtendedComplex::from_f64(z.x, z.y);
    let z2 = zc.sqr();
    let r2 = z.x * z.x + z.y * z.y;

    let mut power = zc; // z^{2n+1} / n!
    let mut sum = zc;
    for n in 0..SERIES_MAX_TERMS {
        let k = n as f64 + 1.0;
        power = (power * z2).div_f64(k);
        let term = power.div_f64(2.0 * k + 1.0);
        sum += term;
        if k > r2 && term.abs1() <= SERIES_TOL * sum.abs1() {
            break;
        }
    }
    let e = (-z2).exp();
    let scaled = (e * sum).mul_i().scale(DoubleDouble::FRAC_2_SQRT_PI);
    e + scaled
}

/// The continued-fraction algorithm for `y >= 0`.
pub fn cf_branch(z: ComplexPoint) -> Result<ExtendedComplex> {
    let zc = ExtendedComplex::from_f64(z.x, z.y);
    let tiny = ExtendedComplex::from_f64(1e-300, 0.0);

    // f = z - (1/2)/(z - 1/(z - (3/2)/(z - ...)))
    let mut f = zc;
    let mut c = zc;
    let mut d = ExtendedComplex::ZERO;
    let mut converged = false;
    for j in 1..=CF_MAX_LEVELS {
        let a = DoubleDouble::from_f64(-(j as f64) / 2.0);
        d = zc + d.scale(a);
        if d.abs1() == 0.0 {
            d = tiny;
        }
        c = zc + c.recip().scale(a);
        if c.abs1() == 0.0 {
            c = tiny;
        }
        d = d.recip();
        let delta = c * d;
        f *= delta;
        if (delta - ExtendedComplex::ONE).abs1() < CF_TOL {
            converged = true;
            break;
        }
    }
    if !converged || !f.re.is_finite() || !f.im.is_finite() {
        return Err(Error::OracleNoConvergence { x: z.x, y: z.y });
    }
    let numerator = ExtendedComplex::new(DoubleDouble::ZERO, DoubleDouble::FRAC_1_SQRT_PI);
    let mut w = numerator / f;
    if z.y == 0.0 {
        w.re = DoubleDouble::mul_f64_exact(z.x, z.x).neg_exp();
    }
    Ok(w)
}

impl DoubleDouble {
    fn neg_exp(self) -> DoubleDouble {
        (-self).exp()
    }
}

/// Relative error of one part, or absolute error when the reference part
/// is below `1e-300` in magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartError {
    pub delta: f64,
    pub absolute: bool,
}

impl PartError {
    pub fn between(reference: f64, value: f64) -> Self {
        if reference.abs() < 1e-300 {
            PartError { delta: (reference - value).abs(), absolute: true }
        } else {
            PartError { delta: ((reference - value) / reference).abs(), absolute: false }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeErrors {
    pub re: PartError,
    pub im: PartError,
}

impl RelativeErrors {
    pub fn between(reference: Complex64, value: Complex64) -> Self {
        RelativeErrors {
            re: PartError::between(reference.re, value.re),
            im: PartError::between(reference.im, value.im),
        }
    }
}

/// Per-part error of the fast evaluator against the reference at `z`.
pub fn relative_errors(
    z: ComplexPoint,
    table: &crate::coeffs::CoefficientTable,
) -> Result<RelativeErrors> {
    let reference = oracle_w(z)?;
    let value = crate::eval::eval_w(z, table)?.value;
    Ok(RelativeErrors::between(reference, value))
}
