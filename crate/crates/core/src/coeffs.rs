//! Expansion coefficients of the sampling-based rational approximation.
//!
//! With `u = z + i*varsigma/2` the approximation reads
//!
//! ```text
//! w(z) ~ sum_{m=1}^{M} (a_m + b_m u) / (c_m^2 - u^2)
//! ```
//!
//! and its symmetrised, pole-free form is
//!
//! ```text
//! w(z) ~ exp(-z^2) + z sum_m (alpha_m - beta_m z^2) / (gamma_m - theta_m z^2 + z^4).
//! ```
//!
//! Tables always hold `M + 2` entries. The shifted form uses the first `M`,
//! the pole-free form uses all of them unless `extra_terms` is switched off.

use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters of the sinc-sampling approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Sampling step.
    pub h: f64,
    /// Imaginary shift of the expansion.
    pub varsigma: f64,
    /// Number of rational terms.
    pub m: usize,
    /// Sampling half-width: samples run over `n = -N..=N`.
    pub n: usize,
    /// Use `M + 2` terms in the pole-free form (the two extra terms lift its
    /// accuracy near the origin from ~1e-12 to better than 1e-13).
    pub extra_terms: bool,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            h: 0.25,
            varsigma: 2.75,
            m: 23,
            n: 23,
            extra_terms: true,
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.h.is_finite() && self.h > 0.0) {
            return Err(Error::InvalidParams(format!("h must be positive, got {}", self.h)));
        }
        if !(self.varsigma.is_finite() && self.varsigma > 0.0) {
            return Err(Error::InvalidParams(format!(
                "varsigma must be positive, got {}",
                self.varsigma
            )));
        }
        if self.m == 0 {
            return Err(Error::InvalidParams("M must be at least 1".into()));
        }
        if self.n == 0 {
            return Err(Error::InvalidParams("N must be at least 1".into()));
        }
        Ok(())
    }

    /// Number of terms the pole-free form sums over.
    pub fn subdom2_terms(&self) -> usize {
        if self.extra_terms {
            self.m + 2
        } else {
            self.m
        }
    }
}

/// Precomputed coefficients for `m = 1..=M+2` (stored zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    params: Params,
    pub(crate) a: Vec<f64>,
    pub(crate) b: Vec<Complex64>,
    pub(crate) c: Vec<f64>,
    pub(crate) alpha: Vec<Complex64>,
    pub(crate) beta: Vec<Complex64>,
    pub(crate) gamma: Vec<f64>,
    pub(crate) theta: Vec<f64>,
}

/// Builds the table for `params`.
pub fn build_table(params: Params) -> Result<CoefficientTable> {
    params.validate()?;
    let Params { h, varsigma, m: big_m, n: big_n, .. } = params;
    let mf = big_m as f64;
    let half_shift = varsigma / 2.0;
    let nn = big_n as i64;

    let len = big_m + 2;
    let mut table = CoefficientTable {
        params,
        a: Vec::with_capacity(len),
        b: Vec::with_capacity(len),
        c: Vec::with_capacity(len),
        alpha: Vec::with_capacity(len),
        beta: Vec::with_capacity(len),
        gamma: Vec::with_capacity(len),
        theta: Vec::with_capacity(len),
    };

    for m in 1..=len {
        let mh = m as f64 - 0.5;
        let mut sin_sum = 0.0;
        let mut cos_sum = 0.0;
        for n in -nn..=nn {
            let nh = n as f64 * h;
            let weight = (varsigma * varsigma / 4.0 - nh * nh).exp();
            let arg = PI * mh * (nh + half_shift) / (mf * h);
            sin_sum += weight * arg.sin();
            cos_sum += weight * arg.cos();
        }
        let a = PI.sqrt() * mh / (2.0 * mf * mf * h) * sin_sum;
        let b_im = -1.0 / (mf * PI.sqrt()) * cos_sum;
        let c = PI * mh / (2.0 * mf * h);
        let c2 = c * c;

        let b = Complex64::new(0.0, b_im);
        // b_m (c_m^2 - (varsigma/2)^2) + i a_m varsigma, both parts imaginary.
        let alpha = Complex64::new(0.0, b_im * (c2 - half_shift * half_shift) + a * varsigma);
        let gamma = (c2 + half_shift * half_shift).powi(2);
        let theta = 2.0 * c2 - varsigma * varsigma / 2.0;

        table.a.push(a);
        table.b.push(b);
        table.c.push(c);
        table.alpha.push(alpha);
        table.beta.push(b);
        table.gamma.push(gamma);
        table.theta.push(theta);
    }
    Ok(table)
}

/// Table for the default parameters, built once per process.
pub fn default_table() -> &'static CoefficientTable {
    static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
    TABLE.get_or_init(|| build_table(Params::default()).expect("default parameters are valid"))
}

impl CoefficientTable {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Number of stored entries, `M + 2`.
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }
    pub fn b(&self) -> &[Complex64] {
        &self.b
    }
    pub fn c(&self) -> &[f64] {
        &self.c
    }
    pub fn alpha(&self) -> &[Complex64] {
        &self.alpha
    }
    pub fn beta(&self) -> &[Complex64] {
        &self.beta
    }
    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }
    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Overwrites one `gamma_m` (one-based `m`). Only useful to exercise
    /// [`verify_table`] with a corrupted table.
    #[doc(hidden)]
    pub fn corrupt_gamma(&mut self, m: usize, value: f64) {
        self.gamma[m - 1] = value;
    }
}

/// A broken table invariant, with the one-based coefficient index.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Length { field: &'static str, len: usize, expected: usize },
    ANotReal { m: usize },
    BNotImaginary { m: usize },
    AlphaNotImaginary { m: usize },
    BetaNotB { m: usize },
    CNotPositive { m: usize, c: f64 },
    CNotIncreasing { m: usize },
    CClosedForm { m: usize, c: f64, expected: f64 },
    GammaNotPositive { m: usize, gamma: f64 },
    GammaClosedForm { m: usize, gamma: f64, expected: f64 },
    ThetaClosedForm { m: usize, theta: f64, expected: f64 },
    Discriminant { m: usize, residual: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length { field, len, expected } => {
                write!(f, "{field} has {len} entries, expected {expected}")
            }
            Violation::ANotReal { m } => write!(f, "a_{m} is not real"),
            Violation::BNotImaginary { m } => write!(f, "b_{m} is not purely imaginary"),
            Violation::AlphaNotImaginary { m } => write!(f, "alpha_{m} is not purely imaginary"),
            Violation::BetaNotB { m } => write!(f, "beta_{m} differs from b_{m}"),
            Violation::CNotPositive { m, c } => write!(f, "c_{m} = {c} is not positive"),
            Violation::CNotIncreasing { m } => write!(f, "c_{m} does not exceed c_{}", m - 1),
            Violation::CClosedForm { m, c, expected } => {
                write!(f, "c_{m} = {c}, closed form gives {expected}")
            }
            Violation::GammaNotPositive { m, gamma } => {
                write!(f, "gamma_{m} = {gamma} is not positive")
            }
            Violation::GammaClosedForm { m, gamma, expected } => {
                write!(f, "gamma_{m} = {gamma}, closed form gives {expected}")
            }
            Violation::ThetaClosedForm { m, theta, expected } => {
                write!(f, "theta_{m} = {theta}, closed form gives {expected}")
            }
            Violation::Discriminant { m, residual } => write!(
                f,
                "theta_{m}^2 - 4 gamma_{m} + 4 c_{m}^2 varsigma^2 has relative residual {residual:e}"
            ),
        }
    }
}

const REL_TOL: f64 = 1e-12;

fn rel_close(value: f64, expected: f64) -> bool {
    (value - expected).abs() <= REL_TOL * expected.abs().max(f64::MIN_POSITIVE)
}

/// Checks every table invariant and lists the ones that fail.
pub fn verify_table(table: &CoefficientTable) -> Vec<Violation> {
    let p = table.params;
    let expected = p.m + 2;
    let mut out = Vec::new();

    for (field, len) in [
        ("a", table.a.len()),
        ("b", table.b.len()),
        ("c", table.c.len()),
        ("alpha", table.alpha.len()),
        ("beta", table.beta.len()),
        ("gamma", table.gamma.len()),
        ("theta", table.theta.len()),
    ] {
        if len != expected {
            out.push(Violation::Length { field, len, expected });
        }
    }
    if !out.is_empty() {
        return out;
    }

    let half = p.varsigma / 2.0;
    for i in 0..expected {
        let m = i + 1;
        if !table.a[i].is_finite() {
            out.push(Violation::ANotReal { m });
        }
        if table.b[i].re != 0.0 {
            out.push(Violation::BNotImaginary { m });
        }
        if table.alpha[i].re != 0.0 {
            out.push(Violation::AlphaNotImaginary { m });
        }
        if table.beta[i] != table.b[i] {
            out.push(Violation::BetaNotB { m });
        }

        let c = table.c[i];
        let c_expected = PI * (m as f64 - 0.5) / (2.0 * p.m as f64 * p.h);
        if !(c > 0.0) {
            out.push(Violation::CNotPositive { m, c });
        }
        if !rel_close(c, c_expected) {
            out.push(Violation::CClosedForm { m, c, expected: c_expected });
        }
        if i > 0 && !(c > table.c[i - 1]) {
            out.push(Violation::CNotIncreasing { m });
        }

        let gamma = table.gamma[i];
        let gamma_expected = (c * c + half * half).powi(2);
        if !(gamma > 0.0) {
            out.push(Violation::GammaNotPositive { m, gamma });
        }
        if !rel_close(gamma, gamma_expected) {
            out.push(Violation::GammaClosedForm { m, gamma, expected: gamma_expected });
        }

        let theta = table.theta[i];
        let theta_expected = 2.0 * c * c - p.varsigma * p.varsigma / 2.0;
        if !rel_close(theta, theta_expected) {
            out.push(Violation::ThetaClosedForm { m, theta, expected: theta_expected });
        }

        let scale = 4.0 * c * c * p.varsigma * p.varsigma;
        let residual = (theta * theta - 4.0 * gamma + scale).abs() / scale;
        if !(residual <= REL_TOL) {
            out.push(Violation::Discriminant { m, residual });
        }
    }
    out
}
