//! Fast evaluation of the Faddeeva function `w(z) = exp(-z^2) erfc(-iz)`
//! over the whole complex plane.
//!
//! The evaluator splits the upper half-plane into three regions:
//!
//! * outside the disk `|z| > 8`: an 11-level Laplace continued fraction;
//! * inside the disk above the line `y = 0.05|x|`: a shifted rational
//!   approximation built from sinc sampling ([`eval::eval_omega`]);
//! * inside the disk below that line: a pole-free variant of the same
//!   approximation ([`eval::eval_subdom2`]).
//!
//! The lower half-plane is reached through `w(z) = 2exp(-z^2) - w(-z)`.
//!
//! Alongside the fast path the crate carries a slower double-double
//! reference ([`oracle`]) used to map relative errors ([`analysis`]), the
//! derived special functions ([`special`]) and a throughput harness
//! ([`bench`]).

// `!(a <= b)` is used on purpose so that NaN fails range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod bench;
pub mod cli;
pub mod coeffs;
pub mod dd;
mod error;
pub mod eval;
pub mod oracle;
pub mod special;

pub use coeffs::{default_table, CoefficientTable, Params};
pub use error::{Error, Result};
pub use eval::{eval_batch, eval_w, ComplexPoint, EvalResult, Regime};
pub use num_complex::Complex64;
