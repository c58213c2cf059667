//! Functions expressed through `w(z)`.
//!
//! Each is a thin wrapper over [`eval_w`](crate::eval::eval_w); none has an
//! approximation of its own. Where `e^{-z^2}` or similar factors overflow the
//! result follows IEEE semantics (infinite or NaN parts).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::eval::wofz;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `erf(z) = 1 - e^{-z^2} w(iz)`.
pub fn erf(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    let w = wofz(I * z, table)?;
    Ok(1.0 - (-(z * z)).exp() * w)
}

/// Dawson's integral `daw(z) = sqrt(pi)/(2i) (w(z) - e^{-z^2})`.
pub fn dawson(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    let w = wofz(z, table)?;
    Ok(Complex64::new(0.0, -PI.sqrt() / 2.0) * (w - (-(z * z)).exp()))
}

/// Fresnel integral `F(z) = int_0^z e^{i pi t^2 / 2} dt`, computed as
/// `(1+i)/2 [1 - e^{i pi z^2 / 2} w(sqrt(pi) (1+i) z / 2)]`.
///
/// For real `x`, `F(x) = C(x) + i S(x)` in the usual normalisation.
pub fn fresnel(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    let one_plus_i = Complex64::new(1.0, 1.0);
    let w = wofz(PI.sqrt() * one_plus_i * z / 2.0, table)?;
    let phase = (I * (PI / 2.0) * z * z).exp();
    Ok(one_plus_i * (1.0 - phase * w) / 2.0)
}

/// Plasma dispersion function `Z(z) = i sqrt(pi) w(z)`.
pub fn plasma_dispersion(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    Ok(Complex64::new(0.0, PI.sqrt()) * wofz(z, table)?)
}

/// Argument of the Voigt function: detuning `x` and damping `y >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtPoint {
    pub x: f64,
    pub y: f64,
}

impl VoigtPoint {
    pub fn new(x: f64, y: f64) -> Self {
        VoigtPoint { x, y }
    }
}

/// Voigt function `K(x, y) = Re w(x + iy)` for `y >= 0`.
pub fn voigt(p: VoigtPoint, table: &CoefficientTable) -> Result<f64> {
    if p.y < 0.0 {
        return Err(Error::Domain { x: p.x, y: p.y, reason: "Voigt function needs y >= 0" });
    }
    Ok(wofz(Complex64::new(p.x, p.y), table)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::default_table;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn erf_values() {
        let t = default_table();
        assert_eq!(erf(c(0.0, 0.0), t).unwrap(), c(0.0, 0.0));
        let e1 = erf(c(1.0, 0.0), t).unwrap();
        assert!((e1.re - 0.8427007929497149).abs() <= 1e-13);
        assert!(e1.im.abs() <= 1e-15);
        let em1 = erf(c(-1.0, 0.0), t).unwrap();
        assert!((em1 + e1).norm() <= 1e-14);
    }

    #[test]
    fn dawson_values() {
        let t = default_table();
        assert_eq!(dawson(c(0.0, 0.0), t).unwrap().norm(), 0.0);
        let d1 = dawson(c(1.0, 0.0), t).unwrap();
        assert!((d1.re - 0.5380795069127684).abs() <= 1e-13);
        for k in 0..=100 {
            let x = -5.0 + 0.1 * k as f64;
            let d = dawson(c(x, 0.0), t).unwrap();
            assert!(d.im.abs() <= 1e-15, "x = {x}: {d}");
        }
    }

    #[test]
    fn fresnel_values() {
        let t = default_table();
        assert_eq!(fresnel(c(0.0, 0.0), t).unwrap(), c(0.0, 0.0));
        let f1 = fresnel(c(1.0, 0.0), t).unwrap();
        // direct quadrature of e^{i pi t^2/2} over [0, 1]
        assert!((f1 - c(0.7798934003768229, 0.43825914739035476)).norm() <= 1e-12, "{f1}");
        let f50 = fresnel(c(50.0, 0.0), t).unwrap();
        assert!((f50 - c(0.5, 0.5)).norm() <= 1e-2, "{f50}");
    }

    #[test]
    fn plasma_values() {
        let t = default_table();
        let z0 = plasma_dispersion(c(0.0, 0.0), t).unwrap();
        assert_eq!(z0.re, 0.0);
        assert!(rel(z0.im, 1.772_453_850_905_516) <= 1e-15);
        let z = c(1.0, 1.0);
        let zz = plasma_dispersion(z, t).unwrap();
        let w = wofz(z, t).unwrap();
        let ratio = zz / w;
        assert!((ratio - c(0.0, PI.sqrt())).norm() <= 4.0 * f64::EPSILON * PI.sqrt());
        let expected = c(0.0, PI.sqrt()) * c(0.3047442052569126, 0.20821893820283163);
        assert!(rel(zz.re, expected.re) <= 1e-13 && rel(zz.im, expected.im) <= 1e-13);
    }

    #[test]
    fn voigt_values() {
        let t = default_table();
        assert_eq!(voigt(VoigtPoint::new(0.0, 0.0), t).unwrap(), 1.0);
        assert!(rel(voigt(VoigtPoint::new(2.0, 0.0), t).unwrap(), (-4.0f64).exp()) <= 1e-13);
        assert!(rel(voigt(VoigtPoint::new(2.0, 0.0), t).unwrap(), 0.0183156389) <= 1e-9);
        assert!(rel(voigt(VoigtPoint::new(1.0, 1.0), t).unwrap(), 0.3047442052569126) <= 1e-13);
        assert!(matches!(voigt(VoigtPoint::new(1.0, -0.1), t), Err(Error::Domain { .. })));
    }
}
