//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Three operations are exposed: evaluating one point (with the regime that
//! served it), rendering a field over a rectangle as RGBA pixels, and
//! sampling a Voigt profile. Everything runs on the calling thread.

use std::f64::consts::PI;

use fadsamp::oracle::relative_errors;
use fadsamp::special::{voigt, VoigtPoint};
use fadsamp::{default_table, eval_w, ComplexPoint, Regime};
use wasm_bindgen::prelude::*;

/// One evaluation of `w(z)`.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub re: f64,
    pub im: f64,
    /// `0` continued fraction, `1` shifted rational form, `2` pole-free form.
    pub regime: u8,
    pub reflected: bool,
    /// `log10` of the larger relative part error against the reference, or
    /// NaN outside the reference window.
    pub log10_error: f64,
}

fn regime_code(r: Regime) -> u8 {
    match r {
        Regime::External => 0,
        Regime::PrimarySubdomain => 1,
        Regime::SecondarySubdomain => 2,
    }
}

/// Evaluates `w(x + iy)`.
#[wasm_bindgen]
pub fn evaluate(x: f64, y: f64) -> Result<Evaluation, JsError> {
    let t = default_table();
    let p = ComplexPoint::new(x, y);
    let r = eval_w(p, t)?;
    let log10_error = match relative_errors(p, t) {
        Ok(e) => e.re.delta.max(e.im.delta).max(1e-30).log10(),
        Err(_) => f64::NAN,
    };
    Ok(Evaluation {
        re: r.value.re,
        im: r.value.im,
        regime: regime_code(r.regime),
        reflected: r.reflected,
        log10_error,
    })
}

/// What [`render_field`] colours.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    /// Hue from `arg w`, lightness from `log |w|`.
    Phase = 0,
    /// Which evaluator serves each pixel.
    Regime = 1,
    /// `log10` relative error of the real part, `-17..-11`.
    ErrorRe = 2,
    /// `log10` relative error of the imaginary part, `-17..-11`.
    ErrorIm = 3,
}

/// Largest pixel count [`render_field`] accepts.
pub const MAX_PIXELS: usize = 1 << 20;

/// Lowest and highest `log10` error on the error colour scale.
pub const ERROR_SCALE: (f64, f64) = (-17.0, -11.0);

/// Renders `mode` over `[xmin, xmax] x [ymin, ymax]` as `width * height`
/// RGBA pixels, top row first (largest `y`).
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn render_field(
    mode: FieldMode,
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    width: usize,
    height: usize,
) -> Result<Vec<u8>, JsError> {
    if width == 0 || height == 0 || width.saturating_mul(height) > MAX_PIXELS {
        return Err(JsError::new("image size out of range"));
    }
    if !(xmin < xmax && ymin < ymax) {
        return Err(JsError::new("empty rectangle"));
    }
    let t = default_table();
    let mut pixels = Vec::with_capacity(width * height * 4);
    for row in 0..height {
        let y = ymax - (ymax - ymin) * (row as f64 + 0.5) / height as f64;
        for col in 0..width {
            let x = xmin + (xmax - xmin) * (col as f64 + 0.5) / width as f64;
            let p = ComplexPoint::new(x, y);
            let rgb = match mode {
                FieldMode::Phase => match eval_w(p, t) {
                    Ok(r) => phase_colour(r.value.re, r.value.im),
                    Err(_) => [0, 0, 0],
                },
                FieldMode::Regime => match eval_w(p, t) {
                    Ok(r) => regime_colour(r.regime),
                    Err(_) => [0, 0, 0],
                },
                FieldMode::ErrorRe | FieldMode::ErrorIm => match relative_errors(p, t) {
                    Ok(e) => {
                        let part = if mode == FieldMode::ErrorRe { e.re } else { e.im };
                        error_colour(part.delta.max(1e-30).log10())
                    }
                    Err(_) => [40, 40, 40],
                },
            };
            pixels.extend_from_slice(&[rgb[0], rgb[1], rgb[2], 255]);
        }
    }
    Ok(pixels)
}

/// `K(x, y)` at `n` evenly spaced `x` in `[xmin, xmax]`.
#[wasm_bindgen]
pub fn voigt_profile(xmin: f64, xmax: f64, n: usize, y: f64) -> Result<Vec<f64>, JsError> {
    if !(2..=100_000).contains(&n) {
        return Err(JsError::new("need 2..=100000 samples"));
    }
    let t = default_table();
    (0..n)
        .map(|k| {
            let x = xmin + (xmax - xmin) * k as f64 / (n - 1) as f64;
            voigt(VoigtPoint::new(x, y), t).map_err(JsError::from)
        })
        .collect()
}

fn hsl_to_rgb(h: f64, s: f64, l: f64) -> [u8; 3] {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h.rem_euclid(1.0) * 6.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    [r, g, b].map(|v| ((v + m).clamp(0.0, 1.0) * 255.0).round() as u8)
}

/// Domain colouring: hue is the argument, lightness rises with `|w|`.
pub fn phase_colour(re: f64, im: f64) -> [u8; 3] {
    if !(re.is_finite() && im.is_finite()) {
        return [255, 255, 255];
    }
    let hue = im.atan2(re) / (2.0 * PI);
    let modulus = re.hypot(im);
    let lightness = 2.0 / PI * modulus.atan();
    hsl_to_rgb(hue, 0.85, 0.1 + 0.8 * lightness)
}

pub fn regime_colour(r: Regime) -> [u8; 3] {
    match r {
        Regime::External => [70, 110, 170],
        Regime::PrimarySubdomain => [235, 180, 70],
        Regime::SecondarySubdomain => [200, 70, 80],
    }
}

/// Perceptually ordered ramp from dark blue (small error) to yellow.
pub fn error_colour(log10_delta: f64) -> [u8; 3] {
    const STOPS: [[f64; 3]; 5] = [
        [13.0, 8.0, 135.0],
        [126.0, 3.0, 168.0],
        [204.0, 71.0, 120.0],
        [248.0, 149.0, 64.0],
        [240.0, 249.0, 33.0],
    ];
    let (lo, hi) = ERROR_SCALE;
    let s = ((log10_delta - lo) / (hi - lo)).clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let k = (s as usize).min(STOPS.len() - 2);
    let f = s - k as f64;
    let mut out = [0u8; 3];
    for (c, o) in out.iter_mut().enumerate() {
        *o = (STOPS[k][c] + f * (STOPS[k + 1][c] - STOPS[k][c])).round() as u8;
    }
    out
}
