//! Pole bookkeeping for both rational forms, and relative-error maps of the
//! fast evaluator against the reference.

use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::eval::{eval_w, ComplexPoint, INTERNAL_RADIUS, SUBDOMAIN_SLOPE};
use crate::oracle::{oracle_w, PartError, RelativeErrors};

/// Four roots of `gamma_m - theta_m z^2 + z^4 = 0` for one `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticRoots {
    /// One-based coefficient index.
    pub m: usize,
    /// `c_m + i varsigma/2`, first quadrant.
    pub z1: Complex64,
    /// `-c_m - i varsigma/2`.
    pub z2: Complex64,
    /// `c_m - i varsigma/2`.
    pub z3: Complex64,
    /// `-c_m + i varsigma/2`.
    pub z4: Complex64,
}

impl QuarticRoots {
    pub fn all(&self) -> [Complex64; 4] {
        [self.z1, self.z2, self.z3, self.z4]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoleSet {
    /// Quartic roots of the pole-free form, one entry per term it sums.
    pub quartic: Vec<QuarticRoots>,
    /// Poles `+-c_m - i varsigma/2` of the shifted form, `m = 1..=M`.
    pub rational: Vec<Complex64>,
    /// Largest `|gamma_m - theta_m z^2 + z^4|` over all quartic roots.
    pub max_residual: f64,
    /// Smallest distance from a quartic root to the secondary subdomain.
    pub min_secondary_distance: f64,
}

/// A pole that lands somewhere it would disturb the evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum PoleViolation {
    Residual { m: usize, root: Complex64, residual: f64 },
    NearSecondary { m: usize, root: Complex64, distance: f64 },
    RationalNotBelowAxis { pole: Complex64 },
}

/// Residual bound for the closed-form quartic roots.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Required clearance between quartic roots and the secondary subdomain.
pub const SECONDARY_CLEARANCE: f64 = 0.9;

/// Closed-form poles of both rational forms.
pub fn locate_poles(table: &CoefficientTable) -> PoleSet {
    let p = table.params();
    let half = p.varsigma / 2.0;
    let mut quartic = Vec::with_capacity(p.subdom2_terms());
    let mut max_residual = 0.0f64;
    let mut min_distance = f64::INFINITY;

    for i in 0..p.subdom2_terms() {
        let c = table.c()[i];
        let roots = QuarticRoots {
            m: i + 1,
            z1: Complex64::new(c, half),
            z2: Complex64::new(-c, -half),
            z3: Complex64::new(c, -half),
            z4: Complex64::new(-c, half),
        };
        for z in roots.all() {
            max_residual = max_residual.max(quartic_residual(table, i, z));
            min_distance = min_distance.min(distance_to_secondary(z));
        }
        quartic.push(roots);
    }

    let rational = (0..p.m)
        .flat_map(|i| {
            let c = table.c()[i];
            [Complex64::new(c, -half), Complex64::new(-c, -half)]
        })
        .collect();

    PoleSet { quartic, rational, max_residual, min_secondary_distance: min_distance }
}

/// `|gamma_m - theta_m z^2 + z^4|` for zero-based index `i`.
pub fn quartic_residual(table: &CoefficientTable, i: usize, z: Complex64) -> f64 {
    let z2 = z * z;
    (table.gamma()[i] - table.theta()[i] * z2 + z2 * z2).norm()
}

impl PoleSet {
    /// Checks residuals, clearance from the secondary subdomain and the
    /// position of the shifted-form poles below the real axis.
    pub fn check(&self, table: &CoefficientTable) -> Vec<PoleViolation> {
        let mut out = Vec::new();
        for q in &self.quartic {
            for root in q.all() {
                let residual = quartic_residual(table, q.m - 1, root);
                if !(residual <= RESIDUAL_TOL) {
                    out.push(PoleViolation::Residual { m: q.m, root, residual });
                }
                let distance = distance_to_secondary(root);
                if !(distance > SECONDARY_CLEARANCE) {
                    out.push(PoleViolation::NearSecondary { m: q.m, root, distance });
                }
            }
        }
        for &pole in &self.rational {
            if !(pole.im < 0.0) {
                out.push(PoleViolation::RationalNotBelowAxis { pole });
            }
        }
        out
    }

    /// Quartic roots with `Re > 0` and `Im > 0`.
    pub fn first_quadrant(&self) -> Vec<(usize, Complex64)> {
        self.quartic
            .iter()
            .flat_map(|q| q.all().into_iter().map(move |z| (q.m, z)))
            .filter(|(_, z)| z.re > 0.0 && z.im > 0.0)
            .collect()
    }
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / ab.norm_sqr();
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Euclidean distance from `p` to the secondary subdomain
/// `{ |z| <= 8, 0 <= y <= 0.05|x| }` (zero inside it).
pub fn distance_to_secondary(p: Complex64) -> f64 {
    // Work in the right half; the region is symmetric in x.
    let p = Complex64::new(p.re.abs(), p.im);
    let r = INTERNAL_RADIUS;
    let corner_x = r / (1.0 + SUBDOMAIN_SLOPE * SUBDOMAIN_SLOPE).sqrt();
    let corner = Complex64::new(corner_x, SUBDOMAIN_SLOPE * corner_x);
    let arc_angle = corner.arg();

    let inside = p.im >= 0.0 && p.im <= SUBDOMAIN_SLOPE * p.re && p.norm() <= r;
    if inside {
        return 0.0;
    }
    let origin = Complex64::new(0.0, 0.0);
    let on_axis = segment_distance(p, origin, Complex64::new(r, 0.0));
    let on_line = segment_distance(p, origin, corner);
    let theta = p.arg();
    let on_arc = if (0.0..=arc_angle).contains(&theta) {
        (p.norm() - r).abs()
    } else {
        let a = (p - Complex64::new(r, 0.0)).norm();
        let b = (p - corner).norm();
        a.min(b)
    };
    on_axis.min(on_line).min(on_arc)
}

/// Real or imaginary part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

impl Part {
    pub fn pick(self, e: &RelativeErrors) -> PartError {
        match self {
            Part::Re => e.re,
            Part::Im => e.im,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::Re => "re",
            Part::Im => "im",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Sample positions along one grid axis, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub spacing: Spacing,
}

impl Axis {
    pub fn linear(lo: f64, hi: f64, n: usize) -> Self {
        Axis { lo, hi, n, spacing: Spacing::Linear }
    }

    pub fn log(lo: f64, hi: f64, n: usize) -> Self {
        Axis { lo, hi, n, spacing: Spacing::Log }
    }

    fn validate(&self, name: &str) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidGrid(format!("{name} needs at least 2 samples")));
        }
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::InvalidGrid(format!("{name} range must satisfy lo < hi")));
        }
        if self.spacing == Spacing::Log && self.lo <= 0.0 {
            return Err(Error::InvalidGrid(format!("{name} log spacing needs lo > 0")));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.n - 1) as f64;
        (0..self.n)
            .map(|k| {
                if k == 0 {
                    return self.lo;
                }
                if k + 1 == self.n {
                    return self.hi;
                }
                let t = k as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.lo + (self.hi - self.lo) * t,
                    Spacing::Log => (self.lo.ln() + (self.hi.ln() - self.lo.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

/// Cell limit for [`error_map`].
pub const MAX_GRID_CELLS: usize = 10_000_000;
/// `log10` value stored for an exact match.
pub const LOG10_FLOOR: f64 = -30.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Worst {
    pub delta: f64,
    pub x: f64,
    pub y: f64,
    pub absolute: bool,
}

/// `log10` errors of one part over a rectangular grid, row-major in `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorGrid {
    pub part: Part,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub log10_delta: Vec<f64>,
    pub absolute: Vec<bool>,
    /// Worst error among relative-mode cells.
    pub worst: Worst,
    /// Worst error among absolute-mode cells, if any.
    pub worst_absolute: Option<Worst>,
    /// Mean of relative-mode errors.
    pub mean_delta: f64,
}

impl ErrorGrid {
    pub fn nx(&self) -> usize {
        self.x.len()
    }

    pub fn ny(&self) -> usize {
        self.y.len()
    }

    pub fn at(&self, ix: usize, iy: usize) -> (f64, bool) {
        let k = iy * self.nx() + ix;
        (self.log10_delta[k], self.absolute[k])
    }

    /// Writes `x,y,log10_delta,abs_flag` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "x,y,log10_delta,abs_flag")?;
        for (iy, &y) in self.y.iter().enumerate() {
            for (ix, &x) in self.x.iter().enumerate() {
                let (v, abs) = self.at(ix, iy);
                writeln!(out, "{x},{y},{v},{}", abs as u8)?;
            }
        }
        Ok(())
    }
}

fn log10_delta(delta: f64) -> f64 {
    if delta > 0.0 {
        delta.log10().max(LOG10_FLOOR)
    } else {
        LOG10_FLOOR
    }
}

fn cell_errors(x: f64, y: f64, table: &CoefficientTable) -> Result<RelativeErrors> {
    let z = ComplexPoint::new(x, y);
    let reference = oracle_w(z)?;
    let value = eval_w(z, table)?.value;
    Ok(RelativeErrors::between(reference, value))
}

fn assemble(part: Part, xs: &[f64], ys: &[f64], cells: &[RelativeErrors]) -> ErrorGrid {
    let nx = xs.len();
    let mut worst = Worst { delta: 0.0, x: xs[0], y: ys[0], absolute: false };
    let mut worst_absolute: Option<Worst> = None;
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut log10 = Vec::with_capacity(cells.len());
    let mut absolute = Vec::with_capacity(cells.len());
    for (k, e) in cells.iter().enumerate() {
        let pe = part.pick(e);
        let (x, y) = (xs[k % nx], ys[k / nx]);
        log10.push(log10_delta(pe.delta));
        absolute.push(pe.absolute);
        if pe.absolute {
            if worst_absolute.is_none_or(|w| pe.delta > w.delta) {
                worst_absolute = Some(Worst { delta: pe.delta, x, y, absolute: true });
            }
        } else {
            sum += pe.delta;
            count += 1;
            if pe.delta > worst.delta {
                worst = Worst { delta: pe.delta, x, y, absolute: false };
            }
        }
    }
    ErrorGrid {
        part,
        x: xs.to_vec(),
        y: ys.to_vec(),
        log10_delta: log10,
        absolute,
        worst,
        worst_absolute,
        mean_delta: if count > 0 { sum / count as f64 } else { 0.0 },
    }
}

/// Error maps of both parts, sharing one reference evaluation per cell.
/// Rows are computed in parallel; the result does not depend on scheduling.
pub fn error_maps(
    xr: Axis,
    yr: Axis,
    table: &CoefficientTable,
) -> Result<(ErrorGrid, ErrorGrid)> {
    xr.validate("x axis")?;
    yr.validate("y axis")?;
    let cells = xr.n.saturating_mul(yr.n);
    if cells > MAX_GRID_CELLS {
        return Err(Error::GridTooLarge { cells, limit: MAX_GRID_CELLS });
    }
    let xs = xr.points();
    let ys = yr.points();
    let rows: Vec<Vec<RelativeErrors>> = ys
        .par_iter()
        .map(|&y| xs.iter().map(|&x| cell_errors(x, y, table)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let flat: Vec<RelativeErrors> = rows.into_iter().flatten().collect();
    Ok((assemble(Part::Re, &xs, &ys, &flat), assemble(Part::Im, &xs, &ys, &flat)))
}

/// Error map of one part.
pub fn error_map(xr: Axis, yr: Axis, part: Part, table: &CoefficientTable) -> Result<ErrorGrid> {
    let (re, im) = error_maps(xr, yr, table)?;
    Ok(match part {
        Part::Re => re,
        Part::Im => im,
    })
}
