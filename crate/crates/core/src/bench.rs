//! Throughput measurement over the standard random-point domains.
//!
//! Points come from ChaCha8 (`rand_chacha`), seeded with a 64-bit value, so
//! a `(kind, n, seed)` triple gives the same sequence on every platform.

use std::fmt;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::eval::{
    dispatch, eval_batch, eval_batch_parallel, eval_omega, eval_subdom2, eval_w, ComplexPoint,
    Regime,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    /// `0 < x < 6`, `0 < y < 0.1`.
    SmallY,
    /// `|z| < 15`, `y >= 0`.
    Disk15,
    /// `|z| < 10000`, `y >= 0`.
    Disk10k,
    /// 90% in `Disk15`, 10% in the annulus `15 <= |z| < 10000`.
    Mixed,
}

impl DomainKind {
    pub fn name(self) -> &'static str {
        match self {
            DomainKind::SmallY => "smally",
            DomainKind::Disk15 => "disk15",
            DomainKind::Disk10k => "disk10k",
            DomainKind::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchDomain {
    pub kind: DomainKind,
    pub n: usize,
    pub seed: u64,
}

impl BenchDomain {
    pub fn new(kind: DomainKind, n: usize, seed: u64) -> Self {
        BenchDomain { kind, n, seed }
    }
}

/// Uniform in `(0, hi)`, open at both ends.
fn open_unit<R: Rng>(rng: &mut R, hi: f64) -> f64 {
    loop {
        let v = rng.gen::<f64>() * hi;
        if v > 0.0 {
            return v;
        }
    }
}

/// Uniform by area over `r_lo <= |z| < r_hi`, `0 <= arg z <= pi`.
fn half_annulus<R: Rng>(rng: &mut R, r_lo: f64, r_hi: f64) -> ComplexPoint {
    loop {
        let u: f64 = rng.gen();
        let r = (r_lo * r_lo + u * (r_hi * r_hi - r_lo * r_lo)).sqrt();
        let theta = std::f64::consts::PI * rng.gen::<f64>();
        let p = ComplexPoint::new(r * theta.cos(), r * theta.sin());
        let norm = p.to_complex().norm();
        if norm < r_hi && norm >= r_lo && p.y >= 0.0 {
            return p;
        }
    }
}

/// Random points of `domain`, deterministic in its seed.
pub fn gen_points(domain: BenchDomain) -> Vec<ComplexPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(domain.seed);
    match domain.kind {
        DomainKind::SmallY => (0..domain.n)
            .map(|_| {
                let x = open_unit(&mut rng, 6.0);
                let y = open_unit(&mut rng, 0.1);
                ComplexPoint::new(x, y)
            })
            .collect(),
        DomainKind::Disk15 => (0..domain.n).map(|_| half_annulus(&mut rng, 0.0, 15.0)).collect(),
        DomainKind::Disk10k => {
            (0..domain.n).map(|_| half_annulus(&mut rng, 0.0, 10_000.0)).collect()
        }
        DomainKind::Mixed => {
            let inner = domain.n - domain.n / 10;
            let mut pts: Vec<_> = (0..inner).map(|_| half_annulus(&mut rng, 0.0, 15.0)).collect();
            pts.extend((inner..domain.n).map(|_| half_annulus(&mut rng, 15.0, 10_000.0)));
            pts
        }
    }
}

/// Points per regime.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RegimeHistogram {
    pub external: usize,
    pub primary: usize,
    pub secondary: usize,
}

impl RegimeHistogram {
    pub fn total(&self) -> usize {
        self.external + self.primary + self.secondary
    }

    pub fn count(&self, regime: Regime) -> usize {
        match regime {
            Regime::External => self.external,
            Regime::PrimarySubdomain => self.primary,
            Regime::SecondarySubdomain => self.secondary,
        }
    }

    fn add(&mut self, regime: Regime) {
        match regime {
            Regime::External => self.external += 1,
            Regime::PrimarySubdomain => self.primary += 1,
            Regime::SecondarySubdomain => self.secondary += 1,
        }
    }
}

/// Regime of every point (lower half-plane points are counted by the
/// regime of their mirror image).
pub fn regime_histogram(points: &[ComplexPoint], table: &CoefficientTable) -> RegimeHistogram {
    let mut h = RegimeHistogram::default();
    for &p in points {
        match eval_w(p, table) {
            Ok(r) => h.add(r.regime),
            Err(_) => h.add(dispatch(Complex64::new(p.x, p.y.abs()))),
        }
    }
    h
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub domain: BenchDomain,
    pub threads: usize,
    pub wall_seconds: f64,
    pub points_per_second: f64,
    /// Sum of all outputs in input order.
    pub checksum: Complex64,
    pub histogram: RegimeHistogram,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "domain={} n={} seed={} threads={}",
            self.domain.kind.name(),
            self.domain.n,
            self.domain.seed,
            self.threads
        )?;
        writeln!(f, "wall_seconds={:.6}", self.wall_seconds)?;
        writeln!(f, "points_per_second={:.0}", self.points_per_second)?;
        writeln!(f, "checksum={},{}", self.checksum.re, self.checksum.im)?;
        write!(
            f,
            "regimes external={} primary={} secondary={}",
            self.histogram.external, self.histogram.primary, self.histogram.secondary
        )
    }
}

impl BenchReport {
    pub const CSV_HEADER: &'static str =
        "domain,n,seed,threads,wall_seconds,points_per_second,checksum_re,checksum_im,external,primary,secondary";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.domain.kind.name(),
            self.domain.n,
            self.domain.seed,
            self.threads,
            self.wall_seconds,
            self.points_per_second,
            self.checksum.re,
            self.checksum.im,
            self.histogram.external,
            self.histogram.primary,
            self.histogram.secondary
        )
    }
}

/// Upper bound on the point count accepted by [`run_bench`].
pub const MAX_BENCH_POINTS: usize = 200_000_000;

/// Times batch evaluation of the domain's points.
///
/// `threads == 1` runs the sequential batch; larger values run the parallel
/// batch on a dedicated pool of that size. The checksum is accumulated in
/// input order either way, so it does not depend on `threads`.
pub fn run_bench(domain: BenchDomain, threads: usize, table: &CoefficientTable) -> Result<BenchReport> {
    if domain.n == 0 {
        return Err(Error::InvalidBench("n must be at least 1".into()));
    }
    if domain.n > MAX_BENCH_POINTS {
        return Err(Error::InvalidBench(format!(
            "n = {} exceeds the limit of {MAX_BENCH_POINTS}",
            domain.n
        )));
    }
    if threads == 0 {
        return Err(Error::InvalidBench("threads must be at least 1".into()));
    }
    let points = gen_points(domain);

    let start = Instant::now();
    let results = if threads == 1 {
        eval_batch(&points, table)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidBench(e.to_string()))?;
        pool.install(|| eval_batch_parallel(&points, table))
    };
    let wall = start.elapsed().as_secs_f64().max(f64::MIN_POSITIVE);

    let mut checksum = Complex64::new(0.0, 0.0);
    let mut histogram = RegimeHistogram::default();
    for r in results {
        let r = r?;
        checksum += r.value;
        histogram.add(r.regime);
    }
    Ok(BenchReport {
        domain,
        threads,
        wall_seconds: wall,
        points_per_second: domain.n as f64 / wall,
        checksum,
        histogram,
    })
}

/// Per-point cost of the two internal approximations on the same points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostRatio {
    pub primary_ns: f64,
    pub secondary_ns: f64,
}

impl CostRatio {
    /// Secondary over primary.
    pub fn ratio(&self) -> f64 {
        self.secondary_ns / self.primary_ns
    }
}

/// Times the shifted rational form and the pole-free form over `points`
/// (each applied to every point), taking the fastest of `reps` passes.
pub fn subdomain_cost(points: &[ComplexPoint], table: &CoefficientTable, reps: usize) -> CostRatio {
    let shift = Complex64::new(0.0, table.params().varsigma / 2.0);
    let zs: Vec<Complex64> = points.iter().map(|p| p.to_complex()).collect();
    let mut best_primary = f64::INFINITY;
    let mut best_secondary = f64::INFINITY;
    let mut sink = Complex64::new(0.0, 0.0);
    for _ in 0..reps.max(1) {
        let t = Instant::now();
        for &z in &zs {
            sink += eval_omega(z + shift, table);
        }
        best_primary = best_primary.min(t.elapsed().as_secs_f64());

        let t = Instant::now();
        for &z in &zs {
            sink += eval_subdom2(z, table);
        }
        best_secondary = best_secondary.min(t.elapsed().as_secs_f64());
    }
    std::hint::black_box(sink);
    let n = zs.len().max(1) as f64;
    CostRatio { primary_ns: best_primary * 1e9 / n, secondary_ns: best_secondary * 1e9 / n }
}
