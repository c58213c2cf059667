//! Command-line front end.
//!
//! [`run`] takes the argument list and the three standard streams so that
//! the binary is a one-liner and tests can drive it in-process. Exit codes:
//! `0` success, `1` usage error, `2` data error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::analysis::{error_map, locate_poles, Axis, Part, Spacing};
use crate::bench::{run_bench, BenchDomain, BenchReport, DomainKind};
use crate::coeffs::{build_table, CoefficientTable, Params};
use crate::error::Error;
use crate::eval::{wofz, ComplexPoint};
use crate::special::{dawson, erf, fresnel, plasma_dispersion, voigt, VoigtPoint};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fadsamp", version, about = "Faddeeva function evaluation and accuracy analysis")]
pub struct Cli {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Overrides for the approximation parameters.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Sampling step.
    #[arg(long, global = true)]
    pub h: Option<f64>,
    /// Imaginary shift.
    #[arg(long, global = true)]
    pub varsigma: Option<f64>,
    /// Number of terms in the shifted rational form.
    #[arg(long = "M", global = true)]
    pub m: Option<usize>,
    /// Half-width of the coefficient sums.
    #[arg(long = "N", global = true)]
    pub n: Option<usize>,
    /// Use M instead of M+2 terms in the pole-free form.
    #[arg(long, global = true)]
    pub no_extra_terms: bool,
}

impl ParamArgs {
    pub fn to_params(&self) -> Params {
        let d = Params::default();
        Params {
            h: self.h.unwrap_or(d.h),
            varsigma: self.varsigma.unwrap_or(d.varsigma),
            m: self.m.unwrap_or(d.m),
            n: self.n.unwrap_or(d.n),
            extra_terms: !self.no_extra_terms,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at "x,y" points read from a file or stdin.
    Eval(EvalArgs),
    /// Write a relative-error map against the reference evaluator as CSV.
    Errmap(ErrmapArgs),
    /// List the poles of both rational forms.
    Poles,
    /// Time batch evaluation over a random-point domain.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Wofz,
    Erf,
    Dawson,
    Fresnel,
    Voigt,
    Plasma,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum, default_value_t = Function::Wofz)]
    pub function: Function,
    /// Input file; standard input when omitted or "-".
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    Re,
    Im,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Linear,
    Log,
}

#[derive(Debug, Args)]
pub struct ErrmapArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 15.0, allow_negative_numbers = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub ymin: f64,
    #[arg(long, default_value_t = 15.0, allow_negative_numbers = true)]
    pub ymax: f64,
    #[arg(long, default_value_t = 500)]
    pub nx: usize,
    #[arg(long, default_value_t = 500)]
    pub ny: usize,
    #[arg(long, value_enum, default_value_t = PartArg::Re)]
    pub part: PartArg,
    #[arg(long, value_enum, default_value_t = SpacingArg::Linear)]
    pub spacing: SpacingArg,
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    Smally,
    Disk15,
    Disk10k,
    Mixed,
}

impl From<DomainArg> for DomainKind {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Smally => DomainKind::SmallY,
            DomainArg::Disk15 => DomainKind::Disk15,
            DomainArg::Disk10k => DomainKind::Disk10k,
            DomainArg::Mixed => DomainKind::Mixed,
        }
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = DomainArg::Smally)]
    pub domain: DomainArg,
    #[arg(long, default_value_t = 1_000_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Print a CSV header and row instead of the text report.
    #[arg(long)]
    pub csv: bool,
}

/// A failure that maps to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::InvalidGrid(_) | Error::InvalidBench(_) => {
                Failure::Usage(e.to_string())
            }
            Error::GridTooLarge { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = stderr.flush();
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DATA
        }
    }
}

fn execute(
    cli: &Cli,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let table = build_table(cli.params.to_params())?;
    match &cli.command {
        Command::Eval(args) => cmd_eval(args, &table, stdin, stdout),
        Command::Errmap(args) => cmd_errmap(args, &table, stdout, stderr),
        Command::Poles => cmd_poles(&table, stdout),
        Command::Bench(args) => cmd_bench(args, &table, stdout),
    }
}

/// Parses one "x,y" line; `None` for blank and comment lines.
pub fn parse_point(line: &str) -> Option<Result<ComplexPoint, String>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return None;
    }
    let mut fields = line.split(',');
    let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
        return Some(Err(format!("expected \"x,y\", got {line:?}")));
    };
    let parse = |s: &str| s.trim().parse::<f64>().map_err(|e| format!("{s:?}: {e}"));
    Some(parse(xs).and_then(|x| parse(ys).map(|y| ComplexPoint::new(x, y))))
}

fn apply(function: Function, p: ComplexPoint, table: &CoefficientTable) -> crate::Result<Complex64> {
    let z = p.to_complex();
    match function {
        Function::Wofz => wofz(z, table),
        Function::Erf => erf(z, table),
        Function::Dawson => dawson(z, table),
        Function::Fresnel => fresnel(z, table),
        Function::Plasma => plasma_dispersion(z, table),
        Function::Voigt => voigt(VoigtPoint::new(p.x, p.y), table).map(|k| Complex64::new(k, 0.0)),
    }
}

fn cmd_eval(
    args: &EvalArgs,
    table: &CoefficientTable,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let reader: Box<dyn BufRead + '_> = match &args.input {
        Some(path) if path.as_os_str() != "-" => Box::new(BufReader::new(
            File::open(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?,
        )),
        _ => Box::new(BufReader::new(stdin)),
    };
    // Parse everything first so a bad line produces no partial output.
    let mut points = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        match parse_point(&line) {
            None => {}
            Some(Ok(p)) => points.push(p),
            Some(Err(msg)) => return Err(Failure::Data(format!("line {}: {msg}", k + 1))),
        }
    }
    let mut out = BufWriter::new(stdout);
    for p in points {
        match apply(args.function, p, table) {
            Ok(v) => writeln!(out, "{},{},{},{}", p.x, p.y, v.re, v.im)?,
            Err(e @ Error::Domain { .. }) => writeln!(out, "{},{},error,{e}", p.x, p.y)?,
            Err(e) => return Err(e.into()),
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_errmap(
    args: &ErrmapArgs,
    table: &CoefficientTable,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let spacing = match args.spacing {
        SpacingArg::Linear => Spacing::Linear,
        SpacingArg::Log => Spacing::Log,
    };
    let part = match args.part {
        PartArg::Re => Part::Re,
        PartArg::Im => Part::Im,
    };
    let xr = Axis { lo: args.xmin, hi: args.xmax, n: args.nx, spacing };
    let yr = Axis { lo: args.ymin, hi: args.ymax, n: args.ny, spacing };
    let grid = error_map(xr, yr, part, table)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            grid.write_csv(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(stdout);
            grid.write_csv(&mut w)?;
            w.flush()?;
        }
    }
    let w = grid.worst;
    writeln!(stderr, "worst {} relative error {:e} at x={}, y={}", part.name(), w.delta, w.x, w.y)?;
    if let Some(a) = grid.worst_absolute {
        writeln!(
            stderr,
            "worst {} absolute error {:e} at x={}, y={} (zero reference)",
            part.name(),
            a.delta,
            a.x,
            a.y
        )?;
    }
    writeln!(stderr, "mean {} relative error {:e}", part.name(), grid.mean_delta)?;
    Ok(())
}

fn cmd_poles(table: &CoefficientTable, stdout: &mut dyn Write) -> Result<(), Failure> {
    let poles = locate_poles(table);
    let mut out = BufWriter::new(stdout);
    writeln!(out, "# quartic roots of the pole-free form")?;
    writeln!(out, "form,m,re,im,abs,residual,distance_to_secondary,first_quadrant")?;
    for q in &poles.quartic {
        for root in q.all() {
            writeln!(
                out,
                "quartic,{},{},{},{},{:e},{},{}",
                q.m,
                root.re,
                root.im,
                root.norm(),
                crate::analysis::quartic_residual(table, q.m - 1, root),
                crate::analysis::distance_to_secondary(root),
                (root.re > 0.0 && root.im > 0.0) as u8
            )?;
        }
    }
    writeln!(out, "# poles of the shifted rational form")?;
    for (k, pole) in poles.rational.iter().enumerate() {
        writeln!(out, "rational,{},{},{},{},,,", k / 2 + 1, pole.re, pole.im, pole.norm())?;
    }
    let violations = poles.check(table);
    writeln!(
        out,
        "# first_quadrant={} max_residual={:e} min_distance_to_secondary={} violations={}",
        poles.first_quadrant().len(),
        poles.max_residual,
        poles.min_secondary_distance,
        violations.len()
    )?;
    out.flush()?;
    Ok(())
}

fn cmd_bench(args: &BenchArgs, table: &CoefficientTable, stdout: &mut dyn Write) -> Result<(), Failure> {
    let domain = BenchDomain::new(args.domain.into(), args.n, args.seed);
    let report = run_bench(domain, args.threads, table)?;
    if args.csv {
        writeln!(stdout, "{}", BenchReport::CSV_HEADER)?;
        writeln!(stdout, "{}", report.csv_row())?;
    } else {
        writeln!(stdout, "{report}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["fadsamp"];
        argv.extend_from_slice(args);
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_points() {
        assert_eq!(parse_point("  # note"), None);
        assert_eq!(parse_point(""), None);
        assert_eq!(parse_point("1.5, -2e-3"), Some(Ok(ComplexPoint::new(1.5, -2e-3))));
        assert!(matches!(parse_point("1,2,3"), Some(Err(_))));
        assert!(matches!(parse_point("abc,2"), Some(Err(_))));
    }

    #[test]
    fn eval_origin() {
        let (code, out, _) = run_str(&["eval"], "0,0\n");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "0,0,1,0\n");
    }

    #[test]
    fn eval_real_axis_and_plasma() {
        let (_, out, _) = run_str(&["eval", "--function", "wofz"], "1,0\n");
        let re: f64 = out.trim().split(',').nth(2).unwrap().parse().unwrap();
        assert!(((re - 0.36787944117144233) / re).abs() <= 1e-15);
        let (_, out, _) = run_str(&["eval", "--function", "plasma"], "0,0\n");
        let im: f64 = out.trim().split(',').nth(3).unwrap().parse().unwrap();
        assert!((im - 1.772_453_850_905_516).abs() <= 1e-15);
    }

    #[test]
    fn parse_error_reports_line() {
        let (code, out, err) = run_str(&["eval"], "# header\n1,1\nnope\n");
        assert_eq!(code, EXIT_DATA);
        assert!(out.is_empty());
        assert!(err.contains("line 3"), "{err}");
    }

    #[test]
    fn voigt_negative_y_is_marked() {
        let (code, out, _) = run_str(&["eval", "--function", "voigt"], "1,-1\n1,1\n");
        assert_eq!(code, EXIT_OK);
        let lines: Vec<_> = out.lines().collect();
        assert!(lines[0].starts_with("1,-1,error,"), "{}", lines[0]);
        assert!(lines[1].starts_with("1,1,0.30474420525691"), "{}", lines[1]);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--function", "gamma"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["--h", "-1", "poles"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["errmap", "--nx", "1"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["bench", "--n", "0"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn params_rebuild_table() {
        let (_, a, _) = run_str(&["eval"], "0.5,0.01\n");
        let (_, b, _) = run_str(&["--M", "30", "--N", "30", "eval"], "0.5,0.01\n");
        let (_, c, _) = run_str(&["eval", "--h", "0.3"], "0.5,0.01\n");
        assert_ne!(a, c);
        let ra: f64 = a.trim().split(',').nth(2).unwrap().parse().unwrap();
        let rb: f64 = b.trim().split(',').nth(2).unwrap().parse().unwrap();
        assert!(((ra - rb) / ra).abs() < 1e-6);
    }
}
