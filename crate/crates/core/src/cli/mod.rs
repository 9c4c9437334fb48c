//! Command-line surface: `extend`, `verify` and `spectrum`.

mod output;

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, rat_to_f64, ratfun_sub_constant_check, Rat};
use crate::extension::{
    build_state_adding, build_state_deleting, spectrum_table, ExtendedPotential,
};
use crate::families::{Family, IndexList};
use crate::ladder::{
    verify_action_coefficients, verify_b_singlets, verify_norm_ratios, verify_pha, verify_shift,
    verify_tilde, verify_zero_modes, Check, RationalExtension, Report,
};
use crate::numerics::{fd_eigenvalues, Grid};

pub use output::{extension_csv, extension_json, ExtensionJson, RatJson};

/// Environment variable overriding the number of finite-difference points.
pub const GRID_POINTS_ENV: &str = "WORKBENCH_GRID_POINTS";

#[derive(Debug, Parser)]
#[command(
    name = "workbench",
    version,
    about = "Rational extensions of the oscillators and their ladder operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the adding and/or deleting extension and export it.
    Extend(ExtendArgs),
    /// Run exact and numeric verification suites.
    Verify(VerifyArgs),
    /// Print the exact spectrum, optionally next to finite differences.
    Spectrum(SpectrumArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ho,
    Rho,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Radial parameter, an integer or a fraction such as 5/2.
    #[arg(long)]
    pub ell: Option<String>,
    /// Comma-separated index list, e.g. 0,1,4.
    #[arg(long)]
    pub m: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtendMode {
    Adding,
    Deleting,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpectrumMode {
    Adding,
    Deleting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pha,
    ZeroModes,
    Coefficients,
    Shift,
    Tilde,
    BSinglets,
    All,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, value_enum, default_value = "adding")]
    pub mode: ExtendMode,
    /// Output file; without it the export goes to stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Number of exact levels in the export.
    #[arg(long, default_value_t = 8)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Highest nonnegative label included in the state-based suites.
    #[arg(long, default_value_t = 10)]
    pub nu_max: i64,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    /// Also compute finite-difference eigenvalues and residuals.
    #[arg(long)]
    pub numeric: bool,
    #[arg(long, value_enum, default_value = "adding")]
    pub mode: SpectrumMode,
}

/// Parsed `--family/--ell/--m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub family: Family,
    pub indices: IndexList,
}

impl Configuration {
    pub fn parse(args: &ConfigArgs) -> Result<Self> {
        let family = match (args.family, &args.ell) {
            (FamilyArg::Ho, None) => Family::Ho,
            (FamilyArg::Ho, Some(_)) => {
                return Err(Error::Input("--ell applies to rho only".into()))
            }
            (FamilyArg::Rho, None) => return Err(Error::Input("--ell is required for rho".into())),
            (FamilyArg::Rho, Some(s)) => Family::rho(
                Rat::from_str(s.trim())
                    .map_err(|_| Error::Input(format!("cannot parse ell = {s:?} as a rational")))?,
            ),
        };
        let m = args
            .m
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("cannot parse index {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Configuration {
            family,
            indices: IndexList::new(m),
        })
    }
}

/// Default grid for the family with the point count taken from
/// `WORKBENCH_GRID_POINTS` when set.
pub fn grid_from_env(family: &Family) -> Result<Grid> {
    let grid = Grid::default_for(family);
    match std::env::var(GRID_POINTS_ENV) {
        Ok(s) => {
            let n = s
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("{GRID_POINTS_ENV} = {s:?} is not a count")))?;
            grid.with_points(n)
        }
        Err(_) => Ok(grid),
    }
}

/// Output text and process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Extend(a) => cmd_extend(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Spectrum(a) => cmd_spectrum(a),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Io(e.to_string()))
}

fn shift_check(adding: &ExtendedPotential, deleting: &ExtendedPotential) -> Check {
    let m_k = adding.indices.m_k() as i64;
    let want = match adding.family {
        Family::Ho => int(2 * m_k + 2),
        Family::Rho { .. } => int(m_k + 1),
    };
    let got = ratfun_sub_constant_check(&deleting.potential, &adding.potential);
    Check {
        name: "shift".into(),
        passed: got.as_ref() == Some(&want),
        detail: got.map_or("difference is not constant".into(), |c| c.to_string()),
    }
}

pub fn cmd_extend(args: &ExtendArgs) -> Result<Outcome> {
    let cfg = Configuration::parse(&args.config)?;
    let mut built = Vec::new();
    if matches!(args.mode, ExtendMode::Adding | ExtendMode::Both) {
        built.push(build_state_adding(&cfg.family, &cfg.indices)?);
    }
    if matches!(args.mode, ExtendMode::Deleting | ExtendMode::Both) {
        built.push(build_state_deleting(&cfg.family, &cfg.indices)?);
    }
    let shift = (built.len() == 2).then(|| shift_check(&built[0], &built[1]));
    let checks: Vec<Check> = shift.iter().cloned().collect();
    let body = match args.format {
        Format::Json => {
            let docs: Vec<ExtensionJson> = built
                .iter()
                .map(|p| extension_json(p, args.count, checks.clone()))
                .collect();
            if docs.len() == 1 {
                to_json(&docs[0])?
            } else {
                to_json(&docs)?
            }
        }
        Format::Csv => built
            .iter()
            .map(|p| format!("# {} {}\n{}", p.mode.name(), p.indices, extension_csv(p)))
            .collect(),
    };
    let mut summary = String::new();
    for p in &built {
        summary.push_str(&format!(
            "{} {} m={}: ground level {}\n",
            cfg.family,
            p.mode.name(),
            p.indices,
            p.spectrum.levels(1)[0].1
        ));
    }
    if let Some(c) = &shift {
        summary.push_str(&format!("shift: {}\n", c.detail));
    }
    let code = if shift.as_ref().map_or(true, |c| c.passed) {
        0
    } else {
        1
    };
    // the summary goes to stderr whenever stdout carries the export
    let (stdout, stderr) = match &args.out {
        Some(path) => {
            std::fs::write(path, body)?;
            summary.push_str(&format!("wrote {}\n", path.display()));
            (summary, String::new())
        }
        None => (body, summary),
    };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}

#[derive(Debug, Serialize)]
struct VerifyJson {
    family: String,
    ell: Option<RatJson>,
    m: Vec<u32>,
    passed: bool,
    suites: Vec<Report>,
}

/// Runs the named suites on one configuration.
pub fn run_suites(ext: &RationalExtension, suite: Suite, nu_max: i64) -> Result<Vec<Report>> {
    let all = suite == Suite::All;
    let mut reports = Vec::new();
    if all || suite == Suite::Shift {
        reports.push(verify_shift(ext));
    }
    if all || suite == Suite::Tilde {
        reports.push(verify_tilde(ext)?);
    }
    let count = ext.indices.k() + nu_max.max(0) as usize + 1;
    if all || suite == Suite::Pha {
        reports.push(verify_pha(ext, &ext.ladder_c(), count)?);
        reports.push(verify_pha(ext, &ext.ladder_b(), count)?);
    }
    if all || suite == Suite::ZeroModes {
        reports.push(verify_zero_modes(ext, nu_max)?);
    }
    if all || suite == Suite::Coefficients {
        reports.push(verify_action_coefficients(ext, nu_max, nu_max)?);
        let zero = crate::ladder::expected_zero_modes(&ext.indices);
        let nus: Vec<i64> = (0..).filter(|n| !zero.contains(n)).take(3).collect();
        let mut grid = grid_from_env(&ext.family)?;
        if ext.family.on_half_line() {
            grid = Grid::new(0.0, grid.b(), grid.n_points())?;
        }
        reports.push(verify_norm_ratios(ext, &nus, &grid, 1e-6)?);
    }
    if all || suite == Suite::BSinglets {
        reports.push(verify_b_singlets(ext)?);
    }
    Ok(reports)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let cfg = Configuration::parse(&args.config)?;
    let ext = RationalExtension::new(&cfg.family, &cfg.indices)?;
    let suites = run_suites(&ext, args.suite, args.nu_max)?;
    let passed = suites.iter().all(Report::passed);
    let doc = VerifyJson {
        family: cfg.family.name().to_string(),
        ell: cfg.family.ell().map(RatJson::from),
        m: cfg.indices.as_slice().to_vec(),
        passed,
        suites,
    };
    Ok(Outcome {
        stdout: to_json(&doc)?,
        stderr: String::new(),
        code: if passed { 0 } else { 1 },
    })
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<Outcome> {
    let cfg = Configuration::parse(&args.config)?;
    let p = match args.mode {
        SpectrumMode::Adding => build_state_adding(&cfg.family, &cfg.indices)?,
        SpectrumMode::Deleting => build_state_deleting(&cfg.family, &cfg.indices)?,
    };
    let mut table = spectrum_table(&p, args.count);
    if args.numeric {
        let grid = grid_from_env(&cfg.family)?;
        table = table.with_numeric(fd_eigenvalues(&p.potential, &grid, args.count)?)?;
    }
    let mut out = String::new();
    if table.has_numeric() {
        out.push_str("nu\texact\tnumeric\tresidual\n");
    } else {
        out.push_str("nu\texact\n");
    }
    for i in 0..table.len() {
        out.push_str(&format!("{}\t{}", table.nu[i], table.exact[i]));
        if table.has_numeric() {
            out.push_str(&format!(
                "\t{:.10}\t{:.3e}",
                table.numeric[i], table.residuals[i]
            ));
        }
        out.push('\n');
    }
    if let Some(r) = table.max_residual() {
        out.push_str(&format!("max residual {r:.3e} (exact values as decimals: "));
        let dec: Vec<String> = table
            .exact
            .iter()
            .map(|e| format!("{}", rat_to_f64(e)))
            .collect();
        out.push_str(&dec.join(" "));
        out.push_str(")\n");
    }
    Ok(Outcome::ok(out))
}
