//! `biqubit` — measurement statistics of single qubits and entangled pairs.
//!
//! Subcommands: `single` and `pair` evaluate one parameter point, `sweep`
//! writes a CSV/JSON grid, `verify` runs the self-verification suite with an
//! exit-code contract, and `compare` reports the correlation-sign swap
//! identities. Exit codes: 0 success / all checks pass, 1 verification
//! failure, 2 usage error, 3 I/O error.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use biqubit_core::oracle::{empirical_visibility, expand_pair, joint_born};
use biqubit_core::pair::{
    correlation_probs, local_probs, pair_visibilities, CorrelationSign, JointProbabilities,
    PairAmplitudes, RatioParams,
};
use biqubit_core::qubit::{self, BasisFrame, BlochDirection};
use biqubit_core::sweep::{Axis, FixedParams, SweepParam, SweepSpec};
use biqubit_core::verify::{self, VerifyConfig};

/// Optional override for the default verification tolerance.
const TOL_ENV: &str = "BIQUBIT_TOL";

#[derive(Parser)]
#[command(
    name = "biqubit",
    version,
    about = "Measurement statistics of single qubits and entangled qubit pairs",
    after_help = "Angles are radians unless --degrees is given. \
                  BIQUBIT_TOL overrides the default verification tolerance (1e-12)."
)]
struct Cli {
    /// Interpret all angle flags and angle axes as degrees.
    #[arg(long, global = true)]
    degrees: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outcome probabilities, visibilities, and frame components of one qubit.
    Single(SingleArgs),
    /// Joint, local, and visibility statistics of an entangled pair.
    Pair(PairArgs),
    /// Evaluate a parameter grid and write one row per point.
    Sweep(SweepArgs),
    /// Run every module invariant on seeded pseudo-random inputs.
    Verify(VerifyArgs),
    /// Put the two correlation signs side by side and bound their swap identities.
    Compare(CompareArgs),
}

#[derive(Args)]
struct SingleArgs {
    /// Polar angle of the state.
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Azimuth of the state.
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    /// Polar angle of the measurement frame.
    #[arg(long, default_value_t = 0.0)]
    chi: f64,
    /// Azimuth of the measurement frame.
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
}

#[derive(Args)]
struct PairArgs {
    /// Squared weight of the first branch, in [0, 1].
    #[arg(long, default_value_t = 0.5)]
    p2: f64,
    /// Polar angle of the shared measurement frame.
    #[arg(long, default_value_t = FRAC_PI_2)]
    chi: f64,
    /// Relative phase between the branches.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Correlation sign of the pair.
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    sign: SignArg,
}

#[derive(Args)]
struct SweepArgs {
    /// Swept axis as name=start:stop:count (repeatable, up to 3 axes,
    /// names: p2, chi, alpha, theta, phi, delta).
    #[arg(long = "axis", required = true)]
    axes: Vec<AxisArg>,
    #[arg(long, default_value_t = 0.5)]
    p2: f64,
    #[arg(long, default_value_t = FRAC_PI_2)]
    chi: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    sign: SignArg,
    /// Output file path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random samples per randomized invariant.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance for algebraic identities (default 1e-12, or BIQUBIT_TOL).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = ReportFormatArg::Text)]
    format: ReportFormatArg,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, default_value_t = 0.5)]
    p2: f64,
    #[arg(long, default_value_t = FRAC_PI_2)]
    chi: f64,
    /// Phase-grid resolution for the empirical sweeps (at least 64).
    #[arg(long, default_value_t = 256)]
    grid_points: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Minus,
    Plus,
}

impl From<SignArg> for CorrelationSign {
    fn from(arg: SignArg) -> Self {
        match arg {
            SignArg::Minus => CorrelationSign::Minus,
            SignArg::Plus => CorrelationSign::Plus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy)]
struct AxisArg {
    param: SweepParam,
    start: f64,
    stop: f64,
    count: usize,
}

impl std::str::FromStr for AxisArg {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let usage = "expected name=start:stop:count";
        let (name, grid) = text.split_once('=').ok_or(usage)?;
        let param = SweepParam::parse(name.trim())
            .ok_or_else(|| format!("unknown sweep parameter {name:?}"))?;
        let mut parts = grid.split(':');
        let mut next = |what: &str| {
            parts
                .next()
                .ok_or_else(|| format!("{usage}; missing {what}"))
        };
        let start: f64 = next("start")?.parse().map_err(|e| format!("start: {e}"))?;
        let stop: f64 = next("stop")?.parse().map_err(|e| format!("stop: {e}"))?;
        let count: usize = next("count")?.parse().map_err(|e| format!("count: {e}"))?;
        if parts.next().is_some() {
            return Err(usage.to_string());
        }
        Ok(AxisArg {
            param,
            start,
            stop,
            count,
        })
    }
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Io(_) => ExitCode::from(3),
        }
    }
}

impl From<biqubit_core::Error> for CliError {
    fn from(err: biqubit_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let to_rad = if cli.degrees { PI / 180.0 } else { 1.0 };
    match cli.command {
        Command::Single(args) => cmd_single(&args, to_rad),
        Command::Pair(args) => cmd_pair(&args, to_rad),
        Command::Sweep(args) => cmd_sweep(&args, to_rad),
        Command::Verify(args) => cmd_verify(&args),
        Command::Compare(args) => cmd_compare(&args, to_rad),
    }
}

fn cmd_single(args: &SingleArgs, to_rad: f64) -> Result<ExitCode, CliError> {
    let dir = BlochDirection::new(args.theta * to_rad, args.phi * to_rad)?;
    let frame = BasisFrame::new(args.chi * to_rad, args.delta * to_rad)?;
    let (p_e, p_ebar) = qubit::outcome_probs(&dir, &frame);
    let (v_e, v_ebar) = qubit::fringe_visibilities(dir.polar(), frame.polar())?;
    let (u, v) = qubit::components_in_frame(&dir, &frame);
    let mut out = std::io::stdout().lock();
    output::print_field(&mut out, "p_e", p_e)?;
    output::print_field(&mut out, "p_ebar", p_ebar)?;
    output::print_field(&mut out, "v_e", v_e)?;
    output::print_field(&mut out, "v_ebar", v_ebar)?;
    output::print_field(&mut out, "u_re", u.re)?;
    output::print_field(&mut out, "u_im", u.im)?;
    output::print_field(&mut out, "v_re", v.re)?;
    output::print_field(&mut out, "v_im", v.im)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pair(args: &PairArgs, to_rad: f64) -> Result<ExitCode, CliError> {
    let sign = CorrelationSign::from(args.sign);
    let alpha = args.alpha * to_rad;
    let pair = PairAmplitudes::new(args.p2, alpha, sign)?;
    let frame = BasisFrame::new(args.chi * to_rad, 0.0)?;
    let params = RatioParams::from_pair_frame(&pair, &frame);
    let joint = correlation_probs(&params, alpha, sign)?;
    let (p_e_local, p_ebar_local) = local_probs(&params);
    let (v_plus, v_minus) = visibilities_for_sign(&params, sign);
    let mut out = std::io::stdout().lock();
    output::print_field(&mut out, "epsilon", params.epsilon())?;
    output::print_field(&mut out, "sigma", params.sigma())?;
    output::print_field(&mut out, "p_ee", joint.p_ee)?;
    output::print_field(&mut out, "p_eb", joint.p_eb)?;
    output::print_field(&mut out, "p_be", joint.p_be)?;
    output::print_field(&mut out, "p_bb", joint.p_bb)?;
    output::print_field(&mut out, "p_plus", joint.plus_total())?;
    output::print_field(&mut out, "p_minus", joint.minus_total())?;
    output::print_field(&mut out, "p_e_local", p_e_local)?;
    output::print_field(&mut out, "p_ebar_local", p_ebar_local)?;
    output::print_field(&mut out, "v_plus", v_plus)?;
    output::print_field(&mut out, "v_minus", v_minus)?;
    Ok(ExitCode::SUCCESS)
}

/// Visibilities of the p_plus/p_minus curves for the given sign; the
/// closed forms describe the `(−)` pair, the `(+)` pair swaps the roles.
fn visibilities_for_sign(params: &RatioParams, sign: CorrelationSign) -> (f64, f64) {
    let (v_plus, v_minus) = pair_visibilities(params);
    match sign {
        CorrelationSign::Minus => (v_plus, v_minus),
        CorrelationSign::Plus => (v_minus, v_plus),
    }
}

fn cmd_sweep(args: &SweepArgs, to_rad: f64) -> Result<ExitCode, CliError> {
    let angle_scale = |param: SweepParam| match param {
        SweepParam::P2 => 1.0,
        _ => to_rad,
    };
    let spec = SweepSpec {
        axes: args
            .axes
            .iter()
            .map(|a| Axis {
                param: a.param,
                start: a.start * angle_scale(a.param),
                stop: a.stop * angle_scale(a.param),
                count: a.count,
            })
            .collect(),
        fixed: FixedParams {
            p2: args.p2,
            chi: args.chi * to_rad,
            alpha: args.alpha * to_rad,
            theta: args.theta * to_rad,
            phi: args.phi * to_rad,
            delta: args.delta * to_rad,
        },
        sign: args.sign.into(),
    };
    let rows = spec.evaluate()?;
    let mut out = BufWriter::new(File::create(&args.out)?);
    match args.format {
        FormatArg::Csv => output::write_csv(&mut out, &rows)?,
        FormatArg::Json => output::write_json(&mut out, &rows)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    if args.samples < 1 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let tol = match args.tol {
        Some(tol) => tol,
        None => match std::env::var(TOL_ENV) {
            Ok(text) => text
                .parse()
                .map_err(|e| CliError::Usage(format!("{TOL_ENV}: {e}")))?,
            Err(_) => biqubit_core::ALGEBRAIC_TOL,
        },
    };
    if tol.is_nan() || tol <= 0.0 || tol.is_infinite() {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let report = verify::run(&VerifyConfig {
        samples: args.samples,
        seed: args.seed,
        tol,
    });
    let mut out = std::io::stdout().lock();
    match args.format {
        ReportFormatArg::Text => output::print_report_text(&mut out, &report)?,
        ReportFormatArg::Json => output::print_report_json(&mut out, &report)?,
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_compare(args: &CompareArgs, to_rad: f64) -> Result<ExitCode, CliError> {
    let chi = args.chi * to_rad;
    let frame = BasisFrame::new(chi, 0.0)?;
    let probe = PairAmplitudes::new(args.p2, 0.0, CorrelationSign::Minus)?;
    let params = RatioParams::from_pair_frame(&probe, &frame);
    let (v_plus_closed, v_minus_closed) = pair_visibilities(&params);

    let sweep = |sign: CorrelationSign, pick: fn(&JointProbabilities) -> f64| {
        empirical_visibility(
            |alpha| {
                let pair =
                    PairAmplitudes::new(args.p2, alpha, sign).expect("weight validated above");
                pick(&joint_born(&expand_pair(&pair), &frame, &frame))
            },
            args.grid_points,
        )
    };
    let minus_plus_emp = sweep(CorrelationSign::Minus, JointProbabilities::plus_total)?;
    let minus_minus_emp = sweep(CorrelationSign::Minus, JointProbabilities::minus_total)?;
    let plus_plus_emp = sweep(CorrelationSign::Plus, JointProbabilities::plus_total)?;
    let plus_minus_emp = sweep(CorrelationSign::Plus, JointProbabilities::minus_total)?;

    let visibility_swap_dev = (plus_plus_emp - v_minus_closed)
        .abs()
        .max((plus_minus_emp - v_plus_closed).abs());

    // role swap of the joint distributions under α ↦ α + π, at zero frame azimuth
    let mut probability_swap_dev: f64 = 0.0;
    for k in 0..args.grid_points {
        let alpha = TAU * k as f64 / args.grid_points as f64;
        let plus = joint_born(
            &expand_pair(&PairAmplitudes::new(args.p2, alpha, CorrelationSign::Plus)?),
            &frame,
            &frame,
        );
        let minus = joint_born(
            &expand_pair(&PairAmplitudes::new(
                args.p2,
                alpha + PI,
                CorrelationSign::Minus,
            )?),
            &frame,
            &frame,
        );
        probability_swap_dev = probability_swap_dev
            .max((plus.p_ee - minus.p_eb).abs())
            .max((plus.p_bb - minus.p_be).abs())
            .max((plus.p_eb - minus.p_ee).abs())
            .max((plus.p_be - minus.p_bb).abs());
    }

    let mut out = std::io::stdout().lock();
    output::print_field(&mut out, "epsilon", params.epsilon())?;
    output::print_field(&mut out, "sigma", params.sigma())?;
    output::print_field(&mut out, "minus_v_plus_closed", v_plus_closed)?;
    output::print_field(&mut out, "minus_v_minus_closed", v_minus_closed)?;
    output::print_field(&mut out, "minus_v_plus_empirical", minus_plus_emp)?;
    output::print_field(&mut out, "minus_v_minus_empirical", minus_minus_emp)?;
    output::print_field(&mut out, "plus_v_plus_empirical", plus_plus_emp)?;
    output::print_field(&mut out, "plus_v_minus_empirical", plus_minus_emp)?;
    output::print_field(&mut out, "visibility_swap_dev", visibility_swap_dev)?;
    output::print_field(&mut out, "probability_swap_dev", probability_swap_dev)?;
    Ok(ExitCode::SUCCESS)
}
