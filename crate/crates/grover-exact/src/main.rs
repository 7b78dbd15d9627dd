use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use grover_exact::grover::{ExactnessVerdict, InstanceParams};
use grover_exact::simulator::{run as simulate, SearchSpec};
use grover_exact::survey::{cross_validate, emit_report, survey_range, ReportFormat};
use grover_exact::{chebyshev_like, decide_rational_angle, NivenVerdict, Rational};

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "grover-exact",
    version,
    about = "Exactness analysis of the original Grover search algorithm"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a (targets, size) instance for exactness
    Classify(ClassifyArgs),
    /// Run the statevector simulator
    Simulate(SimulateArgs),
    /// Survey all instances up to a size bound and cross-validate
    Survey(SurveyArgs),
    /// Print the integer polynomial f_n with f_n(2cos φ) = 2cos(nφ)
    Chebyshev(ChebyshevArgs),
    /// Decide whether arccos of a rational is a rational multiple of π
    Niven(NivenArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Number of targets t
    #[arg(long)]
    targets: u64,
    /// Database size N
    #[arg(long)]
    size: u64,
    /// Output format: plain or json
    #[arg(long, default_value = "plain")]
    format: String,
}

#[derive(Args)]
struct SimulateArgs {
    /// Database size N
    #[arg(long)]
    size: u64,
    /// Comma-separated 1-based target indices, e.g. 1,3
    #[arg(long, default_value = "")]
    targets: String,
    /// Number of Grover iterations
    #[arg(long)]
    iterations: u64,
    /// Print per-step success probabilities
    #[arg(long)]
    trace: bool,
    /// Output format: plain, json, or csv
    #[arg(long, default_value = "plain")]
    format: String,
}

#[derive(Args)]
struct SurveyArgs {
    /// Largest database size to enumerate
    #[arg(long)]
    max_size: u64,
    /// Iteration bound for the exact hit search and the simulation
    #[arg(long, default_value_t = 8)]
    n_max: u64,
    /// Report format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write the report to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChebyshevArgs {
    /// Index n of the polynomial f_n
    #[arg(long)]
    degree: u64,
    /// Also evaluate f_n at this rational, written p/q or an integer
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<String>,
}

#[derive(Args)]
struct NivenArgs {
    /// Rational cosine value in [-1, 1], written p/q or an integer
    #[arg(long, allow_hyphen_values = true)]
    cos: String,
}

enum CliError {
    Usage(String),
    Io(String),
    Disagreement,
}

impl CliError {
    fn exit(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
            CliError::Io(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_IO)
            }
            CliError::Disagreement => ExitCode::from(EXIT_DISAGREEMENT),
        }
    }
}

fn usage(err: impl ToString) -> CliError {
    CliError::Usage(err.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Survey(args) => cmd_survey(args),
        Command::Chebyshev(args) => cmd_chebyshev(args),
        Command::Niven(args) => cmd_niven(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => err.exit(),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let params = InstanceParams::new(args.targets, args.size).map_err(usage)?;
    let verdict = params.classify_exactness();
    let cos = params.cos_two_theta();
    match args.format.as_str() {
        "plain" => {
            println!("N = {}, t = {}", args.size, args.targets);
            println!("cos(2θ) = {cos}");
            println!("verdict: {verdict}");
            match &verdict {
                ExactnessVerdict::Exact { iterations } => println!("iterations: {iterations}"),
                ExactnessVerdict::TrivialAllTargets => println!("iterations: 0"),
                ExactnessVerdict::NeverExactThreeQuarters { post_measurement_prob } => {
                    println!("post-measurement success probability: {post_measurement_prob}")
                }
                _ => {}
            }
        }
        "json" => {
            let doc = json!({
                "N": args.size,
                "t": args.targets,
                "cos2theta": format!("{}/{}", cos.numer(), cos.denom()),
                "verdict": verdict.to_string(),
                "verdict_class": verdict.class_name(),
                "iterations": verdict.exact_iterations(),
                "post_measurement_prob": match &verdict {
                    ExactnessVerdict::NeverExactThreeQuarters { post_measurement_prob } => {
                        Some(post_measurement_prob.to_string())
                    }
                    _ => None,
                },
            });
            println!("{doc}");
        }
        other => return Err(CliError::Usage(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn parse_targets(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid target index `{s}` (indices are 1-based)")))
        })
        .collect()
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let targets = parse_targets(&args.targets)?;
    let spec = SearchSpec::new(args.size as usize, targets).map_err(usage)?;
    let (state, trace) = simulate(&spec, args.iterations, true).map_err(usage)?;
    let trace = trace.expect("trace requested");
    let final_p = trace.steps.last().expect("step 0 always present").success_probability;
    match args.format.as_str() {
        "plain" => {
            if args.trace {
                for step in trace.steps.iter().skip(1) {
                    println!("step {}: success probability {:.10}", step.step, step.success_probability);
                }
            }
            println!("success probability after {} iterations: {final_p:.10}", args.iterations);
        }
        "json" => {
            let steps: Vec<_> = trace
                .steps
                .iter()
                .map(|s| json!({"n": s.step, "success_probability": s.success_probability}))
                .collect();
            let doc = json!({
                "size": args.size,
                "targets": spec.targets().iter().copied().collect::<Vec<_>>(),
                "iterations": args.iterations,
                "success_probability": final_p,
                "trace": if args.trace { Some(steps) } else { None },
            });
            println!("{doc}");
        }
        "csv" => {
            println!("n,success_probability");
            if args.trace {
                for step in trace.steps.iter().skip(1) {
                    println!("{},{:?}", step.step, step.success_probability);
                }
            } else {
                println!("{},{final_p:?}", args.iterations);
            }
        }
        other => return Err(CliError::Usage(format!("unknown format `{other}`"))),
    }
    let _ = state;
    Ok(())
}

fn cmd_survey(args: SurveyArgs) -> Result<(), CliError> {
    if args.max_size == 0 {
        return Err(CliError::Usage("max-size must be at least 1".into()));
    }
    if args.n_max == 0 {
        return Err(CliError::Usage("n-max must be at least 1".into()));
    }
    let format = ReportFormat::from_str(&args.format).map_err(usage)?;
    let records = survey_range(args.max_size, args.n_max);
    let summary = cross_validate(&records);
    let exact_count = summary.verdict_counts.get("Exact").copied().unwrap_or(0);
    let report = emit_report(&records, format);
    let summary_line = format!(
        "instances: {}, exact: {}, disagreements: {}",
        summary.total,
        exact_count,
        summary.disagreements.len()
    );
    match &args.out {
        Some(path) => {
            std::fs::write(path, report)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            println!("{summary_line}");
        }
        None => {
            print!("{report}");
            eprintln!("{summary_line}");
        }
    }
    if summary.disagreements.is_empty() {
        Ok(())
    } else {
        Err(CliError::Disagreement)
    }
}

fn cmd_chebyshev(args: ChebyshevArgs) -> Result<(), CliError> {
    let poly = chebyshev_like(args.degree);
    let mut coeffs = String::new();
    for (i, c) in poly.coefficients().iter().enumerate() {
        if i > 0 {
            coeffs.push_str(", ");
        }
        let _ = write!(coeffs, "{c}");
    }
    println!("f_{} coefficients (low to high): [{coeffs}]", args.degree);
    if let Some(text) = &args.eval {
        let x = Rational::from_str(text).map_err(usage)?;
        println!("f_{}({x}) = {}", args.degree, poly.eval(&x));
    }
    Ok(())
}

fn cmd_niven(args: NivenArgs) -> Result<(), CliError> {
    let cos = Rational::from_str(&args.cos).map_err(usage)?;
    match decide_rational_angle(&cos).map_err(usage)? {
        NivenVerdict::RationalAngle(r) => println!("rational angle: r = {r} (angle = {r} · π)"),
        NivenVerdict::IrrationalAngle => println!("irrational angle"),
    }
    Ok(())
}
