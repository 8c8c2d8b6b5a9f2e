//! `schubert` — Hilbert functions of tangent cones and multiplicities of
//! T-fixed points of Schubert varieties in Grassmannians, with cross-checked
//! independent methods.
//!
//! Exit codes: 0 success/agreement, 2 methods or checks disagree, 3 invalid
//! input, 4 resource limit exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use schubert_cli::{
    compute_conjectures, compute_groebner, compute_hilbert, compute_mult, parse_element,
    parse_shape, CliError, Limits, Method, EXIT_DISAGREE,
};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Tangent cones and multiplicities of Schubert varieties in Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Subspace dimension d of the Grassmannian G(d,n)
    #[arg(short = 'd', long = "dim")]
    d: usize,
    /// Ambient dimension n
    #[arg(short = 'n', long = "ambient")]
    n: usize,
    /// Emit JSON instead of the human table
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of the human table
    #[arg(long)]
    csv: bool,
    /// Write output to a file instead of stdout
    #[arg(short = 'o', long = "output")]
    output: Option<std::path::PathBuf>,
    /// Worker threads for independent computations
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cap on truncation/Hilbert degrees
    #[arg(long, default_value_t = 12)]
    max_degree: usize,
    /// Cap on the lattice size |I(d,n)| for enumerating commands
    #[arg(long, default_value_t = 400)]
    max_lattice: u128,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_degree: self.max_degree,
            max_lattice: self.max_lattice,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of the tangent cone at the identity, by several
    /// methods, with an agreement check
    Hilbert {
        #[command(flatten)]
        common: CommonArgs,
        /// Schubert index, e.g. -w 2,4
        #[arg(short = 'w')]
        w: String,
        /// Largest degree to tabulate
        #[arg(short = 'm', long = "m-max", default_value_t = 6)]
        m_max: usize,
        /// Comma-separated subset of: multiset, standard-monomial,
        /// initial-ideal, recursion
        #[arg(long)]
        methods: Option<String>,
    },
    /// Multiplicity at the identity via layered counting, cross-checked
    /// against the square-free quotient degree when feasible
    Mult {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(short = 'w')]
        w: String,
    },
    /// Verify that the defining minors form a Gröbner basis
    GroebnerCheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Check a single element (omit with --all for the whole lattice)
        #[arg(short = 'w', conflicts_with = "all")]
        w: Option<String>,
        /// Check every element of I(d,n)
        #[arg(long)]
        all: bool,
    },
    /// Compare the translated multiset counts against the local-algebra
    /// tangent-cone oracle at a T-fixed point
    Conjecture {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(short = 'w', requires = "tau", conflicts_with = "all_pairs")]
        w: Option<String>,
        /// T-fixed point, must be <= w
        #[arg(short = 't', long = "tau")]
        tau: Option<String>,
        /// Check every pair tau <= w in I(d,n)
        #[arg(long)]
        all_pairs: bool,
        /// Truncation degree for the oracle
        #[arg(short = 'j', long = "j-max", default_value_t = 3)]
        j_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn log_enabled() -> bool {
    std::env::var("SCHUBERT_LOG").is_ok_and(|v| !v.is_empty())
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            std::io::stdout()
                .flush()
                .map_err(|e| CliError::InvalidInput(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Hilbert {
            common,
            w,
            m_max,
            methods,
        } => {
            let shape = parse_shape(common.d, common.n)?;
            let w = parse_element(shape, &w)?;
            let methods = match &methods {
                Some(list) => Method::parse_list(list)?,
                None => Method::ALL.to_vec(),
            };
            let report = compute_hilbert(&w, m_max, &methods, &common.limits(), common.jobs)?;
            let text = if common.json {
                report.render_json()
            } else if common.csv {
                report.render_csv()
            } else {
                report.render_human()
            };
            emit(&common, &text)?;
            if log_enabled() {
                eprint!("{}", report.timing_lines());
            }
            Ok(if report.agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREE as u8)
            })
        }
        Command::Mult { common, w } => {
            let shape = parse_shape(common.d, common.n)?;
            let w = parse_element(shape, &w)?;
            let report = compute_mult(&w, &common.limits())?;
            let text = if common.json {
                report.render_json()
            } else if common.csv {
                report.render_csv()
            } else {
                report.render_human()
            };
            emit(&common, &text)?;
            Ok(if report.agrees() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREE as u8)
            })
        }
        Command::GroebnerCheck { common, w, all } => {
            let shape = parse_shape(common.d, common.n)?;
            let target = match (w, all) {
                (Some(text), false) => Some(parse_element(shape, &text)?),
                (None, true) => None,
                (None, false) => {
                    return Err(CliError::InvalidInput("pass -w <element> or --all".into()))
                }
                (Some(_), true) => unreachable!("clap conflict"),
            };
            let report = compute_groebner(shape, target, &common.limits(), common.jobs)?;
            let text = if common.json {
                report.render_json()
            } else if common.csv {
                report.render_csv()
            } else {
                report.render_human()
            };
            emit(&common, &text)?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREE as u8)
            })
        }
        Command::Conjecture {
            common,
            w,
            tau,
            all_pairs,
            j_max,
        } => {
            let shape = parse_shape(common.d, common.n)?;
            let pair = match (w, tau, all_pairs) {
                (Some(wt), Some(tt), false) => {
                    Some((parse_element(shape, &wt)?, parse_element(shape, &tt)?))
                }
                (None, None, true) => None,
                _ => {
                    return Err(CliError::InvalidInput(
                        "pass -w <element> -t <element>, or --all-pairs".into(),
                    ))
                }
            };
            let batch = compute_conjectures(shape, pair, j_max, &common.limits(), common.jobs)?;
            let text = if common.json {
                batch.render_json()
            } else if common.csv {
                batch.render_csv()
            } else {
                batch.render_human()
            };
            emit(&common, &text)?;
            Ok(if batch.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREE as u8)
            })
        }
    }
}
