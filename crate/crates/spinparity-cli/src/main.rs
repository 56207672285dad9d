//! Command-line frontend: every library operation behind conventional
//! subcommands, with plain, JSON, and CSV output.
//!
//! Exit codes: 0 = success / verification PASS, 1 = verification FAIL
//! (counterexamples found), 2 = usage, validation, or capacity error.
//! Results go to stdout, diagnostics to stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use spinparity::{
    default_workers, f_k, f_k_naive, jacobi, n_count, n_k_jacobi, spin_parity_class,
    sweep_conjecture, sweep_identity, sweep_laws, Error, Genus, NPolicy, OddModulus,
    PairCountMethod, Signature, SweepConfig, SweepReport, Verdict,
};

#[derive(Parser)]
#[command(name = "spinparity", version, about = "Jacobi symbols, floor-sum pair counts, spin parity of stratum signatures, and exhaustive verification sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi symbol (a/k) for odd positive k
    Jacobi {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        k: i64,
    },
    /// Floor sum F_k(a) = sum_{i=1}^{(k-1)/2} floor((a*i + (k-1)/2)/k)
    Fk {
        k: i64,
        #[arg(allow_negative_numbers = true)]
        a: i64,
        /// Sum term by term instead of using the logarithmic fast path
        #[arg(long)]
        naive: bool,
    },
    /// Pair count N_k(n)
    Nk {
        k: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Identity)]
        method: MethodArg,
    },
    /// Spin parity class of a stratum signature
    Spin {
        /// Genus of the underlying surface: 0 or 1
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        k: i64,
        /// Comma-separated order tuple, e.g. 6,2,-38
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Rotation number d; required exactly when the genus is 1
        #[arg(long, allow_negative_numbers = true)]
        rotation: Option<i64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Verification sweeps over ranges of odd k
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads (default: SPINPARITY_JOBS, else available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check N_k(n) = floor((k+1)/4) (mod 2) over the coprime-filtered n range
    Conjecture {
        #[arg(long)]
        k_min: i64,
        #[arg(long)]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Identity)]
        method: MethodArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the brute-force pair count against F_k(n+1) - F_k(n) for every
    /// n in [0, n_max], with no coprimality filter
    Identity {
        #[arg(long)]
        k_min: i64,
        #[arg(long)]
        k_max: i64,
        #[arg(long)]
        n_max: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the Eisenstein, Gauss-Schering, and supplementary laws against
    /// the binary algorithm
    Laws {
        #[arg(long)]
        k_max: i64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Linear,
    Identity,
}

impl From<MethodArg> for PairCountMethod {
    fn from(arg: MethodArg) -> Self {
        match arg {
            MethodArg::Brute => PairCountMethod::BrutePairs,
            MethodArg::Linear => PairCountMethod::LinearScan,
            MethodArg::Identity => PairCountMethod::FloorIdentity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Csv,
}

/// JSON envelope for `verify` output; round-trips losslessly.
#[derive(Serialize, Deserialize)]
struct VerifyOutput {
    verify: String,
    report: SweepReport,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Jacobi { a, k } => {
            let k = OddModulus::new(k)?;
            println!("{}", jacobi(a, k));
            Ok(ExitCode::SUCCESS)
        }
        Command::Fk { k, a, naive } => {
            let k = OddModulus::new(k)?;
            let value = if naive { f_k_naive(a, k)? } else { f_k(a, k)? };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Nk { k, n, method } => {
            let k = OddModulus::new(k)?;
            println!("{}", n_count(n, k, method.into())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Spin {
            genus,
            k,
            mu,
            rotation,
            format,
        } => {
            let genus = match genus {
                0 => Genus::Zero,
                1 => Genus::One,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "genus must be 0 or 1, got {other}"
                    )))
                }
            };
            let sig = Signature::new(OddModulus::new(k)?, parse_mu(&mu)?, genus, rotation)?;
            print!("{}", render_spin(&sig, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(verify) => {
            let (kind, report, format) = match verify {
                VerifyCommand::Conjecture {
                    k_min,
                    k_max,
                    method,
                    run,
                } => {
                    let cfg = SweepConfig {
                        k_min,
                        k_max,
                        n_policy: NPolicy::CoprimePairs,
                        method: method.into(),
                        workers: run.jobs.unwrap_or_else(default_workers),
                    };
                    ("conjecture", sweep_conjecture(&cfg)?, run.format)
                }
                VerifyCommand::Identity {
                    k_min,
                    k_max,
                    n_max,
                    run,
                } => {
                    let cfg = SweepConfig {
                        k_min,
                        k_max,
                        n_policy: NPolicy::AllN { n_max },
                        method: PairCountMethod::FloorIdentity,
                        workers: run.jobs.unwrap_or_else(default_workers),
                    };
                    ("identity", sweep_identity(&cfg)?, run.format)
                }
                VerifyCommand::Laws { k_max, run } => (
                    "laws",
                    sweep_laws(k_max, run.jobs.unwrap_or_else(default_workers))?,
                    run.format,
                ),
            };
            print!("{}", render_report(kind, &report, format));
            Ok(ExitCode::from(verdict_exit(&report)))
        }
    }
}

fn parse_mu(raw: &str) -> Result<Vec<i64>, Error> {
    raw.split(',')
        .map(|token| {
            token.trim().parse::<i64>().map_err(|_| {
                Error::InvalidArgument(format!("mu entry {token:?} is not an integer"))
            })
        })
        .collect()
}

fn verdict_exit(report: &SweepReport) -> u8 {
    match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
    }
}

fn method_token(method: PairCountMethod) -> &'static str {
    match method {
        PairCountMethod::BrutePairs => "brute",
        PairCountMethod::LinearScan => "linear",
        PairCountMethod::FloorIdentity => "identity",
    }
}

fn render_spin(sig: &Signature, format: FormatArg) -> String {
    let n_k = n_k_jacobi(sig);
    let class = spin_parity_class(sig);
    match format {
        FormatArg::Plain => format!("n_k: {n_k}\nparity_class: {class}\n"),
        FormatArg::Json => {
            let value = serde_json::json!({
                "k": sig.k().get(),
                "genus": sig.genus().value(),
                "mu": sig.entries(),
                "rotation": sig.rotation(),
                "n_k": n_k,
                "parity_class": class,
            });
            format!("{:#}\n", value)
        }
        FormatArg::Csv => {
            let mu = sig
                .entries()
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let rotation = sig.rotation().map_or(String::new(), |d| d.to_string());
            format!(
                "k,genus,mu,rotation,n_k,parity_class\n{},{},\"{}\",{},{},{}\n",
                sig.k().get(),
                sig.genus().value(),
                mu,
                rotation,
                n_k,
                class
            )
        }
    }
}

fn render_report(kind: &str, report: &SweepReport, format: FormatArg) -> String {
    match format {
        FormatArg::Plain => {
            let mut out = String::new();
            out.push_str(&format!("verify: {kind}\n"));
            out.push_str(&format!("k_min: {}\n", report.config.k_min));
            out.push_str(&format!("k_max: {}\n", report.config.k_max));
            match report.config.n_policy {
                NPolicy::AllN { n_max } => out.push_str(&format!("n_max: {n_max}\n")),
                NPolicy::CoprimePairs => {}
            }
            if kind == "conjecture" {
                out.push_str(&format!("method: {}\n", method_token(report.config.method)));
            }
            out.push_str(&format!("checks_run: {}\n", report.checks_run));
            for c in &report.counterexamples {
                out.push_str(&format!(
                    "counterexample: check={} k={} n={} observed={} expected={}\n",
                    c.check, c.k, c.n, c.observed, c.expected
                ));
            }
            out.push_str(&format!(
                "counterexamples: {}\n",
                report.counterexamples.len()
            ));
            out.push_str(&format!("verdict: {}\n", report.verdict));
            out.push_str(&format!("elapsed_ms: {}\n", report.elapsed_ms));
            out
        }
        FormatArg::Json => {
            let output = VerifyOutput {
                verify: kind.to_string(),
                report: report.clone(),
            };
            format!(
                "{}\n",
                serde_json::to_string_pretty(&output).expect("report serialization is infallible")
            )
        }
        FormatArg::Csv => {
            let mut out = String::from("check,k,n,observed,expected\n");
            for c in &report.counterexamples {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.check, c.k, c.n, c.observed, c.expected
                ));
            }
            out
        }
    }
}
