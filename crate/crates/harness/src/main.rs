use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use exactcore::Q;
use fock::Case;
use harness::commands::{self, DumpKind, RepKind, Series};
use harness::{default_mu, Config, HarnessError, Suite};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "xyverify", about = "Exact checks for twisted Yangian realizations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value = "orth", value_parser = parse_case)]
    case: Case,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    l: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and print a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "K", default_value_t = 12)]
        k: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_q)]
        mu: Option<Vec<Q>>,
        #[arg(long = "suite", value_enum, value_delimiter = ',')]
        suites: Vec<Suite>,
        /// Perturb one entry of every checked realization by u^{-1} times a matrix unit.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Composite normalized intertwiner along a word.
    Intertwiner {
        #[arg(long, default_value = "orth", value_parser = parse_case)]
        case: Case,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_q, required = true)]
        mu: Vec<Q>,
        #[arg(long, value_delimiter = ',', value_parser = parse_q)]
        lambda: Option<Vec<Q>>,
        #[arg(long, value_delimiter = ',')]
        nu: Option<Vec<i64>>,
        /// Treat the given labels as already shifted by rho.
        #[arg(long)]
        shifted: bool,
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
    },
    /// Compare both constructions of gamma_l with the twisted beta_m.
    Olshanski {
        #[command(flatten)]
        common: Common,
    },
    /// Laurent coefficients of a scalar or operator series.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        what: Series,
        #[arg(long, value_enum, default_value = "trivial")]
        rep: RepKind,
        #[arg(long = "K", default_value_t = 4)]
        k: usize,
    },
    /// Serialize structure constants or a realization.
    Dump {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        what: DumpKind,
        #[arg(long, value_delimiter = ',', value_parser = parse_q)]
        mu: Option<Vec<Q>>,
        #[arg(long, value_delimiter = ',')]
        nu: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
    },
}

fn parse_case(s: &str) -> Result<Case, String> {
    s.parse().map_err(|e: fock::FockError| e.to_string())
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.trim().parse().map_err(|_| format!("not a rational number: {s}"))
}

fn emit(v: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.cmd {
        Cmd::Verify { common, k, mu, suites, inject_fault } => {
            let mut cfg = Config::new(common.case, common.m, common.n);
            cfg.l = common.l;
            cfg.k = k;
            cfg.mu = mu.unwrap_or_else(|| default_mu(common.m));
            if !suites.is_empty() {
                cfg.suites = suites;
            }
            cfg.fault = inject_fault;
            let report = harness::run(&cfg)?;
            for c in report.failing() {
                eprintln!("FAIL {:?} {} [{}] {}", c.suite, c.name, c.anchor, c.detail);
            }
            emit(&serde_json::to_value(&report).expect("serializable report")).map_err(|e| HarnessError::Compute(e.to_string()))?;
            Ok(report.pass)
        }
        Cmd::Intertwiner { case, n, mu, lambda, nu, shifted, word } => {
            let (v, pass) = commands::intertwiner(&commands::IntertwinerArgs { case, n, mu, lambda, nu, shifted, word })?;
            emit(&v).map_err(|e| HarnessError::Compute(e.to_string()))?;
            Ok(pass)
        }
        Cmd::Olshanski { common } => {
            let (v, pass) = commands::olshanski(common.case, common.m, common.n, common.l)?;
            emit(&v).map_err(|e| HarnessError::Compute(e.to_string()))?;
            Ok(pass)
        }
        Cmd::Expand { common, what, rep, k } => {
            let v = commands::expand(&commands::ExpandArgs { what, case: common.case, m: common.m, n: common.n, l: common.l, rep, k })?;
            emit(&v).map_err(|e| HarnessError::Compute(e.to_string()))?;
            Ok(true)
        }
        Cmd::Dump { common, what, mu, nu, word } => {
            let mu = mu.unwrap_or_else(|| default_mu(common.m));
            let nu = nu.unwrap_or_else(|| vec![0; mu.len()]);
            let v = commands::dump(&commands::DumpArgs { what, case: common.case, m: common.m, n: common.n, l: common.l, mu, nu, word })?;
            emit(&v).map_err(|e| HarnessError::Compute(e.to_string()))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
