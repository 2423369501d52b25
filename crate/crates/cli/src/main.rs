//! `qdeform`: normal forms, representation matrices and verification
//! reports for the q-deformed fermionic quantum space.
//!
//! Exit codes: 0 success, 1 a relation failed, 2 parse error, 3 config or
//! context error.

mod config;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::RunConfig;

#[derive(Parser, Debug)]
#[command(name = "qdeform", version, about = "Exact checks for the q-deformed fermionic quantum space")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Number of fermionic coordinates [default: 2]
    #[arg(long, global = true)]
    n: Option<usize>,
    /// one-param or two-param (two-param needs n = 2) [default: one-param]
    #[arg(long, global = true)]
    mode: Option<String>,
    /// Sample points for randomized checks [default: 20]
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Seed for randomized checks [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the JSON report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// File of key=value settings; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression
    Nf { expr: String },
    /// Print a generator (T12, H1, D, th1, d2, ...) or expression as a JSON matrix
    Matrix { target: String },
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Gl,
    Igl,
    Castellani,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Map family: A, B or duality [default: B]
    #[arg(long)]
    family: Option<String>,
    /// Family A parameter a (rational or "symbolic") [default: symbolic]
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Family A parameter c (rational or "symbolic") [default: symbolic]
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Family B parameter; solved from the constraint when omitted
    #[arg(long, allow_hyphen_values = true)]
    palpha: Option<String>,
    /// Family B parameter [default: 0]
    #[arg(long, allow_hyphen_values = true)]
    pbeta: Option<String>,
    /// Family A sign convention for x and y: printed or corrected [default: printed]
    #[arg(long)]
    signs: Option<String>,
}

fn resolve(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    let g = &cli.global;
    if let Some(path) = &g.config {
        cfg.load_file(path)?;
    }
    if let Some(n) = g.n {
        cfg.n = n;
    }
    if let Some(m) = &g.mode {
        cfg.set("mode", m)?;
    }
    if let Some(t) = g.trials {
        cfg.trials = t;
    }
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(o) = &g.out {
        cfg.out = Some(o.clone());
    }
    if let Command::Verify(v) = &cli.command {
        for (key, val) in [
            ("family", &v.family),
            ("a", &v.a),
            ("c", &v.c),
            ("palpha", &v.palpha),
            ("pbeta", &v.pbeta),
            ("signs", &v.signs),
        ] {
            if let Some(val) = val {
                cfg.set(key, val)?;
            }
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match resolve(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(run::EXIT_CONFIG);
        }
    };
    let outcome = match &cli.command {
        Command::Nf { expr } => run::nf(expr, &cfg),
        Command::Matrix { target } => run::matrix(target, &cfg),
        Command::Verify(v) => match v.suite {
            Suite::Gl => run::verify_gl(&cfg, false),
            Suite::Igl => run::verify_gl(&cfg, true),
            Suite::Castellani => run::verify_castellani(&cfg),
        },
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
