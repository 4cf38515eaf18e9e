use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use canmap::dsl::{execute, parse_script, Options};
use canmap::exec::DEFAULT_BUDGET;
use canmap::selftest::selftest;
use canmap::Strategy;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "canmap", version, about = "Canonical maps of finite sets")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file, or standard input when FILE is `-` or omitted.
    Run {
        file: Option<PathBuf>,
        /// Emit one JSON record per command instead of text blocks.
        #[arg(long)]
        json: bool,
        /// Candidate budget for exhaustive enumeration.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        strategy: Mode,
    },
    /// Run the exhaustive invariant suites on all objects up to a size.
    Selftest {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=5))]
        max_size: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Sequential,
    Parallel,
}

impl From<Mode> for Strategy {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Auto => Strategy::Auto,
            Mode::Sequential => Strategy::Sequential,
            Mode::Parallel => Strategy::Parallel,
        }
    }
}

fn read_input(file: Option<PathBuf>) -> io::Result<String> {
    match file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(file: Option<PathBuf>, json: bool, budget: u128, strategy: Strategy) -> ExitCode {
    let text = match read_input(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("canmap: cannot read script: {e}");
            return ExitCode::from(2);
        }
    };
    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("canmap: {e}");
            return ExitCode::from(2);
        }
    };
    let reports = match execute(&script, &Options { budget, strategy }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("canmap: {e}");
            return ExitCode::from(2);
        }
    };
    let mut out = io::stdout().lock();
    let mut failed = false;
    for (i, r) in reports.iter().enumerate() {
        let written = if json {
            writeln!(out, "{}", r.to_json())
        } else {
            let sep = if i > 0 { "\n" } else { "" };
            write!(out, "{sep}{}", r.to_text())
        };
        if written.is_err() {
            return ExitCode::from(1);
        }
        for d in &r.diagnostics {
            eprintln!("canmap: {d}");
        }
        failed |= !r.ok();
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run {
            file,
            json,
            budget,
            strategy,
        } => run(file, json, budget, strategy.into()),
        Cmd::Selftest { max_size } => match selftest(max_size as usize) {
            Ok(summary) => {
                print!("{}", summary.render());
                if summary.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("canmap: {e}");
                ExitCode::from(2)
            }
        },
    }
}
