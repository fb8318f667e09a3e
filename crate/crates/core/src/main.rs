use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use jordan_lab::groupfile;
use jordan_lab::jordan;
use jordan_lab::report::{self, Format, VerificationReport};
use jordan_lab::suite::{self, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "jordan-lab", version, about = "Exact checks of Jordan-constant computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    emit: Format,
    /// Largest group the closure may build.
    #[arg(long, default_value_t = jordan_lab::group::DEFAULT_CAP, global = true)]
    cap: usize,
    /// Run independent checks on several threads.
    #[arg(long, global = true)]
    parallel: bool,
    /// Include wall-clock times in the rows.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a named claim.
    Verify {
        #[command(subcommand)]
        claim: VerifyClaim,
    },
    /// List boundary cycles on del Pezzo surfaces of the given degree.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(i32).range(1..=8))]
        degree: i32,
    },
    /// Invariant lines of subgroups of S5 on the quintic del Pezzo surface.
    Dp5 {
        #[command(subcommand)]
        action: Dp5Action,
    },
    /// Random abelian actions on conic-bundle fibers.
    Conic {
        #[command(subcommand)]
        action: ConicAction,
    },
    /// Jordan index of a group read from a JSON definition.
    Jordan { groupfile: PathBuf },
    /// Run a suite: lemma52, symmetry, dp5, conic, constants or all.
    Report {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyClaim {
    Lemma52 {
        #[arg(long = "n", value_delimiter = ',', default_values_t = [5u32, 7, 11])]
        moduli: Vec<u32>,
        /// Accept moduli sharing a factor with 6 and report them as informational.
        #[arg(long)]
        allow_bad_n: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Dp5Action {
    Check,
}

#[derive(Subcommand, Debug)]
enum ConicAction {
    Simulate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = SuiteOptions {
        cap: cli.cap,
        parallel: cli.parallel,
        timings: cli.timings,
        ..SuiteOptions::default()
    };

    let rows: Vec<VerificationReport> = match cli.command {
        Command::Verify {
            claim: VerifyClaim::Lemma52 { moduli, allow_bad_n },
        } => {
            if let Some(bad) = moduli.iter().find(|&&n| n < 2 || (!allow_bad_n && num_integer::gcd(n, 6) != 1)) {
                eprintln!("error: n = {bad} shares a factor with 6 (pass --allow-bad-n to record it anyway)");
                return ExitCode::from(2);
            }
            opts.moduli = moduli;
            suite::lemma52_suite(&opts)
                .into_iter()
                .filter(|r| !r.claim_id.starts_with("lemma52.det"))
                .collect()
        }
        Command::Enumerate { degree } => {
            return match suite::enumeration_rows(degree) {
                Ok(rows) => {
                    print!("{}", enumeration_output(&rows, cli.emit));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
        Command::Dp5 { action: Dp5Action::Check } => suite::dp5_rows(),
        Command::Conic {
            action: ConicAction::Simulate { seed, trials },
        } => {
            opts.seed = seed;
            opts.trials = trials;
            suite::conic_suite(&opts)
        }
        Command::Jordan { groupfile: path } => vec![jordan_row(&path, cli.cap)],
        Command::Report { suite: name } => match suite::run_suite(&name, &opts) {
            Ok(rows) => rows,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };

    let rows: Vec<VerificationReport> = rows
        .into_iter()
        .map(|mut r| {
            if !cli.timings {
                r.wall_time_ms = None;
            }
            r
        })
        .collect();
    print!("{}", report::emit(&rows, cli.emit));
    ExitCode::from(report::exit_code(&rows) as u8)
}

fn jordan_row(path: &PathBuf, cap: usize) -> VerificationReport {
    let claim = format!(
        "jordan.{}",
        path.file_stem().map_or_else(|| "group".into(), |s| s.to_string_lossy())
    );
    let anchor = "least index of an abelian normal subgroup";
    let result = std::fs::read_to_string(path)
        .map_err(|e| jordan_lab::Error::GroupDefinition(format!("{}: {e}", path.display())))
        .and_then(|text| groupfile::load(&text, cap))
        .and_then(|g| jordan::summarize(&g, cap));
    match result {
        Ok(summary) => VerificationReport::informational(
            claim,
            anchor,
            serde_json::to_value(summary).expect("summary serializes"),
        ),
        Err(e) => VerificationReport::error(claim, anchor, &e),
    }
}

fn enumeration_output(rows: &[serde_json::Value], format: Format) -> String {
    match format {
        Format::Json => report::to_canonical_json(&json!(rows)),
        Format::Md => {
            let mut out = String::from("| labels | genus | K2 | symmetry | witness |\n|---|---|---|---|---|\n");
            for r in rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} ({}) | {} |\n",
                    r["labels"], r["genus"], r["K2"], r["symmetry_order"], r["symmetry_kind"], r["witness_word"]
                ));
            }
            out
        }
    }
}
