use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graft_moments::closed_forms::{cycle_theta, theta_holds};
use graft_moments::isomoment::{isomoment_family, WeightPair, DEFAULT_SAMPLES};
use graft_moments::json::{parse_weight_spec, product_to_json, read_graft_spec, read_graph};
use graft_moments::verify::{run, Formula, VerifyConfig};
use graft_moments::{graft, indices_with, Error, ExactReport, ExactSpec, ExactWeights};

const VERIFY_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const DOMAIN_ERROR: u8 = 3;

/// Weighted distance moments, graft products and their closed forms.
///
/// Exit status: 0 success, 1 verification failure, 2 input error,
/// 3 domain error (for example a disconnected graph).
#[derive(Parser)]
#[command(name = "graft-moments", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Moment under the given weights plus the derived indices.
    Indices {
        graph: PathBuf,
        /// unit, half, degree, const:<p>/<q> or file:<path>
        #[arg(long, default_value = "unit")]
        weights: String,
    },
    /// Build the product described by a graft spec file.
    Graft {
        spec: PathBuf,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a closed form against direct computation on random instances.
    Verify {
        /// theorem1, theorem41, sigma, flower, comparison, unicyclic, extcycles or propercycles
        formula: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, env = "GRAFT_MOMENTS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
    },
    /// Group all permutation graphs of two equal-order graphs by isomorphism
    /// and check that every class has the same moments.
    Isomoment {
        host: PathBuf,
        branch: PathBuf,
        /// A weight spec, or `<host>+<branch>`. Repeatable.
        #[arg(long, default_values = ["unit", "degree"])]
        weights: Vec<String>,
        #[arg(long, env = "GRAFT_MOMENTS_SEED", default_value_t = 0)]
        seed: u64,
        /// Permutations drawn when the order is too large to enumerate.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Check the row sums of cycle distance matrices for r = 1..=max-r.
    Theta {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        max_r: u64,
    },
}

fn emit(text: &str) -> Result<(), Error> {
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn weights_from(spec: &str) -> Result<ExactWeights, Error> {
    parse_weight_spec(spec, None)
}

fn execute(command: Command) -> Result<u8, Error> {
    match command {
        Command::Indices { graph, weights } => {
            let g = read_graph(&graph)?;
            let report: ExactReport = indices_with(&g, &weights_from(&weights)?)?;
            print_json(&report)?;
            Ok(0)
        }
        Command::Graft { spec, out } => {
            let spec: ExactSpec = read_graft_spec(&spec)?;
            let product = product_to_json(&graft(&spec)?)?;
            let text = serde_json::to_string_pretty(&product)? + "\n";
            match out {
                Some(path) => fs::write(path, text)?,
                None => emit(&text)?,
            }
            Ok(0)
        }
        Command::Verify { formula, count, seed, max_size } => {
            let formula: Formula = formula.parse()?;
            let report = run(formula, &VerifyConfig { count, seed, max_size })?;
            print_json(&report)?;
            eprintln!(
                "{formula}: {} instances, {} mismatches, {:.3}s",
                report.instances,
                report.mismatches.len(),
                report.elapsed.as_secs_f64()
            );
            Ok(if report.passed() { 0 } else { VERIFY_FAILED })
        }
        Command::Isomoment { host, branch, weights, seed, samples } => {
            let host = read_graph(&host)?;
            let branch = read_graph(&branch)?;
            let pairs = weights
                .iter()
                .map(|w| WeightPair::parse(w, None))
                .collect::<Result<Vec<_>, _>>()?;
            let report = isomoment_family(&host, &branch, &pairs, seed, samples)?;
            if !report.exhaustive {
                eprintln!(
                    "warning: order {} is too large to enumerate; sampled {} permutations",
                    report.r, report.permutations
                );
            }
            print_json(&report)?;
            Ok(if report.consistent { 0 } else { VERIFY_FAILED })
        }
        Command::Theta { max_r } => {
            let mut all = true;
            let mut table = String::from("r\ttheta\trow_sums\n");
            for r in 1..=max_r {
                let ok = theta_holds(r as usize)?;
                all &= ok;
                let status = if ok { "ok" } else { "MISMATCH" };
                table += &format!("{r}\t{}\t{status}\n", cycle_theta(r));
            }
            emit(&table)?;
            Ok(if all { 0 } else { VERIFY_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { INPUT_ERROR } else { DOMAIN_ERROR })
        }
    }
}
