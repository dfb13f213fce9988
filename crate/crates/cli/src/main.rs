use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use splitsteiner::Method;
use splitsteiner_cli::bench::{cmd_bench, default_methods};
use splitsteiner_cli::generate::{cmd_generate, GenKind, GenParams};
use splitsteiner_cli::solve::{cmd_solve, SolveArgs};
use splitsteiner_cli::verify::cmd_verify;
use splitsteiner_cli::{Outcome, EXIT_ERROR};

/// Minimum Steiner sets on split graphs with convex structures.
#[derive(Parser)]
#[command(name = "splitsteiner", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Solve an instance file. Exit code 1 means the budget cannot be met.
    Solve {
        file: PathBuf,
        /// auto, path, tree-k, triad, circular-i, circular-k, star-bounded, comb-xp,
        /// fpt, kernel+fpt, approx or oracle.
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Largest instance the oracle will enumerate.
        #[arg(long)]
        cap: Option<usize>,
        /// Degree bound for star-bounded.
        #[arg(long)]
        star_degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated instance.
    Generate {
        kind: GenKind,
        /// example, random or planted (reductions only).
        variant: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Largest neighborhood drawn for a vertex.
        #[arg(long)]
        max_piece: Option<usize>,
        /// Triad leg lengths, one value or three.
        #[arg(long, value_delimiter = ',')]
        legs: Option<Vec<usize>>,
        /// Independent degree bound for random-star.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        sets: Option<usize>,
        #[arg(long)]
        extra: Option<usize>,
        /// Edge probability.
        #[arg(long)]
        p: Option<f64>,
        /// Vertex cover budget.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
        /// Source instance for to-chordal.
        #[arg(long)]
        source: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output file, or directory when --count is above 1.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Solve every `.split` file in a directory and tabulate.
    Bench {
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', value_parser = parse_method)]
        methods: Option<Vec<Method>>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: splitsteiner::Error| e.to_string())
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Solve {
            file,
            method,
            cap,
            star_degree,
            json,
        } => cmd_solve(
            &file,
            &SolveArgs {
                method: Some(method),
                cap,
                star_degree,
                json,
            },
        ),
        Command::Generate {
            kind,
            variant,
            seed,
            m,
            n,
            max_piece,
            legs,
            degree,
            q,
            sets,
            extra,
            p,
            k,
            budget,
            source,
            count,
            out,
        } => {
            let params = GenParams {
                variant,
                seed,
                m,
                n,
                max_piece,
                legs,
                degree,
                q,
                sets,
                extra,
                p,
                k,
                budget,
                source,
            };
            cmd_generate(kind, &params, count, out.as_deref())
        }
        Command::Verify {
            instance,
            solution,
            json,
        } => cmd_verify(&instance, &solution, json),
        Command::Bench {
            dir,
            methods,
            cap,
            json,
        } => cmd_bench(&dir, &methods.unwrap_or_else(default_methods), cap, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            let _ = std::io::stdout()
                .lock()
                .write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
