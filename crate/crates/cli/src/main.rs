//! `snlie`: verify the block theorem for Lie(n) and expose the calculators.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use snlie::blocks::{enumerate_blocks, format_block_table, BlockRecord};
use snlie::ffla::is_supported_prime;
use snlie::symfun::{mn_character, p_core, Partition};
use snlie::verify::{verify, SplitMethod, VerificationReport, VerifyError};

const EXIT_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "snlie", version, about = "Block structure of the Lie module of the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Lie(n) over GF(p), split it into blocks and test each component.
    Verify {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "eigenspace")]
        method: SplitMethod,
        /// Write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Directory for cached module files.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print the p-blocks of S_n.
    Blocks {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        n: u32,
    },
    /// Print the p-core and weight of a partition.
    Core {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = parse_prime)]
        p: u32,
    },
    /// Print the character value χ^λ(ρ).
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: Partition,
    },
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if is_supported_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a supported prime (primes below 256)"))
    }
}

fn print_report(r: &VerificationReport) {
    println!("Lie({}) over GF({}): dimension {}", r.n, r.p, r.dim_lie);
    println!("omega^2 = n omega: {}", ok(r.omega_square_ok));
    println!("free on restriction to S_{}: {}", r.n - 1, ok(r.restriction_free_ok));
    println!(
        "whole module: norm rank {} over a Sylow subgroup of order {}, {}",
        r.full_module.norm_rank,
        r.sylow_order,
        if r.full_module.projective { "projective" } else { "not projective" }
    );
    if r.split_skipped {
        println!("module is projective; block split skipped");
    }
    print!("{}", format_block_table(&r.blocks));
    println!(
        "non-projective summands lie in the principal block: {} ({:.2}s, method {})",
        if r.theorem_holds { "yes" } else { "NO" },
        r.elapsed,
        r.method
    );
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn run(cli: Cli) -> Result<(), (u8, String)> {
    match cli.command {
        Command::Verify { p, n, method, json, cache } => {
            let report = verify(p, n, method, cache.as_deref()).map_err(|e| {
                let code = match e {
                    VerifyError::Capacity { .. } | VerifyError::UnsupportedPrime(_) | VerifyError::MethodUnavailable => {
                        EXIT_USAGE
                    }
                    _ => EXIT_INTERNAL,
                };
                (code, e.to_string())
            })?;
            print_report(&report);
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).map_err(|e| (EXIT_INTERNAL, e.to_string()))?;
                fs::write(&path, text + "\n").map_err(|e| (EXIT_INTERNAL, format!("{}: {e}", path.display())))?;
            }
            if !report.success() {
                return Err((EXIT_VIOLATED, "verification failed".into()));
            }
        }
        Command::Blocks { p, n } => {
            let records: Vec<BlockRecord> = enumerate_blocks(n, p).iter().map(BlockRecord::from).collect();
            print!("{}", format_block_table(&records));
        }
        Command::Core { lambda, p } => {
            let (core, weight) = p_core(&lambda, p);
            println!("core: {core}");
            println!("weight: {weight}");
        }
        Command::Char { lambda, rho } => {
            let value = mn_character(&lambda, &rho).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            println!("{value}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
