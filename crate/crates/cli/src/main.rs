use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

/// Bounds, constructions, verification and exact search for the achromatic
/// arboricity of complete graphs.
#[derive(Debug, Parser)]
#[command(name = "achromatic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Upper and lower bounds for K_n.
    Bounds {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the projective-plane coloring of K_{q^2+q+1} for an odd prime q.
    Construct {
        #[arg(long)]
        q: u32,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Leave the tool version out of the document.
        #[arg(long)]
        reproducible: bool,
    },
    /// Check a coloring document. Exits 0 when valid and 3 when not.
    Verify {
        path: std::path::PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact search for the largest valid class count of K_n.
    Search {
        n: usize,
        /// Node budget per class count, e.g. 1e6.
        #[arg(long, value_parser = parse_count)]
        max_nodes: Option<u64>,
        /// Wall-clock limit for the whole run.
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Write the best witness found as a coloring document.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Bounds for a range of n, written lo..hi (inclusive).
    Table {
        #[arg(value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 {
        Ok(v as u64)
    } else {
        Err(format!("`{s}` is not a whole non-negative number"))
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in `{s}`"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in `{s}`"))?;
    if lo < 2 || lo > hi {
        return Err(format!("range must satisfy 2 <= lo <= hi, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(CliError::USAGE),
            };
        }
    };
    let result = match cli.command {
        Command::Bounds { n, json } => commands::bounds(n, json),
        Command::Construct {
            q,
            output,
            format,
            reproducible,
        } => commands::construct(q, output.as_deref(), format, reproducible),
        Command::Verify { path, json } => commands::verify(&path, json),
        Command::Search {
            n,
            max_nodes,
            max_seconds,
            output,
            json,
        } => commands::search(n, max_nodes, max_seconds, output.as_deref(), json),
        Command::Table { range, json } => commands::table(range, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
