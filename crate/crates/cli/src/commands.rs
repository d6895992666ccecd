use std::fs;
use std::path::Path;
use std::time::Duration;

use achromatic_core::solver::DEFAULT_MAX_NODES;
use achromatic_core::{
    build_coloring, exact_value, summarize, to_dot, verify_coloring, AttemptOutcome, BoundsSummary,
    Budget, ColoringDocument, EdgeColoring, ExactStatus, Meta, VerificationReport, MAX_VERTICES,
};
use serde::Serialize;
use thiserror::Error;

use crate::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {reason}")]
    Parse { path: String, reason: String },
    #[error("the coloring is not valid")]
    Invalid,
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub const USAGE: u8 = 1;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => Self::USAGE,
            CliError::Parse { .. } => 2,
            CliError::Invalid => 3,
            CliError::Internal(_) => 4,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(n: usize) -> Result<BoundsSummary, CliError> {
    summarize(n).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn bounds(n: usize, json: bool) -> Result<(), CliError> {
    let s = summary(n)?;
    if json {
        println!("{}", to_json(&s)?);
        return Ok(());
    }
    println!("n = {}", s.n);
    println!("upper: {}", s.upper);
    println!("lower: {} ({})", s.lower, s.lower_source);
    match s.exact {
        Some(v) => println!("exact: {v}"),
        None => println!("exact: unknown"),
    }
    println!("n^1.5/sqrt(2): {:.3}", s.asymptotic_upper);
    if let Some(x0) = s.x0 {
        println!("crossing point x0: {x0:.4}");
    }
    Ok(())
}

pub fn construct(
    q: u32,
    output: Option<&Path>,
    format: Format,
    reproducible: bool,
) -> Result<(), CliError> {
    let coloring = build_coloring(q).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = verify_coloring(&coloring);
    if !report.is_valid {
        return Err(CliError::Internal(format!(
            "construction for q = {q} failed verification; nothing written"
        )));
    }
    let text = match format {
        Format::Json => {
            let meta = Meta {
                construction: Some("projective-plane".into()),
                q: Some(q),
                tool_version: (!reproducible).then(|| env!("CARGO_PKG_VERSION").to_string()),
            };
            ColoringDocument::from_coloring(&coloring, Some(meta)).to_json()
        }
        Format::Dot => to_dot(&coloring),
    };
    write_output(output, &text)?;
    if output.is_some() {
        eprintln!("K_{}: {} classes, verified", coloring.n(), coloring.k());
    }
    Ok(())
}

fn load(path: &Path) -> Result<EdgeColoring, CliError> {
    let parse_error = |reason: String| CliError::Parse {
        path: path.display().to_string(),
        reason,
    };
    let text = fs::read_to_string(path).map_err(|e| parse_error(e.to_string()))?;
    let doc = ColoringDocument::parse(&text).map_err(|e| parse_error(e.to_string()))?;
    doc.to_coloring().map_err(|e| parse_error(e.to_string()))
}

fn print_report(r: &VerificationReport) {
    println!("n = {}, k = {}", r.n, r.k);
    if r.partition_ok {
        println!("partition: ok");
    } else {
        println!("partition: {} issue(s)", r.partition_issues.len());
        for issue in &r.partition_issues {
            println!("  {issue}");
        }
    }
    if r.acyclic_failures.is_empty() {
        println!("acyclic classes: ok");
    } else {
        println!("classes with a cycle: {:?}", r.acyclic_failures);
    }
    if r.pair_failures.is_empty() {
        println!("pairwise cycles: ok");
    } else {
        println!("pairs without a cycle: {}", r.pair_failures.len());
        for (i, j) in r.pair_failures.iter().take(20) {
            println!("  classes {i} and {j}");
        }
    }
    println!("{}", if r.is_valid { "valid" } else { "invalid" });
}

pub fn verify(path: &Path, json: bool) -> Result<(), CliError> {
    let coloring = load(path)?;
    let report = verify_coloring(&coloring);
    if json {
        println!("{}", to_json(&report)?);
    } else {
        print_report(&report);
    }
    if report.is_valid {
        Ok(())
    } else {
        Err(CliError::Invalid)
    }
}

#[derive(Serialize)]
struct Attempt {
    k: u64,
    outcome: AttemptOutcome,
}

#[derive(Serialize)]
struct SearchSummary {
    n: usize,
    #[serde(flatten)]
    status: ExactStatus,
    attempts: Vec<Attempt>,
    nodes_explored: u64,
    elapsed_seconds: f64,
}

pub fn search(
    n: usize,
    max_nodes: Option<u64>,
    max_seconds: Option<f64>,
    output: Option<&Path>,
    json: bool,
) -> Result<(), CliError> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(CliError::Usage(format!(
            "search supports 2 <= n <= {MAX_VERTICES}, got {n}"
        )));
    }
    let mut budget = Budget::nodes(max_nodes.unwrap_or(DEFAULT_MAX_NODES));
    if let Some(s) = max_seconds {
        let limit = Duration::try_from_secs_f64(s)
            .map_err(|_| CliError::Usage(format!("bad --max-seconds value {s}")))?;
        budget = budget.with_time(limit);
    }
    let result = exact_value(n, budget);
    if json {
        let summary = SearchSummary {
            n,
            status: result.status,
            attempts: result
                .attempts
                .iter()
                .map(|&(k, outcome)| Attempt { k, outcome })
                .collect(),
            nodes_explored: result.nodes_explored,
            elapsed_seconds: result.elapsed.as_secs_f64(),
        };
        println!("{}", to_json(&summary)?);
    } else {
        println!("n = {n}: {}", result.status);
        for (k, outcome) in &result.attempts {
            let text = match outcome {
                AttemptOutcome::Found => "found".to_string(),
                AttemptOutcome::Refuted => "refuted".to_string(),
                AttemptOutcome::Exhausted(why) => {
                    format!("budget exhausted ({why:?})").to_lowercase()
                }
            };
            println!("  k = {k}: {text}");
        }
        println!(
            "nodes: {}, time: {:.2?}",
            result.nodes_explored, result.elapsed
        );
    }
    if let Some(path) = output {
        let witness = result
            .witness
            .as_ref()
            .ok_or_else(|| CliError::Internal("no witness available".into()))?;
        let meta = Meta {
            construction: Some("exact-search".into()),
            ..Meta::default()
        };
        write_output(
            Some(path),
            &ColoringDocument::from_coloring(witness, Some(meta)).to_json(),
        )?;
    }
    Ok(())
}

pub fn table((lo, hi): (usize, usize), json: bool) -> Result<(), CliError> {
    let rows = (lo..=hi).map(summary).collect::<Result<Vec<_>, _>>()?;
    if json {
        println!("{}", to_json(&rows)?);
        return Ok(());
    }
    println!("{:>6} {:>8} {:>8} {:>8}", "n", "lower", "upper", "exact");
    for s in rows {
        let exact = s.exact.map_or_else(|| "-".to_string(), |v| v.to_string());
        println!("{:>6} {:>8} {:>8} {:>8}", s.n, s.lower, s.upper, exact);
    }
    Ok(())
}
