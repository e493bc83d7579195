//! Batch cross-validation over a parameter grid.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Args;
use hankel_blowup::invariants::{InvariantReport, Options};
use hankel_blowup::{OrderKind, ScrollParams};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{render, report_for, Order, RunArgs, Verify, FAILURE, OK, USAGE};

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// Range of r, e.g. `2..3`.
    #[arg(long = "r-range")]
    r_range: Span,
    /// Range of c; bounds may be relative to r, e.g. `r..r+7` or `r..10`.
    #[arg(long = "c-range")]
    c_range: Span,
    /// Range of d, e.g. `1..2`.
    #[arg(long = "d-range", default_value = "1")]
    d_range: Span,
    #[arg(long, value_enum, default_value_t = Verify::Both)]
    verify: Verify,
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    order: Order,
    #[command(flatten)]
    run: RunArgs,
    /// Worker threads.
    #[arg(long, default_value_t = 4)]
    jobs: usize,
    /// Aggregate JSON report.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    Abs(usize),
    /// `r + k`
    FromR(usize),
}

impl Bound {
    fn at(self, r: usize) -> usize {
        match self {
            Bound::Abs(v) => v,
            Bound::FromR(k) => r + k,
        }
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "r" {
            return Ok(Bound::FromR(0));
        }
        if let Some(k) = s.strip_prefix("r+") {
            return k.trim().parse().map(Bound::FromR).map_err(|e| format!("bad offset {k:?}: {e}"));
        }
        s.parse().map(Bound::Abs).map_err(|e| format!("bad bound {s:?}: {e}"))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Abs(v) => write!(f, "{v}"),
            Bound::FromR(0) => write!(f, "r"),
            Bound::FromR(k) => write!(f, "r+{k}"),
        }
    }
}

/// An inclusive range `lo..hi`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: Bound,
    hi: Bound,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a.parse()?, b.trim_start_matches('=').parse()?),
            None => {
                let v: Bound = s.parse()?;
                (v, v)
            }
        };
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Span {
    fn values(&self, r: usize) -> std::ops::RangeInclusive<usize> {
        self.lo.at(r)..=self.hi.at(r)
    }

    fn absolute(&self) -> bool {
        matches!((self.lo, self.hi), (Bound::Abs(_), Bound::Abs(_)))
    }
}

/// Every valid triple of the grid, ordered by r, then d, then c.
fn grid(args: &SweepArgs) -> Result<Vec<ScrollParams>, String> {
    for (name, span) in [("r", &args.r_range), ("d", &args.d_range)] {
        if !span.absolute() {
            return Err(format!("--{name}-range cannot refer to r"));
        }
        if span.values(0).is_empty() {
            return Err(format!("--{name}-range {span} is empty"));
        }
    }
    let mut out = Vec::new();
    for r in args.r_range.values(0) {
        if r < 2 {
            return Err(format!("r must be at least 2, got {r}"));
        }
        for d in args.d_range.values(0) {
            if d < 1 {
                return Err("d must be at least 1".into());
            }
            for c in args.c_range.values(r).filter(|&c| c >= r) {
                out.push(ScrollParams::new(r, c, d).map_err(|e| e.to_string())?);
            }
        }
    }
    Ok(out)
}

enum CaseResult {
    OutOfBudget(String),
    Error(String),
    Report(Box<InvariantReport>),
}

impl CaseResult {
    fn status(&self) -> &'static str {
        match self {
            CaseResult::OutOfBudget(_) => "skipped",
            CaseResult::Error(_) => "fail",
            CaseResult::Report(r) if r.has_failure() => "fail",
            CaseResult::Report(r) if r.has_skip() => "partial",
            CaseResult::Report(_) => "pass",
        }
    }

    fn to_json(&self, params: &ScrollParams) -> Value {
        let mut j = json!({
            "params": { "r": params.r(), "c": params.c(), "d": params.d() },
            "status": self.status(),
        });
        match self {
            CaseResult::OutOfBudget(why) | CaseResult::Error(why) => j["reason"] = json!(why),
            CaseResult::Report(r) => {
                j["report"] = r.to_json();
                let failed: Vec<&String> =
                    r.verification_status.iter().filter(|(_, s)| s.is_fail()).map(|(n, _)| n).collect();
                if !failed.is_empty() {
                    j["failed_checks"] = json!(failed);
                }
            }
        }
        j
    }
}

fn run_case(params: ScrollParams, order: OrderKind, options: &Options, cache: bool) -> CaseResult {
    let n = params.n_y_vars();
    if n > options.budget.max_y_vars && !options.oracles.is_empty() {
        return CaseResult::OutOfBudget(format!("{n} Y-variables exceed {}", options.budget.max_y_vars));
    }
    match report_for(params, order, options, cache) {
        Ok(r) => CaseResult::Report(Box::new(r)),
        Err(e) if e.is_budget() => CaseResult::OutOfBudget(e.to_string()),
        Err(e) => CaseResult::Error(e.to_string()),
    }
}

/// The aggregate document for a grid; deterministic for fixed arguments.
fn sweep_json(args: &SweepArgs, cases: &[(ScrollParams, CaseResult)], options: &Options) -> Value {
    let count = |s: &str| cases.iter().filter(|(_, c)| c.status() == s).count();
    let oracles: Vec<&str> = options.oracles.iter().map(|o| o.name()).collect();
    json!({
        "grid": {
            "r_range": args.r_range.to_string(),
            "c_range": args.c_range.to_string(),
            "d_range": args.d_range.to_string(),
            "order": OrderKind::from(args.order).name(),
            "budget": options.budget,
            "oracles": oracles,
            "prime_field": options.prime_field,
        },
        "cases": cases.iter().map(|(p, c)| c.to_json(p)).collect::<Vec<_>>(),
        "summary": {
            "cases": cases.len(),
            "pass": count("pass"),
            "fail": count("fail"),
            "partial": count("partial"),
            "skipped": count("skipped"),
        },
    })
}

fn write_atomic(path: &Path, body: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(body.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn run(args: &SweepArgs) -> u8 {
    let cases = match grid(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    let options = args.run.options(args.verify);
    let order = OrderKind::from(args.order);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return FAILURE;
        }
    };
    let results: Vec<(ScrollParams, CaseResult)> =
        pool.install(|| cases.par_iter().map(|&p| (p, run_case(p, order, &options, !args.run.no_cache))).collect());
    for (p, c) in &results {
        if c.status() == "fail" {
            eprintln!("{p}: fail");
        }
    }
    let doc = sweep_json(args, &results, &options);
    if let Err(e) = write_atomic(&args.out, &render::pretty(&doc)) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return FAILURE;
    }
    let s = &doc["summary"];
    println!(
        "{} cases: {} pass, {} fail, {} partial, {} skipped",
        s["cases"], s["pass"], s["fail"], s["partial"], s["skipped"]
    );
    if s["fail"].as_u64() > Some(0) {
        FAILURE
    } else {
        OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        let s: Span = "r..r+7".parse().unwrap();
        assert_eq!(s.values(3), 3..=10);
        let s: Span = "2..=3".parse().unwrap();
        assert_eq!(s.values(0), 2..=3);
        let s: Span = "4".parse().unwrap();
        assert_eq!(s.values(9), 4..=4);
        assert!("r+x..3".parse::<Span>().is_err());
        assert_eq!("r..10".parse::<Span>().unwrap().to_string(), "r..10");
    }
}
