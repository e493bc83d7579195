mod cache;
mod render;
mod sweep;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_blowup::clique::{enumerate_maximal_cliques, CliqueGraph};
use hankel_blowup::invariants::{cross_validate, Budget, InvariantReport, Options, Oracle};
use hankel_blowup::linalg::Fp;
use hankel_blowup::resolution::resolve_dual;
use hankel_blowup::straighten::MinorTable;
use hankel_blowup::{Error, OrderKind, ScrollParams};
use num_rational::BigRational;
use serde_json::json;

use cache::Cache;

const OK: u8 = 0;
const FAILURE: u8 = 1;
const USAGE: u8 = 2;
const PARTIAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "hankel-blowup", version, about = "Blow-up algebras of extended Hankel determinantal ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regularity, dimension, a-invariant, reduction number and Gorensteinness.
    Invariants {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = Verify::Both)]
        verify: Verify,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Defining equations of the fiber cone or the Rees algebra.
    Equations {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Maximal cliques of the sorted-pair graph with their colon ideals.
    Cliques {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Graded Betti numbers of the Alexander dual of the initial ideal.
    Betti {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Compute modulo a large prime instead of over the rationals.
        #[arg(long)]
        prime: bool,
        #[arg(long, value_enum, default_value_t = BettiFormat::Text)]
        format: BettiFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-validate every case of a parameter grid.
    Sweep(sweep::SweepArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct CaseArgs {
    #[arg(short = 'r')]
    r: usize,
    #[arg(short = 'c')]
    c: usize,
    #[arg(short = 'd', default_value_t = 1)]
    d: usize,
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    order: Order,
}

impl CaseArgs {
    fn params(&self) -> Result<ScrollParams, Error> {
        ScrollParams::new(self.r, self.c, self.d)
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Largest number of Y-variables handled by brute force.
    #[arg(long, default_value_t = Budget::default().max_y_vars)]
    max_vars: usize,
    /// Largest number of maximal cliques enumerated.
    #[arg(long, default_value_t = Budget::default().max_cliques)]
    max_cliques: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_y_vars: self.max_vars, max_cliques: self.max_cliques, ..Budget::default() }
    }
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    #[command(flatten)]
    budget: BudgetArgs,
    /// Comma-separated subset of brute-force checks (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_oracle)]
    oracles: Option<Vec<Oracle>>,
    /// Resolve modulo a large prime instead of over the rationals.
    #[arg(long)]
    prime: bool,
    /// Neither read nor write the report cache.
    #[arg(long)]
    no_cache: bool,
}

impl RunArgs {
    fn options(&self, verify: Verify) -> Options {
        let oracles: BTreeSet<Oracle> = match (verify, &self.oracles) {
            (Verify::Formula, _) => BTreeSet::new(),
            (_, Some(list)) => list.iter().copied().collect(),
            (_, None) => Oracle::ALL.into_iter().collect(),
        };
        Options { budget: self.budget.budget(), oracles, prime_field: self.prime }
    }
}

#[derive(Args, Debug, Clone)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_oracle(s: &str) -> Result<Oracle, String> {
    Oracle::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Oracle::ALL.iter().map(|o| o.name()).collect();
        format!("unknown check {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Order {
    Lex,
    Revlex,
}

impl From<Order> for OrderKind {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => OrderKind::Lex,
            Order::Revlex => OrderKind::Revlex,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Verify {
    Formula,
    Brute,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum BettiFormat {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    Fiber,
    Rees,
}

/// A finished command: what to print and the exit code.
struct Outcome {
    body: String,
    code: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: OK }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match cli.command {
        Command::Invariants { case, verify, run, out } => (cmd_invariants(case, verify, &run, out.format), out.out),
        Command::Equations { which, case, budget, out } => (cmd_equations(which, case, budget, out.format), out.out),
        Command::Cliques { case, budget, out } => (cmd_cliques(case, budget, out.format), out.out),
        Command::Betti { case, budget, prime, format, out } => (cmd_betti(case, budget, prime, format), out),
        Command::Sweep(args) => return ExitCode::from(sweep::run(&args)),
    };
    match result {
        Ok(o) => match emit(&o.body, out.as_ref()) {
            Ok(()) => ExitCode::from(o.code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(FAILURE)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidParams(_) | Error::InvalidIndex { .. } => USAGE,
                e if e.is_budget() => PARTIAL,
                _ => FAILURE,
            })
        }
    }
}

fn emit(body: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// The report for one case, through the cache unless disabled.
fn report_for(
    params: ScrollParams,
    order: OrderKind,
    options: &Options,
    use_cache: bool,
) -> Result<InvariantReport, Error> {
    let cache = if use_cache { Cache::from_env() } else { None };
    let key = Cache::key(&params, order, options);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(hit);
    }
    let report = cross_validate(params, options)?;
    if let Some(c) = &cache {
        if let Err(e) = c.put(&key, &report) {
            eprintln!("warning: could not write cache entry: {e}");
        }
    }
    Ok(report)
}

/// Budget skips only matter when brute force was asked for on its own.
fn exit_code(report: &InvariantReport, verify: Verify) -> u8 {
    if report.has_failure() {
        FAILURE
    } else if verify == Verify::Brute && report.has_skip() {
        PARTIAL
    } else {
        OK
    }
}

fn cmd_invariants(case: CaseArgs, verify: Verify, run: &RunArgs, format: Format) -> Result<Outcome, Error> {
    let params = case.params()?;
    let options = run.options(verify);
    let report = report_for(params, case.order.into(), &options, !run.no_cache)?;
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => render::pretty(&report.to_json()),
    };
    Ok(Outcome { body, code: exit_code(&report, verify) })
}

fn check_vars(params: &ScrollParams, budget: &Budget) -> Result<(), Error> {
    let n = params.n_y_vars();
    if n > budget.max_y_vars {
        return Err(Error::BudgetExceeded(format!("{n} Y-variables exceed --max-vars {}", budget.max_y_vars)));
    }
    Ok(())
}

fn cmd_equations(which: Which, case: CaseArgs, budget: BudgetArgs, format: Format) -> Result<Outcome, Error> {
    let params = case.params()?;
    check_vars(&params, &budget.budget())?;
    let table = MinorTable::new(params);
    let set = match which {
        Which::Fiber => table.fiber_relations(case.order.into())?,
        Which::Rees => {
            let mut rees = table.rees_syzygy_relations();
            let fiber = table.fiber_relations(case.order.into())?;
            let n = params.n_vars();
            let map: Vec<usize> = (0..table.vars().len()).map(|i| n + i).collect();
            rees.relations.extend(fiber.relations.iter().map(|f| f.embed(n + map.len(), &map)));
            rees
        }
    };
    let mut vanishing = true;
    for rel in &set.relations {
        vanishing &= table.relation_vanishes(rel)?;
    }
    let code = if vanishing { OK } else { FAILURE };
    let body = match format {
        Format::Json => {
            let mut j = set.to_json();
            j["params"] = json!({ "r": params.r(), "c": params.c(), "d": params.d() });
            j["verified_vanishing"] = json!(vanishing);
            render::pretty(&j)
        }
        Format::Text => {
            let mut s = format!("# {params}: {} relations\n", set.relations.len());
            s += &format!("verified_vanishing: {vanishing}\n");
            for rel in &set.relations {
                s += &set.render(rel);
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { body, code })
}

fn cmd_cliques(case: CaseArgs, budget: BudgetArgs, format: Format) -> Result<Outcome, Error> {
    let params = case.params()?;
    let b = budget.budget();
    check_vars(&params, &b)?;
    let graph = CliqueGraph::new(params)?;
    let set = enumerate_maximal_cliques(&graph, case.order.into(), b.max_cliques)?;
    let colons = set.colon_all()?;
    let body = match format {
        Format::Json => render::pretty(&set.to_json(&colons)),
        Format::Text => render::cliques_text(&set, &colons),
    };
    Ok(Outcome::ok(body))
}

fn cmd_betti(case: CaseArgs, budget: BudgetArgs, prime: bool, format: BettiFormat) -> Result<Outcome, Error> {
    let params = case.params()?;
    let b = budget.budget();
    check_vars(&params, &b)?;
    let graph = CliqueGraph::new(params)?;
    let set = enumerate_maximal_cliques(&graph, case.order.into(), b.max_cliques)?;
    let colons = set.colon_all()?;
    let betti = if prime {
        resolve_dual::<Fp>(&set, &colons)?.betti
    } else {
        resolve_dual::<BigRational>(&set, &colons)?.betti
    };
    let body = match format {
        BettiFormat::Csv => betti.to_csv(),
        BettiFormat::Json => {
            let mut j = betti.to_json();
            j["params"] = json!({ "r": params.r(), "c": params.c(), "d": params.d() });
            j["order"] = json!(OrderKind::from(case.order).name());
            render::pretty(&j)
        }
        BettiFormat::Text => render::betti_text(&betti),
    };
    Ok(Outcome::ok(body))
}
