//! Closed formulas for the invariants of the fiber cone and the engine that
//! checks them against brute-force computations.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique::{check_f0_conditions, construct_f0, enumerate_maximal_cliques, max_codim, CliqueGraph, Regime};
use crate::error::{Error, Result};
use crate::ideal::verify_minors_groebner;
use crate::linalg::{rank, Field, Fp};
use crate::params::{enumerate_lambda, OrderKind, ScrollParams};
use crate::poly::GroebnerBudget;
use crate::resolution::{betti_summary, resolve_dual, taylor_betti, BettiSummary, BettiTable};
use crate::straighten::{verify_sortability, MinorTable};

/// Which of the four parameter ranges a triple falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `c >= 2r + d`
    Balanced,
    /// `r + d < c < 2r + d`
    Intermediate,
    /// `r < c <= r + d`
    Narrow,
    /// `c = r`
    Square,
}

pub fn branch(params: &ScrollParams) -> Branch {
    let (r, c, d) = (params.r(), params.c(), params.d());
    if c == r {
        Branch::Square
    } else if c <= r + d {
        Branch::Narrow
    } else if c < 2 * r + d {
        Branch::Intermediate
    } else {
        Branch::Balanced
    }
}

/// `(p, q)` with `N - 1 = p r + q` and `1 <= q <= r`.
pub fn quotient_remainder(params: &ScrollParams) -> (usize, usize) {
    let m = params.n_vars() - 1;
    let r = params.r();
    let q = (m + r - 1) % r + 1;
    ((m - q) / r, q)
}

pub fn formula_dim(params: &ScrollParams) -> usize {
    let (r, c, d) = (params.r(), params.c(), params.d());
    match branch(params) {
        Branch::Square => 1,
        Branch::Narrow => r * c - r * r + 1,
        _ => c + (r - 1) * d,
    }
}

pub fn formula_reg(params: &ScrollParams) -> usize {
    let (r, c, d) = (params.r(), params.c(), params.d());
    let n = params.n_vars();
    match branch(params) {
        Branch::Square => 0,
        Branch::Narrow => (r - 1) * (c - r - 1),
        Branch::Intermediate => d * r + 2 * c - 2 * r - 3 * d - 2,
        Branch::Balanced => n - 1 - (n - 1) / r,
    }
}

/// The a-invariant, checked against `reg - dim`.
pub fn formula_a_invariant(params: &ScrollParams) -> Result<i64> {
    let (r, c, d) = (params.r() as i64, params.c() as i64, params.d() as i64);
    let n = params.n_vars() as i64;
    let a = match branch(params) {
        Branch::Square => -1,
        Branch::Narrow => -c,
        Branch::Intermediate => c - 2 * r - 2 * d - 2,
        Branch::Balanced => -1 - (n - 1) / r,
    };
    let expected = formula_reg(params) as i64 - formula_dim(params) as i64;
    if a != expected {
        return Err(Error::internal(format!("a-invariant {a} differs from reg - dim = {expected} at {params}")));
    }
    Ok(a)
}

pub fn formula_reduction_number(params: &ScrollParams) -> usize {
    formula_reg(params)
}

/// Membership of `c` in `{r, r+1, r+d, r+d+1, 2r+d}`, evaluated on the
/// reduced parameters.
pub fn gorenstein_formula(params: &ScrollParams) -> bool {
    let p = params.reduced();
    let (r, c, d) = (p.r(), p.c(), p.d());
    [r, r + 1, r + d, r + d + 1, 2 * r + d].contains(&c)
}

/// Rank of the exponent matrix of the initial monomials `x_alpha`.
pub fn bruteforce_dim(params: &ScrollParams) -> usize {
    let n = params.n_vars();
    let rows: Vec<Vec<BigRational>> = enumerate_lambda(params)
        .iter()
        .map(|a| a.x_monomial(n).exponents().iter().map(|&e| BigRational::from_i64(e as i64)).collect())
        .collect();
    rank(&rows)
}

/// Hilbert function of the toric algebra generated by the initial monomials
/// `x_alpha`, in degrees `0..=max_degree`, by counting distinct products.
pub fn hilbert_function(params: &ScrollParams, max_degree: usize, max_points: usize) -> Result<Vec<u64>> {
    let n = params.n_vars();
    let gens: Vec<Vec<u8>> = enumerate_lambda(params)
        .iter()
        .map(|a| a.x_monomial(n).exponents().iter().map(|&e| e as u8).collect())
        .collect();
    let mut layer: HashSet<Vec<u8>> = HashSet::from([vec![0u8; n]]);
    let mut hf = vec![1u64];
    for k in 1..=max_degree {
        if k > u8::MAX as usize / params.r() {
            return Err(Error::BudgetExceeded(format!("degree {k} overflows exponent storage")));
        }
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for v in &layer {
            for g in &gens {
                next.insert(v.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<u8>>());
            }
            if next.len() > max_points {
                return Err(Error::BudgetExceeded(format!("more than {max_points} monomials in degree {k}")));
            }
        }
        hf.push(next.len() as u64);
        layer = next;
    }
    Ok(hf)
}

/// The first `max_degree + 1` coefficients of the numerator of the Hilbert
/// series, `HS(t) (1 - t)^dim`.
pub fn h_vector(params: &ScrollParams, max_degree: usize, max_points: usize) -> Result<Vec<i64>> {
    let mut h: Vec<i64> = hilbert_function(params, max_degree, max_points)?.into_iter().map(|v| v as i64).collect();
    for _ in 0..formula_dim(params) {
        for k in (1..h.len()).rev() {
            h[k] -= h[k - 1];
        }
    }
    Ok(h)
}

/// h-vector facts used to cross-check regularity and Gorensteinness of a
/// Cohen–Macaulay domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVectorData {
    pub h: Vec<i64>,
    /// Degree of the h-polynomial, provided the two coefficients after it
    /// vanish.
    pub degree: Option<usize>,
    pub symmetric: bool,
    pub last: i64,
}

/// Computes the h-vector through degree `reg + 2` and reads off its degree,
/// last entry and symmetry.
pub fn h_vector_data(params: &ScrollParams, max_points: usize) -> Result<HVectorData> {
    let s = formula_reg(params);
    let mut h = h_vector(params, s + 2, max_points)?;
    let tail_zero = h[s + 1..].iter().all(|&v| v == 0);
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    let degree = tail_zero.then_some(h.len() - 1);
    let symmetric = h.iter().eq(h.iter().rev());
    Ok(HVectorData { last: *h.last().expect("h_0 = 1"), degree, symmetric, h })
}

/// Size limits for the brute-force computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Budget {
    pub max_y_vars: usize,
    pub max_cliques: usize,
    pub taylor_bound: usize,
    /// Largest number of minors for which Gröbner bases are checked.
    pub max_groebner_minors: usize,
    /// Largest Hilbert function value enumerated for the h-vector.
    pub max_hilbert_points: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_y_vars: 40,
            max_cliques: 500,
            taylor_bound: crate::resolution::TAYLOR_BOUND,
            max_groebner_minors: 12,
            max_hilbert_points: 2_000_000,
        }
    }
}

/// The brute-force checks `cross_validate` can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    Groebner,
    Sortability,
    Straightening,
    Relations,
    Hilbert,
    Dim,
    Colon,
    F0,
    Reg,
    Linear,
    CmType,
    Taylor,
    HVector,
}

impl Oracle {
    pub const ALL: [Oracle; 13] = [
        Oracle::Groebner,
        Oracle::Sortability,
        Oracle::Straightening,
        Oracle::Relations,
        Oracle::Hilbert,
        Oracle::Dim,
        Oracle::Colon,
        Oracle::F0,
        Oracle::Reg,
        Oracle::Linear,
        Oracle::CmType,
        Oracle::Taylor,
        Oracle::HVector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Oracle::Groebner => "groebner",
            Oracle::Sortability => "sortability",
            Oracle::Straightening => "straightening",
            Oracle::Relations => "relations",
            Oracle::Hilbert => "hilbert",
            Oracle::Dim => "dim",
            Oracle::Colon => "colon",
            Oracle::F0 => "f0",
            Oracle::Reg => "reg",
            Oracle::Linear => "linear",
            Oracle::CmType => "cm_type",
            Oracle::Taylor => "taylor",
            Oracle::HVector => "h_vector",
        }
    }

    pub fn from_name(s: &str) -> Option<Oracle> {
        Oracle::ALL.into_iter().find(|o| o.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Options {
    pub budget: Budget,
    pub oracles: BTreeSet<Oracle>,
    /// Use arithmetic modulo a large prime for resolutions.
    pub prime_field: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self { budget: Budget::default(), oracles: Oracle::ALL.into_iter().collect(), prime_field: false }
    }
}

impl Options {
    pub fn formulas_only() -> Self {
        Self { oracles: BTreeSet::new(), ..Self::default() }
    }
}

/// A brute-force value, or the reason it was not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Computed<T> {
    Value(T),
    Skipped(String),
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::Skipped(_) => None,
        }
    }

    fn budget() -> Self {
        Computed::Skipped("skipped: budget".into())
    }

    fn disabled() -> Self {
        Computed::Skipped("skipped: disabled".into())
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Status {
    fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail(witness())
        }
    }

    fn from_error(e: Error) -> Status {
        if e.is_budget() {
            Status::Skipped(format!("budget: {e}"))
        } else {
            Status::Fail(e.to_string())
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail(_))
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Status::Skipped(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBounds {
    pub lex: Computed<usize>,
    pub revlex: Computed<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub params: ScrollParams,
    pub reduced_params: ScrollParams,
    pub branch: Branch,
    pub p: usize,
    pub q: usize,
    pub dim_formula: usize,
    pub dim_bruteforce: Computed<usize>,
    pub reg_formula: usize,
    pub reg_bruteforce: Computed<usize>,
    pub a_invariant: i64,
    pub reduction_number: usize,
    pub gorenstein_formula: bool,
    pub cm_type_bruteforce: Computed<usize>,
    pub upper_bounds: UpperBounds,
    pub h_vector: Computed<Vec<i64>>,
    pub betti: Option<BettiSummary>,
    pub probabilistic: bool,
    pub verification_status: BTreeMap<String, Status>,
}

impl InvariantReport {
    pub fn has_failure(&self) -> bool {
        self.verification_status.values().any(Status::is_fail)
    }

    /// Whether some check was cut short by the budget.
    pub fn has_skip(&self) -> bool {
        self.verification_status.values().any(|s| matches!(s, Status::Skipped(w) if w.starts_with("budget")))
            || matches!(self.reg_bruteforce, Computed::Skipped(ref s) if s.contains("budget"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let show = |c: &Computed<usize>| match c {
            Computed::Value(v) => v.to_string(),
            Computed::Skipped(s) => s.clone(),
        };
        let p = &self.params;
        let mut s = format!("parameters        r={} c={} d={}\n", p.r(), p.c(), p.d());
        if self.reduced_params != self.params {
            s += &format!("reduced           d={}\n", self.reduced_params.d());
        }
        s += &format!("dimension         {} (brute force: {})\n", self.dim_formula, show(&self.dim_bruteforce));
        s += &format!("regularity        {} (brute force: {})\n", self.reg_formula, show(&self.reg_bruteforce));
        s += &format!("a-invariant       {}\n", self.a_invariant);
        s += &format!("reduction number  {}\n", self.reduction_number);
        s += &format!("gorenstein        {} (CM type: {})\n", self.gorenstein_formula, show(&self.cm_type_bruteforce));
        s += &format!(
            "max colon codim   lex {} / revlex {}\n",
            show(&self.upper_bounds.lex),
            show(&self.upper_bounds.revlex)
        );
        if let Computed::Value(h) = &self.h_vector {
            s += &format!("h-vector          {h:?}\n");
        }
        for (name, st) in &self.verification_status {
            let line = match st {
                Status::Pass => "pass".to_string(),
                Status::Fail(w) => format!("FAIL {w}"),
                Status::Skipped(w) => format!("skip ({w})"),
            };
            s += &format!("  {name:<24}{line}\n");
        }
        s
    }
}

/// Resolution data of the Alexander dual for one ordering.
#[derive(Debug, Clone)]
pub struct DualAnalysis {
    pub kind: OrderKind,
    pub max_codim: usize,
    pub betti: BettiTable,
    pub summary: BettiSummary,
    pub n_generators: usize,
}

fn analyze_dual<F: Field>(graph: &CliqueGraph, kind: OrderKind, budget: &Budget) -> Result<DualAnalysis> {
    let set = enumerate_maximal_cliques(graph, kind, budget.max_cliques)?;
    let colons = set.colon_all()?;
    let res = resolve_dual::<F>(&set, &colons)?;
    let summary = betti_summary(&res.betti)?;
    Ok(DualAnalysis { kind, max_codim: max_codim(&colons), betti: res.betti, summary, n_generators: set.len() })
}

fn graph_within_budget(params: &ScrollParams, budget: &Budget) -> Result<CliqueGraph> {
    let n = params.n_y_vars();
    if n > budget.max_y_vars {
        return Err(Error::BudgetExceeded(format!("{n} Y-variables exceed {}", budget.max_y_vars)));
    }
    CliqueGraph::new(*params)
}

/// Minimal resolution data of the dual for the given ordering; `None` when
/// the defining ideal is zero.
pub fn dual_analysis(
    params: &ScrollParams,
    kind: OrderKind,
    budget: &Budget,
    prime: bool,
) -> Result<Option<DualAnalysis>> {
    if params.is_degenerate() {
        return Ok(None);
    }
    let graph = graph_within_budget(params, budget)?;
    let a = if prime {
        analyze_dual::<Fp>(&graph, kind, budget)?
    } else {
        analyze_dual::<BigRational>(&graph, kind, budget)?
    };
    Ok(Some(a))
}

/// Projective dimension of the Alexander dual, which equals the regularity
/// of the fiber cone.
pub fn bruteforce_reg(params: &ScrollParams, kind: OrderKind, budget: &Budget) -> Result<usize> {
    Ok(dual_analysis(params, kind, budget, false)?.map_or(0, |a| a.summary.pd))
}

/// Top total Betti number of the Alexander dual, the Cohen–Macaulay type.
pub fn cm_type_bruteforce(params: &ScrollParams, budget: &Budget) -> Result<usize> {
    Ok(dual_analysis(params, OrderKind::Lex, budget, false)?.map_or(1, |a| a.summary.top_betti))
}

/// Deterministic spread of up to `count` pairs of canonical Y-ids.
pub fn sample_pairs(n: usize, count: usize) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    if all.len() <= count {
        return all;
    }
    (0..count).map(|k| all[k * all.len() / count]).collect()
}

type Check = (&'static str, Box<dyn Fn() -> Status + Send + Sync>);

/// Runs every formula and every enabled oracle.
pub fn cross_validate(params: ScrollParams, options: &Options) -> Result<InvariantReport> {
    let budget = options.budget;
    let on = |o: Oracle| options.oracles.contains(&o);
    let (p, q) = quotient_remainder(&params);
    let reg_formula = formula_reg(&params);
    let dim_formula = formula_dim(&params);
    let a_invariant = formula_a_invariant(&params)?;
    let gorenstein = gorenstein_formula(&params);
    let prime = options.prime_field;

    let wants_dual = on(Oracle::Reg) || on(Oracle::Linear) || on(Oracle::CmType) || on(Oracle::Taylor);
    let (analyses, hdata): (Vec<Result<Option<DualAnalysis>>>, Option<Result<HVectorData>>) = rayon::join(
        || {
            if wants_dual {
                OrderKind::BOTH.par_iter().map(|&k| dual_analysis(&params, k, &budget, prime)).collect()
            } else {
                Vec::new()
            }
        },
        || on(Oracle::HVector).then(|| h_vector_data(&params, budget.max_hilbert_points)),
    );
    let hv = hdata.as_ref().and_then(|h| h.as_ref().ok());

    let mut status: BTreeMap<String, Status> = BTreeMap::new();
    status.insert(
        "formula_identities".into(),
        Status::from_bool(formula_reduction_number(&params) == reg_formula, || {
            "reduction number differs from reg".into()
        }),
    );

    let small = params.n_y_vars() <= budget.max_y_vars;
    let mut checks: Vec<Check> = Vec::new();
    if on(Oracle::Groebner) {
        checks.push((
            "groebner",
            Box::new(move || {
                if params.n_y_vars() > budget.max_groebner_minors {
                    return Status::Skipped("budget: too many minors".into());
                }
                match verify_minors_groebner(&params, GroebnerBudget::default()) {
                    Ok(ok) => Status::from_bool(ok, || "maximal minors are not a Gröbner basis".into()),
                    Err(e) => Status::from_error(e),
                }
            }),
        ));
    }
    if on(Oracle::Sortability) {
        checks.push((
            "sortability",
            Box::new(move || Status::from_bool(verify_sortability(&params), || "sorting leaves the index set".into())),
        ));
    }
    if on(Oracle::Straightening) && small {
        checks.push(("straightening", Box::new(move || straightening_status(&params, 200))));
    }
    if on(Oracle::Relations) && small {
        checks.push(("relations", Box::new(move || relations_status(&params))));
    }
    if on(Oracle::Hilbert) && small {
        checks.push((
            "hilbert",
            Box::new(move || {
                let deg = if params.n_y_vars() <= 15 { 4 } else { 3 };
                match MinorTable::new(params).hilbert_consistency(deg, 5_000_000) {
                    Ok(ok) => Status::from_bool(ok, || format!("standard monomial count differs up to degree {deg}")),
                    Err(e) => Status::from_error(e),
                }
            }),
        ));
    }
    if on(Oracle::Colon) {
        checks.push(("colon", Box::new(move || colon_status(&params, &budget))));
    }
    if on(Oracle::F0) {
        checks.push(("f0", Box::new(move || f0_status(&params, &budget))));
    }
    let results: Vec<(&str, Status)> = checks.par_iter().map(|(name, f)| (*name, f())).collect();
    for (name, st) in results {
        status.insert(name.to_string(), st);
    }
    for o in [Oracle::Straightening, Oracle::Relations, Oracle::Hilbert] {
        if on(o) && !small {
            status.insert(o.name().into(), Status::Skipped("budget: too many Y-variables".into()));
        }
    }

    let h_vector = match &hdata {
        None => Computed::disabled(),
        Some(Ok(h)) => {
            status.insert(
                "h_vector".into(),
                Status::from_bool(h.degree == Some(reg_formula) && h.symmetric == gorenstein, || {
                    format!(
                        "h-vector {:?}: degree {:?} vs reg {reg_formula}, symmetric {} vs Gorenstein {gorenstein}",
                        h.h, h.degree, h.symmetric
                    )
                }),
            );
            Computed::Value(h.h.clone())
        }
        Some(Err(e)) => {
            status.insert(
                "h_vector".into(),
                if e.is_budget() { Status::Skipped(format!("budget: {e}")) } else { Status::Fail(e.to_string()) },
            );
            if e.is_budget() {
                Computed::budget()
            } else {
                Computed::Skipped(e.to_string())
            }
        }
    };

    let dim_bruteforce = if on(Oracle::Dim) {
        let v = bruteforce_dim(&params);
        status.insert("dim".into(), Status::from_bool(v == dim_formula, || format!("rank {v} != {dim_formula}")));
        Computed::Value(v)
    } else {
        Computed::disabled()
    };

    let mut reg_bruteforce = Computed::disabled();
    let mut cm_type = Computed::disabled();
    let mut upper = UpperBounds { lex: Computed::disabled(), revlex: Computed::disabled() };
    let mut betti_sum = None;
    if wants_dual {
        let lex = &analyses[0];
        let rev = &analyses[1];
        match (lex, rev) {
            (Ok(None), _) => {
                reg_bruteforce = Computed::Value(0);
                cm_type = Computed::Value(1);
                upper = UpperBounds { lex: Computed::Value(0), revlex: Computed::Value(0) };
                if on(Oracle::Reg) {
                    status.insert(
                        "reg".into(),
                        Status::from_bool(reg_formula == 0, || "zero ideal with nonzero reg".into()),
                    );
                }
                if on(Oracle::CmType) {
                    status.insert(
                        "cm_type".into(),
                        Status::from_bool(gorenstein, || "polynomial ring must be Gorenstein".into()),
                    );
                }
            }
            (Ok(Some(l)), Ok(Some(r))) => {
                upper = UpperBounds { lex: Computed::Value(l.max_codim), revlex: Computed::Value(r.max_codim) };
                betti_sum = Some(l.summary);
                let pd = l.summary.pd;
                reg_bruteforce = Computed::Value(pd);
                cm_type = Computed::Value(l.summary.top_betti);
                if on(Oracle::Reg) {
                    let agree = l.betti == r.betti;
                    status.insert(
                        "reg".into(),
                        Status::from_bool(agree && pd == reg_formula, || {
                            format!("pd lex {} / revlex {} vs formula {reg_formula}", l.summary.pd, r.summary.pd)
                        }),
                    );
                }
                if on(Oracle::Linear) {
                    let needs = params.c() >= params.r() + params.d();
                    status.insert(
                        "linear".into(),
                        if needs {
                            Status::from_bool(l.summary.is_linear, || "dual resolution is not linear".into())
                        } else {
                            Status::Skipped("not applicable: c < r + d".into())
                        },
                    );
                }
                if on(Oracle::CmType) {
                    let t = l.summary.top_betti;
                    status.insert(
                        "cm_type".into(),
                        Status::from_bool((t == 1) == gorenstein, || {
                            let h = hv
                                .map_or(String::new(), |h| format!("; h-vector {:?}, symmetric {}", h.h, h.symmetric));
                            format!("top dual Betti number {t}, Gorenstein formula {gorenstein}{h}")
                        }),
                    );
                    if let Some(h) = hv {
                        status.insert(
                            "cm_type_vs_h_last".into(),
                            Status::from_bool(t as i64 == h.last, || {
                                format!("top dual Betti number {t}, last h entry {}", h.last)
                            }),
                        );
                    }
                }
                if on(Oracle::Taylor) {
                    status.insert("taylor".into(), taylor_status(&params, &budget, &l.betti));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                let st =
                    if e.is_budget() { Status::Skipped(format!("budget: {e}")) } else { Status::Fail(e.to_string()) };
                if e.is_budget() {
                    reg_bruteforce = Computed::budget();
                    cm_type = Computed::budget();
                    upper = UpperBounds { lex: Computed::budget(), revlex: Computed::budget() };
                }
                for o in [Oracle::Reg, Oracle::Linear, Oracle::CmType, Oracle::Taylor] {
                    if on(o) {
                        status.insert(o.name().into(), st.clone());
                    }
                }
            }
            _ => return Err(Error::internal("orderings disagree on degeneracy")),
        }
    }

    Ok(InvariantReport {
        params,
        reduced_params: params.reduced(),
        branch: branch(&params),
        p,
        q,
        dim_formula,
        dim_bruteforce,
        reg_formula,
        reg_bruteforce,
        a_invariant,
        reduction_number: formula_reduction_number(&params),
        gorenstein_formula: gorenstein,
        cm_type_bruteforce: cm_type,
        upper_bounds: upper,
        h_vector,
        betti: betti_sum,
        probabilistic: prime,
        verification_status: status,
    })
}

fn straightening_status(params: &ScrollParams, count: usize) -> Status {
    let table = MinorTable::new(*params);
    let vars = table.vars().clone();
    for (i, j) in sample_pairs(vars.len(), count) {
        let res = table.straighten(vars.get(i), vars.get(j)).and_then(|e| table.check_expansion(&e));
        match res {
            Ok(c) if c.ok() => {}
            Ok(c) => return Status::Fail(format!("{} * {}: {c:?}", vars.get(i), vars.get(j))),
            Err(e) => return Status::from_error(e),
        }
    }
    Status::Pass
}

fn relations_status(params: &ScrollParams) -> Status {
    let table = MinorTable::new(*params);
    let fiber = match table.fiber_relations(OrderKind::Lex) {
        Ok(f) => f,
        Err(e) => return Status::from_error(e),
    };
    let rees = table.rees_syzygy_relations();
    for set in [&fiber, &rees] {
        for rel in &set.relations {
            match table.relation_vanishes(rel) {
                Ok(true) => {}
                Ok(false) => return Status::Fail(format!("does not vanish: {}", set.render(rel))),
                Err(e) => return Status::from_error(e),
            }
        }
    }
    Status::Pass
}

fn colon_status(params: &ScrollParams, budget: &Budget) -> Status {
    if params.is_degenerate() {
        return Status::Skipped("not applicable: zero ideal".into());
    }
    let graph = match graph_within_budget(params, budget) {
        Ok(g) => g,
        Err(e) => return Status::from_error(e),
    };
    for kind in OrderKind::BOTH {
        let set = match enumerate_maximal_cliques(&graph, kind, budget.max_cliques) {
            Ok(s) => s,
            Err(e) => return Status::from_error(e),
        };
        let ours = match set.colon_all() {
            Ok(c) => c,
            Err(e) => return Status::Fail(e.to_string()),
        };
        let brute = set.colon_all_bruteforce();
        for (t, (a, b)) in ours.iter().zip(&brute).enumerate() {
            let mut x = a.minimal_generators.clone();
            let mut y = b.clone();
            x.sort();
            y.sort();
            if x != y {
                return Status::Fail(format!("{kind} clique {t} with moving sequence {:?}", set.cliques[t].moving));
            }
        }
    }
    Status::Pass
}

fn f0_status(params: &ScrollParams, budget: &Budget) -> Status {
    if params.is_degenerate() {
        return Status::Skipped("not applicable: zero ideal".into());
    }
    let run = || -> Result<Status> {
        let graph = graph_within_budget(params, budget)?;
        if matches!(graph.regime(), Regime::Principal | Regime::Complete) {
            return Ok(Status::Skipped("not applicable".into()));
        }
        let (f0, kind) = construct_f0(&graph)?;
        let set = enumerate_maximal_cliques(&graph, kind, budget.max_cliques)?;
        let colons = set.colon_all()?;
        let check = check_f0_conditions(&set, &colons, &f0)?;
        Ok(Status::from_bool(check.ok(), || format!("{kind} F_0 {:?}: {check:?}", f0.moving)))
    };
    run().unwrap_or_else(Status::from_error)
}

fn taylor_status(params: &ScrollParams, budget: &Budget, betti: &BettiTable) -> Status {
    let run = || -> Result<Status> {
        let graph = graph_within_budget(params, budget)?;
        let set = enumerate_maximal_cliques(&graph, OrderKind::Lex, budget.max_cliques)?;
        let oracle = taylor_betti::<Fp>(&set.dual_generators(), budget.taylor_bound)?;
        Ok(Status::from_bool(&oracle == betti, || {
            format!("Taylor totals {:?} vs cone {:?}", oracle.totals(), betti.totals())
        }))
    };
    run().unwrap_or_else(Status::from_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: usize, c: usize, d: usize) -> ScrollParams {
        ScrollParams::new(r, c, d).unwrap()
    }

    #[test]
    fn formulas_at_named_points() {
        assert_eq!(formula_dim(&p(3, 5, 1)), 7);
        assert_eq!(formula_dim(&p(3, 4, 1)), 4);
        assert_eq!(formula_dim(&p(3, 3, 2)), 1);
        assert_eq!(formula_reg(&p(2, 8, 1)), 4);
        assert_eq!(formula_reg(&p(3, 6, 1)), 4);
        assert_eq!(formula_reg(&p(3, 4, 1)), 0);
        assert_eq!(formula_a_invariant(&p(2, 8, 1)).unwrap(), -5);
        assert_eq!(formula_a_invariant(&p(3, 6, 1)).unwrap(), -4);
        assert_eq!(formula_a_invariant(&p(3, 4, 1)).unwrap(), -4);
        assert_eq!(formula_reduction_number(&p(3, 3, 2)), 0);
        assert_eq!(formula_reduction_number(&p(3, 5, 1)), 2);
        assert!(gorenstein_formula(&p(2, 5, 1)));
        assert!(!gorenstein_formula(&p(2, 8, 1)));
        assert!(gorenstein_formula(&p(3, 4, 1)));
    }

    #[test]
    fn quotient_remainder_convention() {
        // N - 1 = 8 = 4 * 2 + 0 is written as 3 * 2 + 2
        assert_eq!(quotient_remainder(&p(2, 8, 1)), (3, 2));
        assert_eq!(quotient_remainder(&p(3, 7, 1)), (2, 2));
    }
}
