//! Maximal cliques of the sorted-pair graph, their moving sequences, and the
//! complete-intersection colon ideals that drive the mapping-cone resolution
//! of the Alexander dual of the initial ideal of the fiber-cone relations.
//!
//! A clique `F` is stored as the chain `beta_1 > beta_2 > ...` of diagonal
//! indices, where consecutive members differ by `+1` in exactly one
//! coordinate (the movement). Generators of the dual ideal are the
//! complements `Y-hat^F`; they are ordered by `F1 > F2` iff `Y^F1 >_lex Y^F2`
//! for the chosen ordering of the Y-variables.

use std::collections::{BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::params::{DiagonalIndex, OrderKind, ScrollParams, YVars};
use crate::straighten::is_sorted_pair;
use crate::varset::{minimalize, VarSet, MAX_VARS};

/// Which combinatorial description of the maximal cliques applies, after
/// replacing `d` by `c - r` when `r + 1 < c < r + d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `c = r`: a single variable.
    Principal,
    /// `c = r + 1`: every pair is sorted, the graph is complete.
    Complete,
    /// `c = r + d`: cliques run from the first to the last variable and have
    /// `rd + 1` members.
    Boundary,
    /// `c > r + d`: cliques start at an index with first entry 1 and have
    /// `N` members.
    Generic,
}

/// The sorted-pair graph on the Y-variables.
#[derive(Debug, Clone)]
pub struct CliqueGraph {
    original: ScrollParams,
    params: ScrollParams,
    vars: YVars,
    adjacency: Vec<VarSet>,
}

impl CliqueGraph {
    /// Builds the graph for `params.reduced()`.
    pub fn new(params: ScrollParams) -> Result<Self> {
        let working = params.reduced();
        if working.n_y_vars() > MAX_VARS {
            return Err(Error::BudgetExceeded(format!(
                "{} Y-variables exceed the limit of {MAX_VARS}",
                working.n_y_vars()
            )));
        }
        let vars = YVars::new(working);
        let adjacency = build_adjacency(&vars);
        Ok(Self { original: params, params: working, vars, adjacency })
    }

    pub fn original(&self) -> &ScrollParams {
        &self.original
    }

    /// The parameters the graph is built on (reduced when applicable).
    pub fn params(&self) -> &ScrollParams {
        &self.params
    }

    pub fn vars(&self) -> &YVars {
        &self.vars
    }

    pub fn adjacency(&self) -> &[VarSet] {
        &self.adjacency
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn regime(&self) -> Regime {
        let p = &self.params;
        if p.c() == p.r() {
            Regime::Principal
        } else if p.c() == p.r() + 1 {
            Regime::Complete
        } else if p.c() == p.r() + p.d() {
            Regime::Boundary
        } else {
            Regime::Generic
        }
    }

    /// Number of members of every maximal clique.
    pub fn clique_size(&self) -> usize {
        match self.regime() {
            Regime::Principal | Regime::Complete => self.vars.len(),
            Regime::Boundary => self.params.r() * self.params.d() + 1,
            Regime::Generic => self.params.n_vars(),
        }
    }

    /// The end of a clique that starts at `start`, when it is determined.
    fn end_for(&self, start: &[usize]) -> Option<Vec<usize>> {
        match self.regime() {
            Regime::Boundary => Some(self.params.last_index().entries().to_vec()),
            Regime::Generic => {
                let mut end = start[1..].to_vec();
                end.push(self.params.n_vars());
                Some(end)
            }
            _ => None,
        }
    }

    fn is_chain(&self, v: &[usize]) -> bool {
        v.first().is_some_and(|&a| a >= 1)
            && v.last().is_some_and(|&a| a <= self.params.n_vars())
            && v.windows(2).all(|w| w[0] + self.params.d() < w[1])
    }

    fn id(&self, entries: &[usize]) -> Result<usize> {
        self.vars
            .id_of_entries(entries)
            .ok_or_else(|| Error::InvalidIndex { index: entries.to_vec(), reason: "not a <_d-chain in range".into() })
    }

    fn clique_from_ids(&self, ids: Vec<usize>, moving: Vec<usize>) -> MaximalClique {
        let members = ids.iter().map(|&i| self.vars.get(i).clone()).collect();
        let set = ids.iter().copied().collect();
        MaximalClique { members, ids, moving, set }
    }

    /// Rebuilds the clique with the given start and moving sequence, checking
    /// every condition characterizing maximal cliques.
    pub fn clique_from_moving_sequence(&self, start: &DiagonalIndex, moving: &[usize]) -> Result<MaximalClique> {
        let bad = |msg: String| Error::InvalidParams(format!("illegal moving sequence: {msg}"));
        let r = self.params.r();
        let mut cur = start.entries().to_vec();
        if !self.is_chain(&cur) {
            return Err(bad(format!("start {cur:?} is not a chain")));
        }
        match self.regime() {
            Regime::Generic if cur[0] != 1 => return Err(bad("start must begin with 1".into())),
            Regime::Boundary if cur != self.params.first_index().entries() => {
                return Err(bad("start must be the first variable".into()))
            }
            _ => {}
        }
        if moving.len() + 1 != self.clique_size() {
            return Err(bad(format!("length {} instead of {}", moving.len(), self.clique_size() - 1)));
        }
        let mut ids = vec![self.id(&cur)?];
        for (step, &j) in moving.iter().enumerate() {
            if j == 0 || j > r {
                return Err(bad(format!("movement {j} out of range")));
            }
            cur[j - 1] += 1;
            if !self.is_chain(&cur) {
                return Err(bad(format!("step {} leaves the chains at {cur:?}", step + 1)));
            }
            ids.push(self.id(&cur)?);
        }
        if let Some(end) = self.end_for(start.entries()) {
            if cur != end {
                return Err(bad(format!("ends at {cur:?} instead of {end:?}")));
            }
        }
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                if !self.has_edge(i, j) {
                    return Err(bad(format!("{} and {} are not sorted", self.vars.get(i), self.vars.get(j))));
                }
            }
        }
        Ok(self.clique_from_ids(ids, moving.to_vec()))
    }

    /// Starts of maximal cliques, in canonical order.
    fn starts(&self) -> Vec<Vec<usize>> {
        match self.regime() {
            Regime::Boundary => vec![self.params.first_index().entries().to_vec()],
            Regime::Generic => self
                .vars
                .all()
                .iter()
                .map(|a| a.entries().to_vec())
                .filter(|a| a[0] == 1 && self.end_for(a).is_some_and(|e| self.is_chain(&e)))
                .collect(),
            _ => vec![],
        }
    }

    /// All maximal cliques, unordered, by enumerating legal moving sequences.
    fn enumerate_unordered(&self, max_cliques: usize) -> Result<Vec<MaximalClique>> {
        if matches!(self.regime(), Regime::Principal | Regime::Complete) {
            let ids: Vec<usize> = (0..self.vars.len()).collect();
            let moving = single_steps(&self.vars, &ids).unwrap_or_default();
            return Ok(vec![self.clique_from_ids(ids, moving)]);
        }
        let r = self.params.r();
        let d = self.params.d();
        let mut out = Vec::new();
        for start in self.starts() {
            let end = self.end_for(&start).expect("regime has fixed ends");
            let mut remaining: Vec<usize> = (0..r).map(|j| end[j] - start[j]).collect();
            let mut cur = start.clone();
            let mut moves = Vec::new();
            let mut ids = vec![self.id(&cur)?];
            self.dfs(d, &mut cur, &mut remaining, &mut moves, &mut ids, &mut out, max_cliques)?;
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        d: usize,
        cur: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        moves: &mut Vec<usize>,
        ids: &mut Vec<usize>,
        out: &mut Vec<MaximalClique>,
        max_cliques: usize,
    ) -> Result<()> {
        let r = cur.len();
        if remaining.iter().all(|&x| x == 0) {
            if out.len() >= max_cliques {
                return Err(Error::BudgetExceeded(format!("more than {max_cliques} maximal cliques")));
            }
            out.push(self.clique_from_ids(ids.clone(), moves.clone()));
            return Ok(());
        }
        for j in 0..r {
            if remaining[j] == 0 || (j + 1 < r && cur[j] + 1 + d >= cur[j + 1]) {
                continue;
            }
            cur[j] += 1;
            remaining[j] -= 1;
            moves.push(j + 1);
            ids.push(self.id(cur)?);
            let res = self.dfs(d, cur, remaining, moves, ids, out, max_cliques);
            ids.pop();
            moves.pop();
            remaining[j] += 1;
            cur[j] -= 1;
            res?;
        }
        Ok(())
    }

    /// The clique obtained from `start` by scanning movements `1..=r` in
    /// rounds, taking every legal one.
    pub fn greedy_clique(&self, start: &DiagonalIndex) -> Result<MaximalClique> {
        let end = self
            .end_for(start.entries())
            .ok_or_else(|| Error::InvalidParams("greedy cliques need c >= r + d and c > r + 1".into()))?;
        let r = self.params.r();
        let d = self.params.d();
        let mut cur = start.entries().to_vec();
        let mut remaining: Vec<usize> = (0..r)
            .map(|j| {
                end[j].checked_sub(cur[j]).ok_or_else(|| Error::InvalidParams(format!("start {start} is past its end")))
            })
            .collect::<Result<_>>()?;
        let mut moves = Vec::new();
        while remaining.iter().any(|&x| x > 0) {
            let before = moves.len();
            for j in 0..r {
                if remaining[j] > 0 && (j + 1 == r || cur[j] + 1 + d < cur[j + 1]) {
                    cur[j] += 1;
                    remaining[j] -= 1;
                    moves.push(j + 1);
                }
            }
            if moves.len() == before {
                return Err(Error::internal(format!("greedy scan stuck at {cur:?}")));
            }
        }
        self.clique_from_moving_sequence(start, &moves)
    }

    /// The start determined by a moving sequence through the counts of each
    /// movement (first entry 1).
    pub fn start_from_moving(&self, moving: &[usize]) -> Result<DiagonalIndex> {
        let r = self.params.r();
        let mut start = vec![1usize];
        for t in 1..r {
            let count = moving.iter().filter(|&&j| j == t).count();
            start.push(start[t - 1] + count);
        }
        DiagonalIndex::new(&self.params, start)
    }
}

fn build_adjacency(vars: &YVars) -> Vec<VarSet> {
    let m = vars.len();
    let mut adj = vec![VarSet::EMPTY; m];
    for i in 0..m {
        for j in i + 1..m {
            if is_sorted_pair(vars.get(i), vars.get(j)) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

/// Adjacency of the sorted-pair graph over canonical Y-ids.
pub fn build_graph(params: &ScrollParams) -> Result<Vec<VarSet>> {
    Ok(CliqueGraph::new(*params)?.adjacency)
}

/// Moving sequence of a chain of ids, if consecutive members differ by a
/// single `+1` step.
fn single_steps(vars: &YVars, ids: &[usize]) -> Option<Vec<usize>> {
    ids.windows(2)
        .map(|w| {
            let (a, b) = (vars.get(w[0]).entries(), vars.get(w[1]).entries());
            let diffs: Vec<usize> = (0..a.len()).filter(|&k| a[k] != b[k]).collect();
            (diffs.len() == 1 && b[diffs[0]] == a[diffs[0]] + 1).then(|| diffs[0] + 1)
        })
        .collect()
}

/// A maximal clique as a chain `beta_1 > beta_2 > ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalClique {
    pub members: Vec<DiagonalIndex>,
    /// Canonical Y-ids of the members, in chain order.
    pub ids: Vec<usize>,
    /// Movement `j_k` between members `k` and `k+1` (1-based positions).
    /// Empty for the complete-graph regimes where members are not single steps.
    pub moving: Vec<usize>,
    pub set: VarSet,
}

impl MaximalClique {
    pub fn start(&self) -> &DiagonalIndex {
        &self.members[0]
    }

    /// `Y^F` with bits placed by variable rank, so that integer comparison is
    /// the lex comparison of the monomials.
    pub fn order_key(&self, vars: &YVars, kind: OrderKind) -> u128 {
        self.ids.iter().fold(0u128, |acc, &i| acc | 1u128 << vars.rank(kind, i))
    }
}

/// Maximal cliques sorted by the `>` order on the dual generators, largest
/// first.
#[derive(Debug, Clone)]
pub struct CliqueSet {
    pub graph: CliqueGraph,
    pub kind: OrderKind,
    pub cliques: Vec<MaximalClique>,
}

/// Enumerates and orders all maximal cliques.
pub fn enumerate_maximal_cliques(graph: &CliqueGraph, kind: OrderKind, max_cliques: usize) -> Result<CliqueSet> {
    let mut cliques = graph.enumerate_unordered(max_cliques)?;
    cliques.sort_by_cached_key(|f| std::cmp::Reverse(f.order_key(graph.vars(), kind)));
    Ok(CliqueSet { graph: graph.clone(), kind, cliques })
}

impl CliqueSet {
    pub fn reorder(&self, kind: OrderKind) -> CliqueSet {
        let mut cliques = self.cliques.clone();
        cliques.sort_by_cached_key(|f| std::cmp::Reverse(f.order_key(self.graph.vars(), kind)));
        CliqueSet { graph: self.graph.clone(), kind, cliques }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// The generators `Y-hat^F` of the Alexander dual, in order.
    pub fn dual_generators(&self) -> Vec<VarSet> {
        let n = self.graph.vars().len();
        self.cliques.iter().map(|f| f.set.complement(n)).collect()
    }

    /// Colon data for every clique by the combinatorial description.
    pub fn colon_all(&self) -> Result<Vec<ColonData>> {
        self.cliques
            .iter()
            .enumerate()
            .map(|(t, f)| colon_combinatorial_at(&self.graph, f, self.kind, t == 0))
            .collect()
    }

    /// Colon ideals by direct monomial division against all predecessors.
    pub fn colon_all_bruteforce(&self) -> Vec<Vec<VarSet>> {
        let duals = self.dual_generators();
        (0..duals.len()).map(|t| colon_bruteforce(&duals[..t], duals[t])).collect()
    }

    pub fn position(&self, f: &MaximalClique) -> Option<usize> {
        self.cliques.iter().position(|g| g.set == f.set)
    }

    pub fn find_by_members(&self, entries: &[&[usize]]) -> Option<&MaximalClique> {
        let vars = self.graph.vars();
        let set: Option<VarSet> = entries.iter().map(|e| vars.id_of_entries(e)).collect();
        let set = set?;
        self.cliques.iter().find(|f| f.set == set)
    }

    /// JSON dump of every clique with its colon data.
    pub fn to_json(&self, colons: &[ColonData]) -> Value {
        let vars = self.graph.vars();
        let name = |i: usize| vars.get(i).to_string();
        let names = |s: VarSet| s.iter().map(name).collect::<Vec<_>>();
        let cliques: Vec<Value> = self
            .cliques
            .iter()
            .zip(colons)
            .map(|(f, c)| {
                json!({
                    "members": f.ids.iter().map(|&i| name(i)).collect::<Vec<_>>(),
                    "moving": f.moving,
                    "corners": c.corners.iter().map(|&i| name(i)).collect::<Vec<_>>(),
                    "tail": c.tail.as_ref().map(|t| json!({
                        "special_k": t.special_k,
                        "delta_k": t.delta_k,
                        "members": t.h.iter().map(|&i| name(i)).collect::<Vec<_>>(),
                        "canceled": !c.minimal_generators.contains(&t.monomial),
                    })),
                    "generators": c.minimal_generators.iter().map(|&g| names(g).join("*")).collect::<Vec<_>>(),
                    "codim": c.codim,
                    "essential": names(c.essential),
                })
            })
            .collect();
        json!({
            "params": { "r": self.graph.original().r(), "c": self.graph.original().c(), "d": self.graph.original().d() },
            "working_params": { "r": self.graph.params().r(), "c": self.graph.params().c(), "d": self.graph.params().d() },
            "order": self.kind.name(),
            "cliques": cliques,
        })
    }
}

/// Maximal cliques of an arbitrary graph (Bron–Kerbosch with pivoting).
pub fn bron_kerbosch(adjacency: &[VarSet]) -> Vec<VarSet> {
    fn go(adj: &[VarSet], r: VarSet, mut p: VarSet, mut x: VarSet, out: &mut Vec<VarSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p.lcm(x).iter().max_by_key(|&u| adj[u].gcd(p).len()).expect("nonempty");
        for v in p.colon(adj[pivot]).iter() {
            let mut rv = r;
            rv.insert(v);
            go(adj, rv, p.gcd(adj[v]), x.gcd(adj[v]), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    go(adjacency, VarSet::EMPTY, VarSet::full(adjacency.len()), VarSet::EMPTY, &mut out);
    out.sort();
    out
}

/// Minimal vertex covers of the complement graph, i.e. complements of
/// maximal cliques, found by a search that never looks at cliques.
pub fn minimal_vertex_covers_of_complement(adjacency: &[VarSet]) -> Vec<VarSet> {
    let n = adjacency.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !adjacency[i].contains(j)).collect();
    fn go(edges: &[(usize, usize)], cover: VarSet, out: &mut BTreeSet<VarSet>) {
        match edges.iter().find(|&&(a, b)| !cover.contains(a) && !cover.contains(b)) {
            None => {
                out.insert(cover);
            }
            Some(&(a, b)) => {
                let mut ca = cover;
                ca.insert(a);
                go(edges, ca, out);
                let mut cb = cover;
                cb.insert(b);
                go(edges, cb, out);
            }
        }
    }
    let mut all = BTreeSet::new();
    go(&edges, VarSet::EMPTY, &mut all);
    let mut covers = minimalize(all);
    covers.sort();
    covers
}

/// The tail generator of a colon ideal: the product of the members from
/// position `delta_k` (1-based) to the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub special_k: usize,
    pub delta_k: usize,
    pub h: Vec<usize>,
    pub monomial: VarSet,
}

/// The colon ideal `(Y-hat^F' : F' > F) : Y-hat^F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonData {
    pub corners: Vec<usize>,
    pub tail: Option<Tail>,
    pub minimal_generators: Vec<VarSet>,
    pub codim: usize,
    pub essential: VarSet,
}

/// Corner generators: members after a swappable pair of movements.
pub fn corner_generators(graph: &CliqueGraph, f: &MaximalClique, kind: OrderKind) -> Vec<usize> {
    let mut out = Vec::new();
    let m = &f.moving;
    for k in 0..m.len().saturating_sub(1) {
        let accept = match kind {
            OrderKind::Lex => m[k] < m[k + 1],
            OrderKind::Revlex => {
                m[k] > m[k + 1] && {
                    let mut swapped = m.clone();
                    swapped.swap(k, k + 1);
                    graph.clique_from_moving_sequence(f.start(), &swapped).is_ok()
                }
            }
        };
        if accept {
            out.push(f.ids[k + 1]);
        }
    }
    out
}

/// The tail generator, when the clique does not start at the first variable.
pub fn tail_generator(graph: &CliqueGraph, f: &MaximalClique) -> Option<Tail> {
    if graph.regime() != Regime::Generic || f.start() == &graph.params().first_index() {
        return None;
    }
    let p = graph.params();
    let (r, d) = (p.r(), p.d());
    let beta = &f.members;
    let last = beta.last().expect("nonempty clique").entries();
    // delta_j: first position whose coordinates j..r-1 agree with the end
    let delta = |j: usize| -> usize {
        beta.iter().position(|b| b.entries()[j - 1..r - 1] == last[j - 1..r - 1]).expect("the end itself agrees") + 1
    };
    for k in 1..r {
        let dk = delta(k);
        if dk < 2 {
            continue;
        }
        if k + k * d < beta[dk - 2].entries()[k - 1] {
            let h: Vec<usize> = f.ids[dk - 1..].to_vec();
            let monomial = h.iter().copied().collect();
            return Some(Tail { special_k: k, delta_k: dk, h, monomial });
        }
    }
    None
}

fn colon_combinatorial_at(
    graph: &CliqueGraph,
    f: &MaximalClique,
    kind: OrderKind,
    is_first: bool,
) -> Result<ColonData> {
    if is_first {
        return Ok(ColonData { corners: vec![], tail: None, minimal_generators: vec![], codim: 0, essential: f.set });
    }
    let corners = corner_generators(graph, f, kind);
    let tail = tail_generator(graph, f);
    let mut gens: Vec<VarSet> = corners.iter().map(|&i| VarSet::singleton(i)).collect();
    if let Some(t) = &tail {
        if !corners.iter().any(|&c| t.monomial.contains(c)) {
            gens.push(t.monomial);
        }
    }
    let gens = minimalize(gens);
    for (i, a) in gens.iter().enumerate() {
        if gens[i + 1..].iter().any(|b| !a.is_coprime(*b)) {
            return Err(Error::internal("colon generators are not pairwise coprime"));
        }
    }
    let support = gens.iter().fold(VarSet::EMPTY, |acc, g| acc.lcm(*g));
    Ok(ColonData { codim: gens.len(), essential: f.set.colon(support), corners, tail, minimal_generators: gens })
}

/// Colon data of `f`; `all_cliques` must be ordered by `>` so that the first
/// clique (with empty colon) can be recognized.
pub fn colon_combinatorial(set: &CliqueSet, f: &MaximalClique) -> Result<ColonData> {
    let is_first = set.cliques.first().is_some_and(|g| g.set == f.set);
    colon_combinatorial_at(&set.graph, f, set.kind, is_first)
}

/// Minimal generators of `<predecessors> : current` for squarefree monomials.
pub fn colon_bruteforce(predecessors: &[VarSet], current: VarSet) -> Vec<VarSet> {
    minimalize(predecessors.iter().map(|p| p.colon(current)))
}

/// Ordering kind used by the special clique of each regime.
pub fn f0_order_kind(params: &ScrollParams) -> Option<OrderKind> {
    let p = params.reduced();
    let (r, c, d) = (p.r(), p.c(), p.d());
    if c <= r + 1 {
        None
    } else if c >= 2 * r + d || c <= r + d + 1 {
        Some(OrderKind::Lex)
    } else {
        Some(OrderKind::Revlex)
    }
}

/// The moving sequence `(r, ..., 2), d x (r, ..., 1), (r-1, ..., 1)`.
fn revlex_base_moves(r: usize, d: usize) -> Vec<usize> {
    let mut m: Vec<usize> = (2..=r).rev().collect();
    for _ in 0..d {
        m.extend((1..=r).rev());
    }
    m.extend((1..r).rev());
    m
}

/// Splits a sequence into maximal strictly decreasing runs.
pub fn decreasing_runs(moves: &[usize]) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &m in moves {
        match runs.last_mut() {
            Some(run) if *run.last().expect("runs are nonempty") > m => run.push(m),
            _ => runs.push(vec![m]),
        }
    }
    runs
}

/// Splits a sequence into maximal strictly increasing runs.
pub fn increasing_runs(moves: &[usize]) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &m in moves {
        match runs.last_mut() {
            Some(run) if *run.last().expect("runs are nonempty") < m => run.push(m),
            _ => runs.push(vec![m]),
        }
    }
    runs
}

/// Lifts a moving sequence for `(r, c, d)` to one for `(r+1, c+1, d)`: a
/// lone `r+1`, then the first `d` decreasing runs each prefixed by `r+1`, then
/// the remaining runs unchanged.
pub fn lift_moving_sequence(moves: &[usize], r: usize, d: usize) -> Vec<usize> {
    let mut out = vec![r + 1];
    for (i, run) in decreasing_runs(moves).into_iter().enumerate() {
        if i < d {
            out.push(r + 1);
        }
        out.extend(run);
    }
    out
}

/// The special clique `F_0` of each regime together with the ordering kind
/// it is meant for.
pub fn construct_f0(graph: &CliqueGraph) -> Result<(MaximalClique, OrderKind)> {
    let p = *graph.params();
    let (r, c, d) = (p.r(), p.c(), p.d());
    let n = p.n_vars();
    let from_moves = |moves: Vec<usize>| -> Result<MaximalClique> {
        let start = graph.start_from_moving(&moves)?;
        graph.clique_from_moving_sequence(&start, &moves)
    };
    match graph.regime() {
        Regime::Principal | Regime::Complete => {
            Err(Error::InvalidParams(format!("{p}: the fiber cone is a polynomial ring, no special clique")))
        }
        Regime::Boundary => Ok((graph.greedy_clique(&p.first_index())?, OrderKind::Lex)),
        Regime::Generic if c >= 2 * r + d => {
            let q = (n - 2) % r + 1;
            let pp = (n - 1 - q) / r;
            let mut moves = Vec::new();
            for _ in 0..pp {
                moves.extend(1..=r);
            }
            moves.extend(1..=q);
            Ok((from_moves(moves)?, OrderKind::Lex))
        }
        Regime::Generic if c == r + d + 1 => Ok((graph.greedy_clique(&p.first_index())?, OrderKind::Lex)),
        Regime::Generic => {
            // r + d + 1 < c <= 2r + d - 1, hence r >= 3
            let eps = 2 * r + d - 1 - c;
            let r0 = r - eps;
            let mut moves = revlex_base_moves(r0, d);
            for step in 0..eps {
                moves = lift_moving_sequence(&moves, r0 + step, d);
            }
            Ok((from_moves(moves)?, OrderKind::Revlex))
        }
    }
}

/// Outcome of checking the three conditions on a candidate `F_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F0Check {
    pub c1_max_codim: bool,
    pub c2_unique_essential: bool,
    pub c3_no_cover: bool,
}

impl F0Check {
    pub fn ok(&self) -> bool {
        self.c1_max_codim && self.c2_unique_essential && self.c3_no_cover
    }
}

/// Checks the conditions on `f0` by scanning all cliques and their colon
/// data (`colons[t]` belongs to `set.cliques[t]`).
pub fn check_f0_conditions(set: &CliqueSet, colons: &[ColonData], f0: &MaximalClique) -> Result<F0Check> {
    let t0 = set.position(f0).ok_or_else(|| Error::InvalidParams("F_0 is not a maximal clique".into()))?;
    let max = colons.iter().skip(1).map(|c| c.codim).max().unwrap_or(0);
    let ess0 = colons[t0].essential;
    let c1 = colons[t0].codim == max;
    let c2 = !colons.iter().enumerate().any(|(t, c)| t != t0 && c.essential == ess0);
    let c3 = !colons
        .iter()
        .any(|c| c.minimal_generators.iter().any(|&g| c.essential.is_coprime(g) && c.essential.lcm(g) == ess0));
    Ok(F0Check { c1_max_codim: c1, c2_unique_essential: c2, c3_no_cover: c3 })
}

/// Largest colon codimension over all cliques but the first.
pub fn max_codim(colons: &[ColonData]) -> usize {
    colons.iter().skip(1).map(|c| c.codim).max().unwrap_or(0)
}

/// Cliques grouped by start, for comparing the greedy clique against every
/// clique with the same start.
pub fn cliques_by_start(set: &CliqueSet) -> HashMap<DiagonalIndex, Vec<&MaximalClique>> {
    let mut map: HashMap<DiagonalIndex, Vec<&MaximalClique>> = HashMap::new();
    for f in &set.cliques {
        map.entry(f.start().clone()).or_default().push(f);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_and_lift() {
        assert_eq!(decreasing_runs(&[3, 3, 2, 2, 1, 1]), vec![vec![3], vec![3, 2], vec![2, 1], vec![1]]);
        assert_eq!(increasing_runs(&[3, 3, 2, 2, 2, 3, 1, 1]).len(), 7);
        assert_eq!(lift_moving_sequence(&[3, 3, 2, 2, 1, 1], 3, 1), vec![4, 4, 3, 3, 2, 2, 1, 1]);
        assert_eq!(revlex_base_moves(3, 1), vec![3, 2, 3, 2, 1, 2, 1]);
    }
}
