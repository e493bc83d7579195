//! Multigraded free resolutions of squarefree monomial ideals: Koszul and
//! Taylor complexes, iterated mapping cones along linear quotients, and
//! minimization by cancelling unit entries.
//!
//! A [`FreeComplex`] resolves `R/J`. Its basis elements carry squarefree
//! multidegree labels, and a differential entry from a basis element labelled
//! `a` to one labelled `b` is `coefficient * Y^(a \ b)`. Only coefficients are
//! stored; homogeneity makes the monomial part implicit.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::clique::{CliqueSet, ColonData};
use crate::error::{Error, Result};
use crate::linalg::{solve, Field, SparseEliminator};
use crate::params::{YMonomial, YVars};
use crate::varset::VarSet;

/// Sparse column: row index to coefficient.
pub type Column<F> = BTreeMap<usize, F>;

#[derive(Debug, Clone, PartialEq)]
pub struct FreeComplex<F: Field = BigRational> {
    modules: Vec<Vec<VarSet>>,
    /// `diffs[i]` maps `modules[i]` to `modules[i - 1]`; `diffs[0]` is empty.
    diffs: Vec<Vec<Column<F>>>,
}

impl<F: Field> FreeComplex<F> {
    /// Builds a complex, checking shapes and multidegree homogeneity.
    pub fn new(modules: Vec<Vec<VarSet>>, diffs: Vec<Vec<Column<F>>>) -> Result<Self> {
        if modules.len() != diffs.len() {
            return Err(Error::internal("one differential per homological degree expected"));
        }
        let c = Self { modules, diffs };
        c.check_shape()?;
        Ok(c)
    }

    fn check_shape(&self) -> Result<()> {
        if !self.diffs.first().is_none_or(Vec::is_empty) {
            return Err(Error::internal("degree 0 has no differential"));
        }
        for i in 1..self.modules.len() {
            if self.diffs[i].len() != self.modules[i].len() {
                return Err(Error::internal(format!("differential {i} has the wrong number of columns")));
            }
            for (j, col) in self.diffs[i].iter().enumerate() {
                for &k in col.keys() {
                    let Some(&row) = self.modules[i - 1].get(k) else {
                        return Err(Error::internal(format!("differential {i} row {k} out of range")));
                    };
                    if !row.divides(self.modules[i][j]) {
                        return Err(Error::internal(format!("differential {i} entry ({k},{j}) is not homogeneous")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Highest homological degree.
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn labels(&self, i: usize) -> &[VarSet] {
        self.modules.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, i: usize) -> &[Column<F>] {
        self.diffs.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.modules.iter().map(Vec::len).sum()
    }

    /// Label of a basis element as a Y-monomial.
    pub fn label_monomial(&self, i: usize, j: usize) -> YMonomial {
        YMonomial::from_ids(self.modules[i][j].iter())
    }

    /// Monomial part of a differential entry.
    pub fn entry_monomial(&self, i: usize, row: usize, col: usize) -> YMonomial {
        YMonomial::from_ids(self.modules[i][col].quotient(self.modules[i - 1][row]).iter())
    }

    /// Whether `d_{i-1} d_i = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (2..self.modules.len()).all(|i| {
            self.diffs[i].iter().all(|col| {
                let mut acc: Column<F> = BTreeMap::new();
                for (&k, a) in col {
                    for (&r, b) in &self.diffs[i - 1][k] {
                        let e = acc.entry(r).or_insert_with(F::zero);
                        *e = e.add(&a.mul(b));
                    }
                }
                acc.values().all(F::is_zero)
            })
        })
    }

    /// Dimensions of the homology of the complex in multidegree `b`: the
    /// strand spanned by basis elements whose labels divide `b`.
    pub fn homology_at(&self, b: VarSet) -> Vec<usize> {
        let n = self.modules.len();
        let index: Vec<BTreeMap<usize, usize>> = self
            .modules
            .iter()
            .map(|m| m.iter().enumerate().filter(|(_, l)| l.divides(b)).enumerate().map(|(s, (j, _))| (j, s)).collect())
            .collect();
        let mut ranks = vec![0usize; n + 1];
        for i in 1..n {
            let mut e = SparseEliminator::<F>::new();
            for &j in index[i].keys() {
                let col: Column<F> = self.diffs[i][j].iter().map(|(k, v)| (index[i - 1][k], v.clone())).collect();
                e.insert(col);
            }
            ranks[i] = e.rank();
        }
        (0..n).map(|i| index[i].len() - ranks[i] - ranks[i + 1]).collect()
    }

    /// Whether the complex resolves `R/J` in multidegree `b`, where `J` is
    /// generated by `gens`.
    pub fn is_exact_at(&self, b: VarSet, gens: &[VarSet]) -> bool {
        let h = self.homology_at(b);
        let expected_h0 = usize::from(!gens.iter().any(|g| g.divides(b)));
        h.first().copied().unwrap_or(0) == expected_h0 && h.iter().skip(1).all(|&x| x == 0)
    }

    /// Alternating sum of strand dimensions in multidegree `b`.
    pub fn euler_characteristic_at(&self, b: VarSet) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let n = m.iter().filter(|l| l.divides(b)).count() as i64;
                if i % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Graded Betti numbers of `J`, read off a minimal complex resolving `R/J`.
    pub fn ideal_betti_table(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, m) in self.modules.iter().enumerate().skip(1) {
            for l in m {
                *t.entries.entry((i - 1, l.len())).or_insert(0) += 1;
            }
        }
        t
    }

    fn drop_trailing_zeros(&mut self) {
        while self.modules.len() > 1 && self.modules.last().is_some_and(Vec::is_empty) {
            self.modules.pop();
            self.diffs.pop();
        }
    }
}

/// Taylor resolution of `R/(gens)`, shifted by `shift`.
pub fn taylor_complex<F: Field>(gens: &[VarSet], shift: VarSet) -> Result<FreeComplex<F>> {
    if gens.len() > 24 {
        return Err(Error::BudgetExceeded(format!("Taylor complex on {} generators", gens.len())));
    }
    if gens.iter().any(|g| !g.is_coprime(shift)) {
        return Err(Error::NotCoprime);
    }
    let n = gens.len();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let position: Vec<BTreeMap<u32, usize>> =
        by_size.iter().map(|v| v.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
    let label = |mask: u32| (0..n).filter(|&s| mask >> s & 1 == 1).fold(shift, |acc, s| acc.lcm(gens[s]));
    let modules: Vec<Vec<VarSet>> = by_size.iter().map(|v| v.iter().map(|&m| label(m)).collect()).collect();
    let mut diffs = vec![Vec::new()];
    for i in 1..=n {
        let cols = by_size[i]
            .iter()
            .map(|&mask| {
                let mut col = BTreeMap::new();
                for (p, s) in (0..n).filter(|&s| mask >> s & 1 == 1).enumerate() {
                    let sign = if p % 2 == 0 { F::one() } else { F::one().neg() };
                    col.insert(position[i - 1][&(mask & !(1 << s))], sign);
                }
                col
            })
            .collect();
        diffs.push(cols);
    }
    FreeComplex::new(modules, diffs)
}

/// Koszul resolution of `R/(gens)` for pairwise coprime squarefree
/// generators, shifted by `shift`.
pub fn koszul_complex<F: Field>(gens: &[VarSet], shift: VarSet) -> Result<FreeComplex<F>> {
    for (i, a) in gens.iter().enumerate() {
        if a.is_empty() || gens[i + 1..].iter().any(|b| !a.is_coprime(*b)) {
            return Err(Error::NotCoprime);
        }
    }
    taylor_complex(gens, shift)
}

/// Solves `d_G x = target` in the strand of multidegree `m`, with `x`
/// supported on basis elements of `G_j`.
fn lift<F: Field>(g: &FreeComplex<F>, j: usize, m: VarSet, target: &Column<F>) -> Result<Column<F>> {
    if target.is_empty() {
        return Ok(Column::new());
    }
    let unknowns: Vec<usize> = (0..g.labels(j).len()).filter(|&b| g.labels(j)[b].divides(m)).collect();
    let d = g.differential(j);
    let rows: BTreeSet<usize> =
        unknowns.iter().flat_map(|&b| d[b].keys().copied()).chain(target.keys().copied()).collect();
    let row_pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
    let mut a = vec![vec![F::zero(); unknowns.len()]; rows.len()];
    for (u, &b) in unknowns.iter().enumerate() {
        for (r, v) in &d[b] {
            a[row_pos[r]][u] = v.clone();
        }
    }
    let mut rhs = vec![F::zero(); rows.len()];
    for (r, v) in target {
        rhs[row_pos[r]] = v.clone();
    }
    let x = solve(&a, &rhs).ok_or_else(|| Error::internal("comparison map does not lift; complex is not exact"))?;
    Ok(unknowns.into_iter().zip(x).filter(|(_, v)| !v.is_zero()).collect())
}

/// Applies a map given by columns to a sparse vector.
fn apply<F: Field>(map: &[Column<F>], v: &Column<F>) -> Column<F> {
    let mut out: Column<F> = BTreeMap::new();
    for (&k, a) in v {
        for (&r, b) in &map[k] {
            let e = out.entry(r).or_insert_with(F::zero);
            *e = e.add(&a.mul(b));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Mapping cone of the lift of multiplication by the generator of `k`'s
/// degree-0 module into `g`.
fn mapping_cone<F: Field>(g: &FreeComplex<F>, k: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    if k.labels(0).len() != 1 || g.labels(0) != [VarSet::EMPTY] {
        return Err(Error::internal("mapping cone expects cyclic complexes"));
    }
    // phi[j]: K_j -> G_j
    let mut phi: Vec<Vec<Column<F>>> = vec![vec![BTreeMap::from([(0, F::one())])]];
    for j in 1..=k.length() {
        let mut cols = Vec::with_capacity(k.labels(j).len());
        for (e, col) in k.differential(j).iter().enumerate() {
            let target = apply(&phi[j - 1], col);
            cols.push(lift(g, j, k.labels(j)[e], &target)?);
        }
        phi.push(cols);
    }
    let len = g.length().max(k.length() + 1);
    let mut modules = Vec::with_capacity(len + 1);
    let mut diffs = Vec::with_capacity(len + 1);
    for i in 0..=len {
        let gi = g.labels(i);
        let ki = if i >= 1 { k.labels(i - 1) } else { &[] };
        modules.push(gi.iter().chain(ki).copied().collect::<Vec<_>>());
        if i == 0 {
            diffs.push(Vec::new());
            continue;
        }
        let offset = g.labels(i - 1).len();
        let mut cols: Vec<Column<F>> = g.differential(i).to_vec();
        // K has no module i - 1 past its length, and then phi has no entry either
        #[allow(clippy::needless_range_loop)]
        for e in 0..ki.len() {
            let mut col = phi[i - 1][e].clone();
            if i >= 2 {
                for (&r, v) in &k.differential(i - 1)[e] {
                    col.insert(offset + r, v.neg());
                }
            }
            cols.push(col);
        }
        diffs.push(cols);
    }
    let mut c = FreeComplex { modules, diffs };
    c.drop_trailing_zeros();
    Ok(c)
}

/// Free resolution of `R/J` for `J = (duals)` by iterated mapping cones,
/// where `colons[t]` generates `(duals[..t]) : duals[t]`. Colons that are not
/// complete intersections are resolved by their Taylor complex.
pub fn mapping_cone_resolution<F: Field>(duals: &[VarSet], colons: &[Vec<VarSet>]) -> Result<FreeComplex<F>> {
    if duals.len() != colons.len() {
        return Err(Error::internal("one colon ideal per generator expected"));
    }
    let mut g = FreeComplex { modules: vec![vec![VarSet::EMPTY]], diffs: vec![Vec::new()] };
    for (t, (&gen, colon)) in duals.iter().zip(colons).enumerate() {
        let k = if t == 0 {
            FreeComplex { modules: vec![vec![gen]], diffs: vec![Vec::new()] }
        } else {
            match koszul_complex(colon, gen) {
                Ok(k) => k,
                Err(Error::NotCoprime) => taylor_complex(colon, gen)?,
                Err(e) => return Err(e),
            }
        };
        g = mapping_cone(&g, &k)?;
    }
    Ok(g)
}

/// Working copy of a complex for in-place cancellation.
struct Reducer<F: Field> {
    labels: Vec<Vec<VarSet>>,
    alive: Vec<Vec<bool>>,
    cols: Vec<Vec<Column<F>>>,
    /// `rows[i][k]`: columns of `d_i` with a nonzero entry in row `k`.
    rows: Vec<Vec<BTreeSet<usize>>>,
}

impl<F: Field> Reducer<F> {
    fn new(c: FreeComplex<F>) -> Self {
        let mut rows: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new()];
        for i in 1..c.modules.len() {
            let mut r = vec![BTreeSet::new(); c.modules[i - 1].len()];
            for (j, col) in c.diffs[i].iter().enumerate() {
                for &k in col.keys() {
                    r[k].insert(j);
                }
            }
            rows.push(r);
        }
        let alive = c.modules.iter().map(|m| vec![true; m.len()]).collect();
        Self { labels: c.modules, alive, cols: c.diffs, rows }
    }

    fn unit_row(&self, i: usize, j: usize) -> Option<usize> {
        let label = self.labels[i][j];
        self.cols[i][j]
            .keys()
            .copied()
            .filter(|&k| self.labels[i - 1][k] == label)
            .min_by_key(|&k| (self.rows[i][k].len(), k))
    }

    fn set_entry(&mut self, i: usize, j: usize, k: usize, v: F) {
        if v.is_zero() {
            self.cols[i][j].remove(&k);
            self.rows[i][k].remove(&j);
        } else {
            self.cols[i][j].insert(k, v);
            self.rows[i][k].insert(j);
        }
    }

    /// Cancels the unit entry at row `k`, column `j` of `d_i`; returns the
    /// columns of `d_i` that were modified.
    fn cancel(&mut self, i: usize, j: usize, k: usize) -> Vec<usize> {
        let pivot_col = self.cols[i][j].clone();
        let inv = pivot_col[&k].inv();
        let others: Vec<usize> = self.rows[i][k].iter().copied().filter(|&c| c != j).collect();
        for &c in &others {
            let f = self.cols[i][c][&k].mul(&inv);
            for (&r, v) in &pivot_col {
                let old = self.cols[i][c].get(&r).cloned().unwrap_or_else(F::zero);
                self.set_entry(i, c, r, old.sub(&f.mul(v)));
            }
        }
        for &r in pivot_col.keys() {
            self.rows[i][r].remove(&j);
        }
        self.cols[i][j].clear();
        self.alive[i][j] = false;
        self.alive[i - 1][k] = false;
        debug_assert!(self.rows[i][k].is_empty());
        if i + 1 < self.cols.len() {
            for c in std::mem::take(&mut self.rows[i + 1][j]) {
                self.cols[i + 1][c].remove(&j);
            }
        }
        if i >= 2 {
            for r in std::mem::take(&mut self.cols[i - 1][k]).into_keys() {
                self.rows[i - 1][r].remove(&k);
            }
        }
        others
    }

    fn run(&mut self) {
        for i in (1..self.cols.len()).rev() {
            let mut work: BTreeSet<usize> = (0..self.cols[i].len()).filter(|&j| self.alive[i][j]).collect();
            while let Some(j) = work.pop_first() {
                if !self.alive[i][j] {
                    continue;
                }
                if let Some(k) = self.unit_row(i, j) {
                    work.extend(self.cancel(i, j, k));
                }
            }
        }
    }

    fn finish(self) -> FreeComplex<F> {
        let index: Vec<Vec<Option<usize>>> = self
            .alive
            .iter()
            .map(|a| {
                let mut next = 0;
                a.iter()
                    .map(|&live| {
                        live.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let modules: Vec<Vec<VarSet>> = self
            .labels
            .iter()
            .zip(&self.alive)
            .map(|(l, a)| l.iter().zip(a).filter(|(_, &live)| live).map(|(&x, _)| x).collect())
            .collect();
        let mut diffs = vec![Vec::new()];
        for i in 1..self.cols.len() {
            let cols = self.cols[i]
                .iter()
                .enumerate()
                .filter(|(j, _)| self.alive[i][*j])
                .map(|(_, col)| col.iter().map(|(&k, v)| (index[i - 1][k].expect("live row"), v.clone())).collect())
                .collect();
            diffs.push(cols);
        }
        let mut c = FreeComplex { modules, diffs };
        c.drop_trailing_zeros();
        c
    }
}

/// Cancels unit entries from the top homological degree downward until none
/// remain; the result is a minimal complex with the same homology.
pub fn minimize<F: Field>(complex: FreeComplex<F>) -> FreeComplex<F> {
    let mut r = Reducer::new(complex);
    r.run();
    r.finish()
}

/// Graded Betti numbers `beta_{i,j}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
}

/// Projective dimension, regularity, top total Betti number and linearity of
/// a Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BettiSummary {
    pub pd: usize,
    pub reg: usize,
    pub top_betti: usize,
    pub is_linear: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    pub fn pd(&self) -> usize {
        self.entries.iter().filter(|(_, &v)| v > 0).map(|(&(i, _), _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.iter().filter(|(_, &v)| v > 0).map(|(&(i, j), _)| j - i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(&(a, _), _)| a == i).map(|(_, &v)| v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    pub fn summary(&self) -> Result<BettiSummary> {
        betti_summary(self)
    }

    /// CSV with one row per homological degree `i` and one column per `j - i`.
    pub fn to_csv(&self) -> String {
        let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let hi = self.reg();
        let mut s = String::from("i");
        for k in lo..=hi {
            s.push_str(&format!(",{k}"));
        }
        s.push('\n');
        for i in 0..=self.pd() {
            s.push_str(&i.to_string());
            for k in lo..=hi {
                s.push_str(&format!(",{}", self.get(i, i + k)));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&(i, j), &v)| json!({ "i": i, "j": j, "value": v }))
            .collect();
        json!({ "entries": entries, "totals": self.totals(), "pd": self.pd(), "reg": self.reg() })
    }
}

/// Summary statistics of a nonzero Betti table.
pub fn betti_summary(table: &BettiTable) -> Result<BettiSummary> {
    if table.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let gen_degree = table.entries.iter().filter(|(&(i, _), &v)| i == 0 && v > 0).map(|(&(_, j), _)| j).min();
    let is_linear = gen_degree.is_some_and(|g| table.entries.iter().all(|(&(i, j), &v)| v == 0 || j == i + g));
    let pd = table.pd();
    Ok(BettiSummary { pd, reg: table.reg(), top_betti: table.total(pd), is_linear })
}

/// Default generator bound for the Taylor-strand oracle.
pub const TAYLOR_BOUND: usize = 18;

/// Graded Betti numbers of the ideal generated by `gens`, from the homology
/// of the strands of the Taylor complex tensored with the residue field.
pub fn taylor_betti<F: Field>(gens: &[VarSet], bound: usize) -> Result<BettiTable> {
    let n = gens.len();
    if n > bound {
        return Err(Error::OracleUnavailable(format!("{n} generators exceed the Taylor bound {bound}")));
    }
    let mut lcm = vec![VarSet::EMPTY; 1 << n];
    let mut strands: BTreeMap<VarSet, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        lcm[mask as usize] = lcm[(mask & (mask - 1)) as usize].lcm(gens[low]);
        strands.entry(lcm[mask as usize]).or_default().push(mask);
    }
    let mut table = BettiTable::default();
    for (b, masks) in strands {
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for m in masks {
            by_size[m.count_ones() as usize].push(m);
        }
        let position: Vec<BTreeMap<u32, usize>> =
            by_size.iter().map(|v| v.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
        // rank of the strand differential from size s to size s - 1
        let mut ranks = vec![0usize; n + 2];
        for s in 2..=n {
            if by_size[s].is_empty() || by_size[s - 1].is_empty() {
                continue;
            }
            let mut e = SparseEliminator::<F>::new();
            for &mask in &by_size[s] {
                let mut col = BTreeMap::new();
                for (p, t) in (0..n).filter(|&t| mask >> t & 1 == 1).enumerate() {
                    if let Some(&row) = position[s - 1].get(&(mask & !(1 << t))) {
                        col.insert(row, if p % 2 == 0 { F::one() } else { F::one().neg() });
                    }
                }
                e.insert(col);
            }
            ranks[s] = e.rank();
        }
        for s in 1..=n {
            let h = by_size[s].len() - ranks[s] - ranks[s + 1];
            if h > 0 {
                *table.entries.entry((s - 1, b.len())).or_insert(0) += h;
            }
        }
    }
    Ok(table)
}

/// The Alexander dual generators `Y-hat^F`, ordered by `>`.
pub fn alexander_dual(set: &CliqueSet) -> Vec<VarSet> {
    set.dual_generators()
}

/// Resolution data of the Alexander dual for one ordering.
#[derive(Debug, Clone)]
pub struct DualResolution<F: Field = BigRational> {
    pub generators: Vec<VarSet>,
    pub colon_codims: Vec<usize>,
    pub cone_ranks: Vec<usize>,
    pub minimal: FreeComplex<F>,
    pub betti: BettiTable,
}

/// Resolves the Alexander dual by mapping cones along the clique order and
/// minimizes the result.
pub fn resolve_dual<F: Field>(set: &CliqueSet, colons: &[ColonData]) -> Result<DualResolution<F>> {
    let generators = alexander_dual(set);
    let colon_gens: Vec<Vec<VarSet>> = colons.iter().map(|c| c.minimal_generators.clone()).collect();
    let cone = mapping_cone_resolution::<F>(&generators, &colon_gens)?;
    let cone_ranks = cone.ranks();
    let minimal = minimize(cone);
    let betti = minimal.ideal_betti_table();
    Ok(DualResolution {
        colon_codims: colons.iter().map(|c| c.codim).collect(),
        generators,
        cone_ranks,
        minimal,
        betti,
    })
}

/// Renders a squarefree monomial over the Y-variables.
pub fn render_label(vars: &YVars, label: VarSet) -> String {
    YMonomial::from_ids(label.iter()).render(vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;

    fn s(ids: &[usize]) -> VarSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn koszul_two_generators() {
        let k: FreeComplex = koszul_complex(&[s(&[0]), s(&[1, 2])], VarSet::EMPTY).unwrap();
        assert_eq!(k.ranks(), vec![1, 2, 1]);
        assert!(k.is_complex());
        assert_eq!(k.labels(2), &[s(&[0, 1, 2])]);
        assert!(koszul_complex::<Fp>(&[s(&[0, 1]), s(&[1])], VarSet::EMPTY).is_err());
    }

    #[test]
    fn taylor_resolves_path_ideal() {
        let gens = [s(&[0, 1]), s(&[1, 2]), s(&[2, 3])];
        let t: FreeComplex = taylor_complex(&gens, VarSet::EMPTY).unwrap();
        assert!(t.is_complex());
        for b in 0u128..16 {
            assert!(t.is_exact_at(VarSet::from_bits(b), &gens));
        }
        let m = minimize(t);
        assert_eq!(m.ranks(), vec![1, 3, 2]);
        assert_eq!(m.ideal_betti_table(), taylor_betti::<BigRational>(&gens, 18).unwrap());
    }
}
