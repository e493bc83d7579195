//! The sorting operator, straightening of products of maximal minors, and the
//! defining equations of the fiber cone and the Rees algebra.

use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::all_minors;
use crate::params::{is_d_chain, DiagonalIndex, OrderKind, ScrollParams, XMonomial, YVars};
use crate::poly::{rational, Polynomial, TermOrder};

/// Merges the indices of `u v` increasingly; odd positions go to the first
/// factor, even positions to the second.
pub fn sort_pair(u: &XMonomial, v: &XMonomial) -> Result<(XMonomial, XMonomial)> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch { left: u.degree(), right: v.degree() });
    }
    let merged = u.mul(v).indices();
    let n = u.n_vars();
    let odd: Vec<usize> = merged.iter().step_by(2).copied().collect();
    let even: Vec<usize> = merged.iter().skip(1).step_by(2).copied().collect();
    Ok((XMonomial::from_indices(n, &odd), XMonomial::from_indices(n, &even)))
}

pub fn is_sorted(u: &XMonomial, v: &XMonomial) -> Result<bool> {
    let (a, b) = sort_pair(u, v)?;
    Ok(&a == u && &b == v)
}

/// Splits a sorted index list into the two diagonal indices of the sorted
/// pair with that product.
fn split_sorted(indices: &[usize]) -> (Vec<usize>, Vec<usize>) {
    (indices.iter().step_by(2).copied().collect(), indices.iter().skip(1).step_by(2).copied().collect())
}

/// Sorts a pair of diagonal indices.
pub fn sort_indices(a: &DiagonalIndex, b: &DiagonalIndex) -> (Vec<usize>, Vec<usize>) {
    let mut merged: Vec<usize> = a.entries().iter().chain(b.entries()).copied().collect();
    merged.sort_unstable();
    split_sorted(&merged)
}

/// True iff `(x_a, x_b)` is sorted (in this order).
pub fn is_sorted_pair(a: &DiagonalIndex, b: &DiagonalIndex) -> bool {
    let (s, t) = sort_indices(a, b);
    s == a.entries() && t == b.entries()
}

/// Checks that sorting any two elements of `G_{r,c,d}` yields two elements
/// of `G_{r,c,d}`.
pub fn verify_sortability(params: &ScrollParams) -> bool {
    let lambda = crate::params::enumerate_lambda(params);
    let d = params.d();
    lambda.iter().enumerate().all(|(i, a)| {
        lambda[i..].iter().all(|b| {
            let (s, t) = sort_indices(a, b);
            is_d_chain(&s, d) && is_d_chain(&t, d) && strictly_increasing(&s) && strictly_increasing(&t)
        })
    })
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// `M(alpha) M(beta) = sum_i mu_i M(alpha_i) M(beta_i)` with sorted pairs on
/// the right.
#[derive(Debug, Clone, PartialEq)]
pub struct StraighteningExpansion {
    pub lhs: (DiagonalIndex, DiagonalIndex),
    pub terms: Vec<(BigRational, DiagonalIndex, DiagonalIndex)>,
}

/// Result of checking the three properties of an expansion separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionCheck {
    pub identity: bool,
    pub strictly_decreasing: bool,
    pub all_sorted: bool,
}

impl ExpansionCheck {
    pub fn ok(&self) -> bool {
        self.identity && self.strictly_decreasing && self.all_sorted
    }
}

/// The maximal minors of one parameter triple, indexed by Y-variable id.
#[derive(Debug, Clone)]
pub struct MinorTable {
    vars: YVars,
    minors: Vec<Polynomial>,
}

impl MinorTable {
    pub fn new(params: ScrollParams) -> Self {
        let minors = all_minors(&params).into_iter().map(|m| m.poly).collect();
        Self { vars: YVars::new(params), minors }
    }

    pub fn params(&self) -> &ScrollParams {
        self.vars.params()
    }

    pub fn vars(&self) -> &YVars {
        &self.vars
    }

    pub fn minor(&self, alpha: &DiagonalIndex) -> Result<&Polynomial> {
        self.vars
            .id_of(alpha)
            .map(|i| &self.minors[i])
            .ok_or_else(|| Error::InvalidIndex { index: alpha.entries().to_vec(), reason: "not in Lambda".into() })
    }

    fn index(&self, entries: &[usize]) -> Result<DiagonalIndex> {
        self.vars
            .id_of_entries(entries)
            .map(|i| self.vars.get(i).clone())
            .ok_or_else(|| Error::internal(format!("initial monomial factor {entries:?} is not a <_d-chain")))
    }

    /// Runs the straightening loop on `M(alpha) M(beta)`.
    pub fn straighten(&self, alpha: &DiagonalIndex, beta: &DiagonalIndex) -> Result<StraighteningExpansion> {
        let mut f = self.minor(alpha)? * self.minor(beta)?;
        let mut terms = Vec::new();
        while !f.is_zero() {
            let (e, mu) = {
                let (e, c) = f.leading_term(&TermOrder::Lex)?;
                (XMonomial::from_exponents(e.clone()), c.clone())
            };
            let (s, t) = split_sorted(&e.indices());
            let (a, b) = (self.index(&s)?, self.index(&t)?);
            let product = self.minor(&a)? * self.minor(&b)?;
            f = &f - &product.scale(&mu);
            terms.push((mu, a, b));
        }
        Ok(StraighteningExpansion { lhs: (alpha.clone(), beta.clone()), terms })
    }

    /// Checks the exact identity, the strict decrease of initial monomials
    /// (starting at the initial monomial of the left side) and sortedness.
    pub fn check_expansion(&self, exp: &StraighteningExpansion) -> Result<ExpansionCheck> {
        let n = self.params().n_vars();
        let (alpha, beta) = &exp.lhs;
        let lhs = self.minor(alpha)? * self.minor(beta)?;
        let mut rhs = Polynomial::zero(n);
        for (mu, a, b) in &exp.terms {
            rhs = &rhs + &(self.minor(a)? * self.minor(b)?).scale(mu);
        }
        let inis: Vec<XMonomial> = exp.terms.iter().map(|(_, a, b)| a.x_monomial(n).mul(&b.x_monomial(n))).collect();
        let lhs_ini = alpha.x_monomial(n).mul(&beta.x_monomial(n));
        let strictly_decreasing = inis.first() == Some(&lhs_ini)
            && exp.terms[0].0.is_one()
            && inis.windows(2).all(|w| w[0].exponents() > w[1].exponents());
        let all_sorted = exp.terms.iter().all(|(_, a, b)| is_sorted_pair(a, b));
        Ok(ExpansionCheck { identity: lhs == rhs, strictly_decreasing, all_sorted })
    }

    /// Substitutes `Y_alpha -> M(alpha)` (and `x -> x`) and tests for zero.
    /// Accepts polynomials over the Y-variables or over `x ∪ Y`.
    pub fn relation_vanishes(&self, rel: &Polynomial) -> Result<bool> {
        let n = self.params().n_vars();
        let m = self.vars.len();
        let images: Vec<Polynomial> = if rel.n_vars() == m {
            self.minors.clone()
        } else if rel.n_vars() == n + m {
            (0..n).map(|i| Polynomial::var(n, i)).chain(self.minors.iter().cloned()).collect()
        } else {
            return Err(Error::InvalidParams(format!(
                "relation over {} variables matches neither Y ({m}) nor x ∪ Y ({})",
                rel.n_vars(),
                n + m
            )));
        };
        Ok(rel.substitute(&images).is_zero())
    }
}

pub fn straighten(
    params: &ScrollParams,
    alpha: &DiagonalIndex,
    beta: &DiagonalIndex,
) -> Result<StraighteningExpansion> {
    MinorTable::new(*params).straighten(alpha, beta)
}

pub fn verify_relation_vanishes(params: &ScrollParams, rel: &Polynomial) -> Result<bool> {
    MinorTable::new(*params).relation_vanishes(rel)
}

/// Unordered pairs `{alpha, beta}` that are not sorted in either order, listed
/// with `x_alpha >_lex x_beta` (equivalently `alpha` first in canonical order).
pub fn unsorted_pairs(vars: &YVars) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            if !is_sorted_pair(vars.get(i), vars.get(j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Which presentation an equation set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    /// Quadrics over the Y-variables.
    Fiber,
    /// Linear syzygy relations over `x ∪ Y`.
    Rees,
}

/// A list of relations with the layout needed to name their variables.
#[derive(Debug, Clone)]
pub struct EquationSet {
    pub kind: EquationKind,
    pub vars: YVars,
    pub order: TermOrder,
    pub relations: Vec<Polynomial>,
}

impl EquationSet {
    pub fn variable_name(&self, i: usize) -> String {
        match self.kind {
            EquationKind::Fiber => self.vars.get(i).to_string(),
            EquationKind::Rees => {
                let n = self.vars.params().n_vars();
                if i < n {
                    format!("x[{}]", i + 1)
                } else {
                    self.vars.get(i - n).to_string()
                }
            }
        }
    }

    pub fn render(&self, rel: &Polynomial) -> String {
        rel.render(&self.order, |i| self.variable_name(i))
    }

    pub fn to_json(&self) -> Value {
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|rel| {
                let mut terms: Vec<_> = rel.terms().collect();
                terms.sort_by(|a, b| self.order.cmp(b.0, a.0));
                let terms: Vec<Value> = terms
                    .into_iter()
                    .map(|(e, c)| {
                        let factors: serde_json::Map<String, Value> = e
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| k > 0)
                            .map(|(i, &k)| (self.variable_name(i), json!(k)))
                            .collect();
                        json!({ "coefficient": c.to_string(), "monomial": factors })
                    })
                    .collect();
                json!({ "text": self.render(rel), "terms": terms })
            })
            .collect();
        json!({
            "kind": match self.kind { EquationKind::Fiber => "fiber", EquationKind::Rees => "rees" },
            "relations": relations,
        })
    }
}

impl MinorTable {
    /// The quadrics `Y_a Y_b - sum mu_i Y_{a_i} Y_{b_i}`, one per unsorted pair,
    /// in canonical pair order. `kind` only affects the display order of terms.
    pub fn fiber_relations(&self, kind: OrderKind) -> Result<EquationSet> {
        let m = self.vars.len();
        let mut relations = Vec::new();
        for (i, j) in unsorted_pairs(&self.vars) {
            let exp = self.straighten(self.vars.get(i), self.vars.get(j))?;
            let mut rel = Polynomial::zero(m);
            let mut lead = vec![0u32; m];
            lead[i] += 1;
            lead[j] += 1;
            rel.add_term(lead, BigRational::one());
            for (mu, a, b) in &exp.terms {
                let mut e = vec![0u32; m];
                e[self.vars.id_of(a).expect("indexed")] += 1;
                e[self.vars.id_of(b).expect("indexed")] += 1;
                rel.add_term(e, -mu.clone());
            }
            relations.push(rel);
        }
        Ok(EquationSet {
            kind: EquationKind::Fiber,
            order: TermOrder::y_induced(&self.vars, kind),
            vars: self.vars.clone(),
            relations,
        })
    }

    /// The syzygy relations obtained by expanding the `(r+1) x (r+1)` matrix
    /// with a repeated row, deduplicated.
    pub fn rees_syzygy_relations(&self) -> EquationSet {
        let p = *self.params();
        let (r, c, d, n) = (p.r(), p.c(), p.d(), p.n_vars());
        let total = n + self.vars.len();
        let order = TermOrder::rees(&self.vars);
        let mut seen: HashSet<Polynomial> = HashSet::new();
        let mut relations = Vec::new();
        for cols in combinations(c, r + 1) {
            for k in 1..=r {
                let mut rel = Polynomial::zero(total);
                for j in 0..=r {
                    let rest: Vec<usize> = cols.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &x)| x).collect();
                    let diag: Vec<usize> = rest.iter().enumerate().map(|(t, &x)| x + t * d).collect();
                    let y = self.vars.id_of_entries(&diag).expect("diagonal of r distinct columns is a chain");
                    let mut e = vec![0u32; total];
                    e[cols[j] + (k - 1) * d - 1] += 1;
                    e[n + y] += 1;
                    rel.add_term(e, rational(if j % 2 == 0 { 1 } else { -1 }));
                }
                let normal = rel.monic(&order);
                if seen.insert(normal) {
                    relations.push(rel);
                }
            }
        }
        EquationSet { kind: EquationKind::Rees, vars: self.vars.clone(), order, relations }
    }

    /// Compares, for each degree `k <= max_degree`, the number of Y-monomials
    /// avoiding every unsorted quadric with the number of distinct products of
    /// `k` elements of `G_{r,c,d}`.
    pub fn hilbert_consistency(&self, max_degree: usize, max_monomials: usize) -> Result<bool> {
        let m = self.vars.len();
        let n = self.params().n_vars();
        let bad: HashSet<(usize, usize)> = unsorted_pairs(&self.vars).into_iter().collect();
        let x_of: Vec<Vec<u32>> = self.vars.all().iter().map(|a| a.x_monomial(n).exponents().to_vec()).collect();
        for k in 1..=max_degree {
            let count = crate::params::binomial(m + k - 1, k);
            if count > max_monomials {
                return Err(Error::BudgetExceeded(format!("{count} monomials of degree {k}")));
            }
            let mut standard = 0usize;
            let mut products: BTreeSet<Vec<u32>> = BTreeSet::new();
            for ms in multisets(m, k) {
                let ok = ms
                    .iter()
                    .enumerate()
                    .all(|(s, &a)| ms[s + 1..].iter().all(|&b| !bad.contains(&(a.min(b), a.max(b)))));
                if ok {
                    standard += 1;
                }
                let mut e = vec![0u32; n];
                for &a in &ms {
                    for (o, x) in e.iter_mut().zip(&x_of[a]) {
                        *o += x;
                    }
                }
                products.insert(e);
            }
            if standard != products.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn fiber_relations(params: &ScrollParams, kind: OrderKind) -> Result<EquationSet> {
    MinorTable::new(*params).fiber_relations(kind)
}

pub fn rees_syzygy_relations(params: &ScrollParams) -> EquationSet {
    MinorTable::new(*params).rees_syzygy_relations()
}

pub fn hilbert_consistency(params: &ScrollParams, max_degree: usize) -> Result<bool> {
    MinorTable::new(*params).hilbert_consistency(max_degree, 5_000_000)
}

/// Increasing `k`-subsets of `1..=n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing `k`-sequences in `0..m`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            go(x, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xm(n: usize, idx: &[usize]) -> XMonomial {
        XMonomial::from_indices(n, idx)
    }

    #[test]
    fn sorting_examples() {
        let (a, b) = sort_pair(&xm(5, &[3, 5]), &xm(5, &[1, 4])).unwrap();
        assert_eq!((a.indices(), b.indices()), (vec![1, 4], vec![3, 5]));
        let (a, b) = sort_pair(&xm(5, &[1, 5]), &xm(5, &[1, 3])).unwrap();
        assert_eq!((a.indices(), b.indices()), (vec![1, 3], vec![1, 5]));
        assert!(is_sorted(&xm(5, &[1, 4]), &xm(5, &[3, 5])).unwrap());
        assert!(!is_sorted(&xm(5, &[3, 5]), &xm(5, &[1, 4])).unwrap());
        assert!(sort_pair(&xm(5, &[1]), &xm(5, &[1, 4])).is_err());
    }

    #[test]
    fn combinatorics_helpers() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(multisets(3, 2).len(), 6);
    }
}
