//! Parameters, `<_d`-chains and the monomials of the ground ring and of the
//! Y-ring.
//!
//! Every index exposed here is 1-based: `x[1]..x[N]` are the entries of the
//! extended Hankel matrix, and a [`DiagonalIndex`] lists the x-indices on the
//! main diagonal of a maximal minor.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The triple `(r, c, d)` describing the `r x c` extended Hankel matrix with
/// leap `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScrollParams {
    r: usize,
    c: usize,
    d: usize,
}

impl ScrollParams {
    pub fn new(r: usize, c: usize, d: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!("r must be at least 2, got {r}")));
        }
        if c < r {
            return Err(Error::InvalidParams(format!("c must be at least r = {r}, got {c}")));
        }
        if d < 1 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        Ok(Self { r, c, d })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of ground-ring variables, `c + (r-1)d`.
    pub fn n_vars(&self) -> usize {
        self.c + (self.r - 1) * self.d
    }

    /// Number of Y-variables, one per maximal minor: `binomial(c, r)`.
    pub fn n_y_vars(&self) -> usize {
        binomial(self.c, self.r)
    }

    /// First Y-variable `Y_{1, 2+d, ..., r+(r-1)d}`: the diagonal of the
    /// leftmost minor.
    pub fn first_index(&self) -> DiagonalIndex {
        DiagonalIndex((0..self.r).map(|i| 1 + i * (self.d + 1)).collect())
    }

    /// Diagonal of the rightmost minor.
    pub fn last_index(&self) -> DiagonalIndex {
        let n = self.n_vars();
        DiagonalIndex((0..self.r).map(|i| n - (self.r - 1 - i) * (self.d + 1)).collect())
    }

    /// When `r + 1 < c < r + d` the ideal coincides with the one for leap
    /// `c - r`, in a subset of the variables.
    pub fn reduced(&self) -> ScrollParams {
        if self.c > self.r + 1 && self.c < self.r + self.d {
            ScrollParams { r: self.r, c: self.c, d: self.c - self.r }
        } else {
            *self
        }
    }

    /// Whether the fiber cone is a polynomial ring (`c = r` or `c = r + 1`).
    pub fn is_degenerate(&self) -> bool {
        self.c <= self.r + 1
    }
}

impl fmt::Display for ScrollParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, c={}, d={})", self.r, self.c, self.d)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A strictly increasing `<_d`-chain `(a_1, ..., a_r)`: the main diagonal of a
/// maximal minor, and the name of a Y-variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalIndex(Vec<usize>);

impl DiagonalIndex {
    /// Validates `entries` as an element of `Lambda_{r,d}(N)`.
    pub fn new(params: &ScrollParams, entries: Vec<usize>) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidIndex { index: entries.clone(), reason: reason.into() };
        if entries.len() != params.r() {
            return Err(bad("wrong length"));
        }
        if entries.iter().any(|&e| e < 1 || e > params.n_vars()) {
            return Err(bad("entry out of range"));
        }
        if !entries.windows(2).all(|w| w[0] + params.d() < w[1]) {
            return Err(bad("not a <_d-chain"));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Columns of the minor: `entries[i] - (i-1)d`.
    pub fn columns(&self, d: usize) -> Vec<usize> {
        self.0.iter().enumerate().map(|(i, &a)| a - i * d).collect()
    }

    pub fn x_monomial(&self, n_vars: usize) -> XMonomial {
        XMonomial::from_indices(n_vars, &self.0)
    }
}

impl fmt::Display for DiagonalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// True iff the entries, sorted increasingly, have consecutive gaps larger
/// than `d`.
pub fn is_d_chain(entries: &[usize], d: usize) -> bool {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] + d < w[1])
}

/// All `<_d`-chains of length `r` in `[1, N]`, lexicographically sorted.
pub fn enumerate_lambda(params: &ScrollParams) -> Vec<DiagonalIndex> {
    fn extend(prefix: &mut Vec<usize>, r: usize, d: usize, n: usize, out: &mut Vec<DiagonalIndex>) {
        if prefix.len() == r {
            out.push(DiagonalIndex(prefix.clone()));
            return;
        }
        let lo = prefix.last().map_or(1, |&p| p + d + 1);
        // room for the remaining entries after this one
        let remaining = r - prefix.len() - 1;
        let hi = n.saturating_sub(remaining * (d + 1));
        for a in lo..=hi {
            prefix.push(a);
            extend(prefix, r, d, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(params.n_y_vars());
    extend(&mut Vec::new(), params.r(), params.d(), params.n_vars(), &mut out);
    out
}

/// A monomial in `x_1, ..., x_N`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial {
    exponents: Vec<u32>,
}

impl XMonomial {
    pub fn one(n_vars: usize) -> Self {
        Self { exponents: vec![0; n_vars] }
    }

    /// Product of the given 1-based variables (repeats allowed).
    pub fn from_indices(n_vars: usize, indices: &[usize]) -> Self {
        let mut m = Self::one(n_vars);
        for &i in indices {
            m.exponents[i - 1] += 1;
        }
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The variable indices with multiplicity, increasing.
    pub fn indices(&self) -> Vec<usize> {
        self.exponents.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize)).collect()
    }

    pub fn mul(&self, other: &XMonomial) -> XMonomial {
        XMonomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x[{}]", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// How the Y-variables are ordered: by lex or by revlex on their initial
/// monomials `x_alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Revlex,
}

impl OrderKind {
    pub const BOTH: [OrderKind; 2] = [OrderKind::Lex, OrderKind::Revlex];

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Revlex => "revlex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Compares x-monomials with `x_1 > x_2 > ... > x_N`.
///
/// Revlex is only defined for equal total degree: the monomial with the
/// larger exponent on the last differing variable is the smaller one.
pub fn compare_x(kind: OrderKind, u: &XMonomial, v: &XMonomial) -> Result<Ordering> {
    match kind {
        OrderKind::Lex => Ok(u.exponents.cmp(&v.exponents)),
        OrderKind::Revlex => {
            let (du, dv) = (u.degree(), v.degree());
            if du != dv {
                return Err(Error::DegreeMismatch { left: du, right: dv });
            }
            for (a, b) in u.exponents.iter().zip(&v.exponents).rev() {
                if a != b {
                    return Ok(b.cmp(a));
                }
            }
            Ok(Ordering::Equal)
        }
    }
}

/// Compares `Y_a` and `Y_b` through their initial monomials `x_a`, `x_b`.
pub fn compare_y(kind: OrderKind, a: &DiagonalIndex, b: &DiagonalIndex) -> Ordering {
    let n = a.0.iter().chain(&b.0).copied().max().unwrap_or(0);
    compare_x(kind, &a.x_monomial(n), &b.x_monomial(n)).expect("diagonal indices of equal length have equal degree")
}

/// The Y-variables of a parameter triple in canonical order, with lookup by
/// index and the variable ranks of both order kinds.
#[derive(Debug, Clone)]
pub struct YVars {
    params: ScrollParams,
    indices: Vec<DiagonalIndex>,
    lookup: HashMap<DiagonalIndex, usize>,
    lex_rank: Vec<usize>,
    revlex_rank: Vec<usize>,
}

impl YVars {
    pub fn new(params: ScrollParams) -> Self {
        let indices = enumerate_lambda(&params);
        let lookup = indices.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let rank_of = |kind: OrderKind| {
            let mut order: Vec<usize> = (0..indices.len()).collect();
            order.sort_by(|&i, &j| compare_y(kind, &indices[i], &indices[j]));
            let mut rank = vec![0; indices.len()];
            for (pos, id) in order.into_iter().enumerate() {
                rank[id] = pos;
            }
            rank
        };
        let lex_rank = rank_of(OrderKind::Lex);
        let revlex_rank = rank_of(OrderKind::Revlex);
        Self { params, indices, lookup, lex_rank, revlex_rank }
    }

    pub fn params(&self) -> &ScrollParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn get(&self, id: usize) -> &DiagonalIndex {
        &self.indices[id]
    }

    pub fn all(&self) -> &[DiagonalIndex] {
        &self.indices
    }

    pub fn id_of(&self, alpha: &DiagonalIndex) -> Option<usize> {
        self.lookup.get(alpha).copied()
    }

    pub fn id_of_entries(&self, entries: &[usize]) -> Option<usize> {
        self.lookup.get(&DiagonalIndex(entries.to_vec())).copied()
    }

    /// Position of the variable in increasing order; larger rank means larger
    /// variable.
    pub fn rank(&self, kind: OrderKind, id: usize) -> usize {
        match kind {
            OrderKind::Lex => self.lex_rank[id],
            OrderKind::Revlex => self.revlex_rank[id],
        }
    }

    pub fn compare(&self, kind: OrderKind, a: usize, b: usize) -> Ordering {
        self.rank(kind, a).cmp(&self.rank(kind, b))
    }
}

/// A monomial in the Y-variables, keyed by canonical variable id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial {
    exponents: BTreeMap<usize, u32>,
}

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_ids(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one();
        for id in ids {
            *m.exponents.entry(id).or_insert(0) += 1;
        }
        m
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &YMonomial) -> bool {
        self.exponents.iter().all(|(k, e)| other.exponents.get(k).is_some_and(|f| f >= e))
    }

    pub fn render(&self, vars: &YVars) -> String {
        if self.exponents.is_empty() {
            return "1".into();
        }
        self.exponents
            .iter()
            .map(|(&id, &e)| if e == 1 { vars.get(id).to_string() } else { format!("{}^{e}", vars.get(id)) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: usize, c: usize, d: usize) -> ScrollParams {
        ScrollParams::new(r, c, d).unwrap()
    }

    fn entries(v: &[DiagonalIndex]) -> Vec<Vec<usize>> {
        v.iter().map(|a| a.entries().to_vec()).collect()
    }

    #[test]
    fn lambda_small_case_by_hand() {
        let params = p(2, 4, 1);
        assert_eq!(params.n_vars(), 5);
        assert_eq!(
            entries(&enumerate_lambda(&params)),
            vec![vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 4], vec![2, 5], vec![3, 5]]
        );
    }

    #[test]
    fn lambda_counts_match_binomial() {
        // brute force over all r-subsets of [1, N]
        for (r, c, d) in [(2, 8, 1), (3, 6, 2), (2, 5, 3), (4, 7, 1)] {
            let params = p(r, c, d);
            let n = params.n_vars();
            let mut count = 0;
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != r {
                    continue;
                }
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                if is_d_chain(&set, d) {
                    count += 1;
                }
            }
            assert_eq!(count, binomial(c, r));
            assert_eq!(enumerate_lambda(&params).len(), count);
        }
        assert_eq!(enumerate_lambda(&p(2, 8, 1)).len(), 28);
    }

    #[test]
    fn principal_case_has_one_chain() {
        assert_eq!(entries(&enumerate_lambda(&p(3, 3, 5))), vec![vec![1, 7, 13]]);
    }

    #[test]
    fn d_chain_examples() {
        assert!(is_d_chain(&[1, 3, 5], 1));
        assert!(!is_d_chain(&[1, 2, 5], 1));
        assert!(is_d_chain(&[1, 7, 13], 5));
        assert!(is_d_chain(&[5, 1, 3], 1));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(ScrollParams::new(1, 3, 1).is_err());
        assert!(ScrollParams::new(3, 2, 1).is_err());
        assert!(ScrollParams::new(2, 3, 0).is_err());
    }

    #[test]
    fn diagonal_index_validation() {
        let params = p(2, 4, 1);
        assert!(DiagonalIndex::new(&params, vec![1, 3]).is_ok());
        assert!(DiagonalIndex::new(&params, vec![1, 2]).is_err());
        assert!(DiagonalIndex::new(&params, vec![1, 6]).is_err());
        assert!(DiagonalIndex::new(&params, vec![1]).is_err());
    }

    #[test]
    fn lex_examples() {
        let m = |idx: &[usize]| XMonomial::from_indices(4, idx);
        assert_eq!(compare_x(OrderKind::Lex, &m(&[1, 3]), &m(&[2, 2])).unwrap(), Ordering::Greater);
        assert_eq!(compare_x(OrderKind::Lex, &m(&[1, 3]), &m(&[1, 3])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn revlex_matches_known_degree_two_list() {
        // grevlex with x1 > x2 > x3 > x4, descending
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 1],
            vec![1, 2],
            vec![2, 2],
            vec![1, 3],
            vec![2, 3],
            vec![3, 3],
            vec![1, 4],
            vec![2, 4],
            vec![3, 4],
            vec![4, 4],
        ];
        let mut monos: Vec<XMonomial> = expected.iter().map(|v| XMonomial::from_indices(4, v)).collect();
        monos.reverse();
        monos.sort_by(|a, b| compare_x(OrderKind::Revlex, b, a).unwrap());
        let got: Vec<Vec<usize>> = monos.iter().map(|m| m.indices()).collect();
        assert_eq!(got, expected);

        let m = |idx: &[usize]| XMonomial::from_indices(4, idx);
        assert_eq!(compare_x(OrderKind::Revlex, &m(&[1, 4]), &m(&[2, 3])).unwrap(), Ordering::Less);
    }

    #[test]
    fn revlex_rejects_unequal_degrees() {
        let u = XMonomial::from_indices(3, &[1]);
        let v = XMonomial::from_indices(3, &[1, 2]);
        assert!(matches!(compare_x(OrderKind::Revlex, &u, &v), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn compare_y_examples() {
        let params = p(2, 4, 1);
        let y = |v: Vec<usize>| DiagonalIndex::new(&params, v).unwrap();
        assert_eq!(compare_y(OrderKind::Lex, &y(vec![1, 3]), &y(vec![1, 4])), Ordering::Greater);
        assert_eq!(compare_y(OrderKind::Lex, &y(vec![1, 4]), &y(vec![2, 4])), Ordering::Greater);
        // x1x4 vs x2x3 is not a pair of chains for d = 1, compare (1,4) with (2,4)
        assert_eq!(compare_y(OrderKind::Revlex, &y(vec![1, 4]), &y(vec![2, 4])), Ordering::Greater);
        assert_eq!(compare_y(OrderKind::Revlex, &y(vec![1, 5]), &y(vec![2, 4])), Ordering::Less);
    }

    #[test]
    fn both_y_orders_are_strict_total_orders() {
        for params in [p(2, 6, 1), p(3, 6, 1), p(2, 5, 2)] {
            let vars = YVars::new(params);
            for kind in OrderKind::BOTH {
                let n = vars.len();
                for a in 0..n {
                    for b in 0..n {
                        let ab = vars.compare(kind, a, b);
                        assert_eq!(ab, compare_y(kind, vars.get(a), vars.get(b)));
                        assert_eq!(ab == Ordering::Equal, a == b);
                        assert_eq!(ab.reverse(), vars.compare(kind, b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_to_x_alpha_is_injective() {
        let params = p(3, 7, 1);
        let n = params.n_vars();
        let monos: std::collections::HashSet<_> = enumerate_lambda(&params).iter().map(|a| a.x_monomial(n)).collect();
        assert_eq!(monos.len(), params.n_y_vars());
    }

    #[test]
    fn end_indices() {
        let params = p(3, 4, 1);
        assert_eq!(params.first_index().entries(), &[1, 3, 5]);
        assert_eq!(params.last_index().entries(), &[2, 4, 6]);
        assert_eq!(p(3, 5, 4).reduced(), p(3, 5, 2));
        assert_eq!(p(3, 6, 2).reduced(), p(3, 6, 2));
    }
}
