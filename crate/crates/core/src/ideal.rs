//! The extended Hankel matrix, its maximal minors, and Gröbner checks for the
//! ideal of maximal minors and its powers.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::{enumerate_lambda, DiagonalIndex, ScrollParams};
use crate::poly::{
    buchberger_complete, buchberger_verify, determinant, divides, GroebnerBudget, Polynomial, TermOrder,
};

/// Largest number of minors accepted by the Gröbner checks.
pub const MAX_GROEBNER_GENERATORS: usize = 80;

/// The `r x c` matrix of 1-based x-variable indices, entry `(i, j)` being
/// `j + (i-1) d`.
pub fn hankel_matrix(params: &ScrollParams) -> Vec<Vec<usize>> {
    (0..params.r()).map(|i| (1..=params.c()).map(|j| j + i * params.d()).collect()).collect()
}

/// A maximal minor together with its diagonal index and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Minor {
    pub index: DiagonalIndex,
    /// 1-based columns of the submatrix.
    pub columns: Vec<usize>,
    pub poly: Polynomial,
}

/// The minor `M(alpha)` whose main diagonal is `x_{alpha_1}, ..., x_{alpha_r}`.
pub fn minor(params: &ScrollParams, alpha: &DiagonalIndex) -> Result<Minor> {
    let alpha = DiagonalIndex::new(params, alpha.entries().to_vec())?;
    let n = params.n_vars();
    let columns = alpha.columns(params.d());
    let h = hankel_matrix(params);
    let sub: Vec<Vec<Polynomial>> =
        h.iter().map(|row| columns.iter().map(|&j| Polynomial::var(n, row[j - 1] - 1)).collect()).collect();
    Ok(Minor { poly: determinant(&sub, n), columns, index: alpha })
}

/// All maximal minors in canonical index order.
pub fn all_minors(params: &ScrollParams) -> Vec<Minor> {
    enumerate_lambda(params).par_iter().map(|a| minor(params, a).expect("enumerated indices are valid")).collect()
}

fn guard(params: &ScrollParams) -> Result<()> {
    if params.n_y_vars() > MAX_GROEBNER_GENERATORS {
        return Err(Error::BudgetExceeded(format!(
            "{} minors exceed the Gröbner check limit of {MAX_GROEBNER_GENERATORS}",
            params.n_y_vars()
        )));
    }
    Ok(())
}

/// Checks that the maximal minors form a Gröbner basis under lex.
pub fn verify_minors_groebner(params: &ScrollParams, budget: GroebnerBudget) -> Result<bool> {
    guard(params)?;
    let gens: Vec<Polynomial> = all_minors(params).into_iter().map(|m| m.poly).collect();
    buchberger_verify(&gens, &TermOrder::Lex, budget)
}

/// Checks `in(I^k) = in(I)^k` under lex by completing the products of `k`
/// minors to a Gröbner basis.
pub fn verify_power_initial(params: &ScrollParams, k: usize, budget: GroebnerBudget) -> Result<bool> {
    guard(params)?;
    if k == 0 {
        return Err(Error::InvalidParams("power must be positive".into()));
    }
    let minors: Vec<Polynomial> = all_minors(params).into_iter().map(|m| m.poly).collect();
    let n = params.n_vars();
    let mut products = vec![(Polynomial::one(n), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (p, start) in &products {
            for (i, m) in minors.iter().enumerate().skip(*start) {
                next.push((p * m, i));
            }
        }
        products = next;
    }
    let gens: Vec<Polynomial> = products.into_iter().map(|(p, _)| p).collect();
    let power_leads: Vec<Vec<u32>> =
        gens.iter().map(|g| g.leading_monomial(&TermOrder::Lex).cloned()).collect::<Result<_>>()?;
    let gb = buchberger_complete(&gens, &TermOrder::Lex, budget)?;
    for g in &gb {
        let l = g.leading_monomial(&TermOrder::Lex)?;
        if !power_leads.iter().any(|p| divides(p, l)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_entries() {
        let p = ScrollParams::new(2, 3, 1).unwrap();
        assert_eq!(hankel_matrix(&p), vec![vec![1, 2, 3], vec![2, 3, 4]]);
        let p = ScrollParams::new(2, 2, 5).unwrap();
        assert_eq!(hankel_matrix(&p), vec![vec![1, 2], vec![6, 7]]);
    }
}
