//! Multivariate division and a small Buchberger engine, meant for checking
//! Gröbner bases at desk scale.

use std::collections::BTreeSet;

use num_rational::BigRational;

use super::{divides, lcm, quotient, Exponents, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Resource limits for Buchberger runs.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerBudget {
    /// Largest number of terms any intermediate polynomial may have.
    pub max_terms: usize,
    /// Largest number of S-pairs processed.
    pub max_pairs: usize,
    /// Largest basis size during completion.
    pub max_basis: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        Self { max_terms: 20_000, max_pairs: 200_000, max_basis: 2_000 }
    }
}

struct Reducer<'a> {
    basis: &'a [Polynomial],
    leads: Vec<(Exponents, BigRational)>,
}

impl<'a> Reducer<'a> {
    fn new(basis: &'a [Polynomial], ord: &TermOrder) -> Result<Self> {
        let leads =
            basis.iter().map(|g| g.leading_term(ord).map(|(e, c)| (e.clone(), c.clone()))).collect::<Result<_>>()?;
        Ok(Self { basis, leads })
    }

    fn reduce(&self, f: &Polynomial, ord: &TermOrder, max_terms: usize) -> Result<Polynomial> {
        let mut p = f.clone();
        let mut rem = Polynomial::zero(f.n_vars());
        while !p.is_zero() {
            if p.len() > max_terms {
                return Err(Error::BudgetExceeded(format!("intermediate polynomial with {} terms", p.len())));
            }
            let (e, c) = {
                let (e, c) = p.leading_term(ord)?;
                (e.clone(), c.clone())
            };
            match self.leads.iter().position(|(l, _)| divides(l, &e)) {
                Some(i) => {
                    let (l, lc) = &self.leads[i];
                    p.sub_mul_term(&quotient(&e, l), &(c / lc), &self.basis[i]);
                }
                None => {
                    p.add_term(e.clone(), -c.clone());
                    rem.add_term(e, c);
                }
            }
        }
        Ok(rem)
    }
}

/// Full normal form of `f` modulo `basis`, always dividing by the first basis
/// element whose leading monomial divides the current leading term.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    Reducer::new(basis, ord)?.reduce(f, ord, usize::MAX)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    let (ef, cf) = f.leading_term(ord)?;
    let (eg, cg) = g.leading_term(ord)?;
    let l = lcm(ef, eg);
    let mut s = f.mul_term(&quotient(&l, ef), &cf.recip());
    s.sub_mul_term(&quotient(&l, eg), &cg.recip(), g);
    Ok(s)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// True iff `gens` is a Gröbner basis: every S-polynomial of a pair with
/// non-coprime leading monomials reduces to zero.
pub fn buchberger_verify(gens: &[Polynomial], ord: &TermOrder, budget: GroebnerBudget) -> Result<bool> {
    let reducer = Reducer::new(gens, ord)?;
    let mut pairs = 0usize;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if coprime(&reducer.leads[i].0, &reducer.leads[j].0) {
                continue;
            }
            pairs += 1;
            if pairs > budget.max_pairs {
                return Err(Error::BudgetExceeded(format!("more than {} S-pairs", budget.max_pairs)));
            }
            let s = s_polynomial(&gens[i], &gens[j], ord)?;
            if !reducer.reduce(&s, ord, budget.max_terms)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Completes `gens` to a Gröbner basis. Pairs are processed by increasing
/// degree of the lcm of their leading monomials. The result is interreduced
/// at the level of leading monomials (no basis element's leading monomial is
/// divisible by another's) and made monic.
pub fn buchberger_complete(gens: &[Polynomial], ord: &TermOrder, budget: GroebnerBudget) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(ord));
        }
    }
    let lead = |p: &Polynomial| -> Result<Exponents> { p.leading_monomial(ord).cloned() };
    let mut leads: Vec<Exponents> = basis.iter().map(lead).collect::<Result<_>>()?;
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let push = |queue: &mut BTreeSet<(u32, usize, usize)>, leads: &[Exponents], i: usize, j: usize| {
        if !coprime(&leads[i], &leads[j]) {
            queue.insert((lcm(&leads[i], &leads[j]).iter().sum(), i, j));
        }
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(&mut queue, &leads, i, j);
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = queue.pop_first() {
        let (_, i, j) = pair;
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!("more than {} S-pairs", budget.max_pairs)));
        }
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let h = Reducer::new(&basis, ord)?.reduce(&s, ord, budget.max_terms)?;
        if h.is_zero() {
            continue;
        }
        if basis.len() >= budget.max_basis {
            return Err(Error::BudgetExceeded(format!("basis larger than {}", budget.max_basis)));
        }
        basis.push(h.monic(ord));
        leads.push(lead(basis.last().unwrap())?);
        let k = basis.len() - 1;
        for i in 0..k {
            push(&mut queue, &leads, i, k);
        }
    }
    let mut keep = Vec::new();
    for (i, l) in leads.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, m)| j != i && divides(m, l) && (m != l || j < i));
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn one_division_step() {
        let f = &x(3, 0) * &x(3, 2);
        let g = &f - &(&x(3, 1) * &x(3, 1));
        assert_eq!(reduce(&f, &[g], &TermOrder::Lex).unwrap(), &x(3, 1) * &x(3, 1));
        assert!(reduce(&Polynomial::zero(3), &[x(3, 0)], &TermOrder::Lex).unwrap().is_zero());
    }

    #[test]
    fn verify_small_cases() {
        let budget = GroebnerBudget::default();
        assert!(buchberger_verify(&[x(3, 0), x(3, 1)], &TermOrder::Lex, budget).unwrap());
        let f = &(&x(3, 0) * &x(3, 1)) - &(&x(3, 2) * &x(3, 2));
        assert!(!buchberger_verify(&[f.clone(), x(3, 0)], &TermOrder::Lex, budget).unwrap());
        let gb = buchberger_complete(&[f, x(3, 0)], &TermOrder::Lex, budget).unwrap();
        assert!(buchberger_verify(&gb, &TermOrder::Lex, budget).unwrap());
        assert!(gb.contains(&(&x(3, 2) * &x(3, 2))));
    }

    #[test]
    fn twisted_cubic_needs_no_completion() {
        // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
        let n = 4;
        let m = |a: usize, b: usize, c: usize, d: usize| &(&x(n, a) * &x(n, b)) - &(&x(n, c) * &x(n, d));
        let gens = [m(0, 2, 1, 1), m(0, 3, 1, 2), m(1, 3, 2, 2)];
        assert!(buchberger_verify(&gens, &TermOrder::Lex, GroebnerBudget::default()).unwrap());
        let scaled = gens[0].scale(&rational(-3));
        assert!(buchberger_verify(
            &[scaled, gens[1].clone(), gens[2].clone()],
            &TermOrder::Lex,
            GroebnerBudget::default()
        )
        .unwrap());
    }

    #[test]
    fn term_budget_is_reported() {
        let f = &(&x(2, 0) + &x(2, 1)).pow(6) - &x(2, 0).pow(6);
        let g = &x(2, 0) - &x(2, 1);
        let budget = GroebnerBudget { max_terms: 2, ..Default::default() };
        let err = buchberger_verify(&[g.clone(), f], &TermOrder::Lex, budget).unwrap_err();
        assert!(err.is_budget());
    }
}
