//! Sparse multivariate polynomials over the rationals.

mod det;
mod groebner;
mod order;

pub use det::determinant;
pub use groebner::{buchberger_complete, buchberger_verify, reduce, s_polynomial, GroebnerBudget};
pub use order::{ReesLayout, TermOrder};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense exponent vector over a declared variable universe.
pub type Exponents = Vec<u32>;

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial with exact rational coefficients. Terms are keyed by exponent
/// vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Self { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], c);
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, BigRational::one())
    }

    /// The variable with 0-based id `i`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exponents: Exponents, c: BigRational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: BigRational) {
        debug_assert_eq!(e.len(), self.n_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The `ord`-greatest term.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(&Exponents, &BigRational)> {
        let lt = if ord.is_plain_lex() {
            self.terms.last_key_value()
        } else {
            self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
        };
        lt.ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Result<&Exponents> {
        self.leading_term(ord).map(|(e, _)| e)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    /// `c * x^e * self`.
    pub fn mul_term(&self, e: &[u32], c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, a)| (m.iter().zip(e).map(|(x, y)| x + y).collect(), a * c)).collect(),
        }
    }

    /// `self - c * x^e * g`, in place.
    pub fn sub_mul_term(&mut self, e: &[u32], c: &BigRational, g: &Polynomial) {
        for (m, a) in &g.terms {
            let prod: Exponents = m.iter().zip(e).map(|(x, y)| x + y).collect();
            self.add_term(prod, -(a * c));
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the lcm of denominators and divides by the gcd of
    /// numerators; the sign is kept.
    pub fn content(&self) -> BigRational {
        use num_integer::Integer;
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        BigRational::new(num, den)
    }

    /// Scales so that the `ord`-leading coefficient is 1.
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// Re-embeds into a universe of `n_vars` variables, sending variable `i`
    /// to `map[i]`.
    pub fn embed(&self, n_vars: usize, map: &[usize]) -> Polynomial {
        let mut p = Polynomial::zero(n_vars);
        for (e, c) in &self.terms {
            let mut f = vec![0; n_vars];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            p.add_term(f, c.clone());
        }
        p
    }

    /// Substitutes variable `i` by `images[i]`; all images share one universe.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.n_vars);
        let target = images.first().map_or(0, |p| p.n_vars);
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.n_vars];
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Renders with the given variable names, terms in descending `ord`.
    pub fn render(&self, ord: &TermOrder, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        let mut s = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = render_monomial(e, &name);
            if mono == "1" {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

pub fn render_monomial(e: &[u32], name: impl Fn(usize) -> String) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { name(i) } else { format!("{}^{k}", name(i)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn quotient(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&TermOrder::Lex, |i| format!("v{i}")))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n_vars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                // exponents add when monomials multiply
                #[allow(clippy::suspicious_arithmetic_impl)]
                let product: Exponents = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(product, c * d);
            }
        }
        out
    }
}
