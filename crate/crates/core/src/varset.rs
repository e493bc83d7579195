//! Squarefree monomials in at most 128 variables, stored as bitsets.

use std::fmt;

/// Hard cap on the number of variables a [`VarSet`] can hold.
pub const MAX_VARS: usize = 128;

/// A squarefree monomial (equivalently a set of variable ids).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u128);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(id: usize) -> Self {
        debug_assert!(id < MAX_VARS);
        VarSet(1u128 << id)
    }

    /// The product of the first `n` variables.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u128::MAX)
        } else {
            VarSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, id: usize) -> bool {
        id < MAX_VARS && self.0 >> id & 1 == 1
    }

    pub fn insert(&mut self, id: usize) {
        self.0 |= 1u128 << id;
    }

    pub fn remove(&mut self, id: usize) {
        self.0 &= !(1u128 << id);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Divisibility of squarefree monomials.
    pub fn divides(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_coprime(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    /// lcm, i.e. set union.
    pub fn lcm(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    /// gcd, i.e. set intersection.
    pub fn gcd(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    /// `self / gcd(self, other)`, which generates `(self) : other`.
    pub fn colon(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Quotient of a multiple by a divisor.
    pub fn quotient(self, divisor: VarSet) -> VarSet {
        debug_assert!(divisor.divides(self));
        VarSet(self.0 & !divisor.0)
    }

    /// Complement within the first `n` variables.
    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & VarSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Minimal generators of the ideal generated by `gens`: drops duplicates and
/// every monomial divisible by another one. Output sorted by degree, then by
/// bits.
pub fn minimalize(gens: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut all: Vec<VarSet> = gens.into_iter().collect();
    all.sort_by_key(|g| (g.len(), g.bits()));
    all.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(all.len());
    for g in all {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    kept
}
