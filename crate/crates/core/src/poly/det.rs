use std::collections::HashMap;

use super::Polynomial;

/// Determinant of a square matrix by Laplace expansion along rows, memoized
/// on the set of columns still available.
pub fn determinant(m: &[Vec<Polynomial>], n_vars: usize) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    assert!(n < 64, "matrix too large");
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    expand(m, n_vars, 0, (1u64 << n) - 1, &mut memo)
}

fn expand(
    m: &[Vec<Polynomial>],
    n_vars: usize,
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::one(n_vars);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(n_vars);
    let mut sign_positive = true;
    for j in 0..m.len() {
        if cols >> j & 1 == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = expand(m, n_vars, row + 1, cols & !(1u64 << j), memo);
            let term = entry * &sub;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn sign(p: &[usize]) -> bool {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    fn leibniz(m: &[Vec<Polynomial>], n_vars: usize) -> Polynomial {
        let mut acc = Polynomial::zero(n_vars);
        for p in permutations(m.len()) {
            let mut t = Polynomial::one(n_vars);
            for (i, &j) in p.iter().enumerate() {
                t = &t * &m[i][j];
            }
            acc = if sign(&p) { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn two_by_two() {
        let x = |i| Polynomial::var(3, i);
        let m = vec![vec![x(0), x(1)], vec![x(1), x(2)]];
        assert_eq!(determinant(&m, 3), &(&x(0) * &x(2)) - &(&x(1) * &x(1)));
        let id = vec![vec![Polynomial::one(3), Polynomial::zero(3)], vec![Polynomial::zero(3), Polynomial::one(3)]];
        assert_eq!(determinant(&id, 3), Polynomial::one(3));
    }

    #[test]
    fn agrees_with_permutation_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let nv = 3;
        for _ in 0..60 {
            let n = rng.random_range(1..=4);
            let m: Vec<Vec<Polynomial>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.random_bool(0.4) {
                                Polynomial::zero(nv)
                            } else {
                                let e = (0..nv).map(|_| rng.random_range(0..2)).collect();
                                Polynomial::monomial(e, rational(rng.random_range(-3..4)))
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m, nv), leibniz(&m, nv));
        }
    }
}
