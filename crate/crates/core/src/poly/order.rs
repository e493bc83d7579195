use std::cmp::Ordering;
use std::sync::Arc;

use crate::params::{OrderKind, YVars};

/// Term orders used across the crate.
#[derive(Clone, Debug)]
pub enum TermOrder {
    /// Lex with variable 0 largest; the natural order of exponent vectors.
    Lex,
    /// Total degree first, then lex with variables compared by rank
    /// (larger rank means larger variable).
    Graded(Arc<GradedRanks>),
    /// The order on `K[x, Y]`: Y-degree (the `t`-degree of the Rees algebra)
    /// first, then lex on the image `x^a * prod x_alpha^{e_alpha}`, then lex on
    /// the Y-part and finally on the x-part.
    Rees(Arc<ReesLayout>),
}

#[derive(Debug)]
pub struct GradedRanks {
    /// Variable ids from largest to smallest.
    descending: Vec<usize>,
}

#[derive(Debug)]
pub struct ReesLayout {
    n_x: usize,
    images: Vec<Vec<u32>>,
    y_descending: Vec<usize>,
}

impl ReesLayout {
    pub fn n_x(&self) -> usize {
        self.n_x
    }

    pub fn n_y(&self) -> usize {
        self.images.len()
    }

    fn image(&self, e: &[u32]) -> Vec<u32> {
        let mut out = e[..self.n_x].to_vec();
        for (k, &a) in e[self.n_x..].iter().enumerate() {
            if a > 0 {
                for (o, &b) in out.iter_mut().zip(&self.images[k]) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl TermOrder {
    /// Graded order with the given per-variable ranks.
    pub fn graded_ranked(ranks: Vec<usize>) -> Self {
        let mut descending: Vec<usize> = (0..ranks.len()).collect();
        descending.sort_by_key(|&i| std::cmp::Reverse(ranks[i]));
        TermOrder::Graded(Arc::new(GradedRanks { descending }))
    }

    /// The order on `K[Y]` induced by the lex or revlex order of the `x_alpha`,
    /// refined to a graded order.
    pub fn y_induced(vars: &YVars, kind: OrderKind) -> Self {
        Self::graded_ranked((0..vars.len()).map(|i| vars.rank(kind, i)).collect())
    }

    /// The Rees order on `K[x_1..x_N, Y_1..Y_bigN]` (x-variables first).
    pub fn rees(vars: &YVars) -> Self {
        let n = vars.params().n_vars();
        let images = vars.all().iter().map(|a| a.x_monomial(n).exponents().to_vec()).collect();
        let mut y_descending: Vec<usize> = (0..vars.len()).collect();
        y_descending.sort_by_key(|&i| std::cmp::Reverse(vars.rank(OrderKind::Lex, i)));
        TermOrder::Rees(Arc::new(ReesLayout { n_x: n, images, y_descending }))
    }

    pub(crate) fn is_plain_lex(&self) -> bool {
        matches!(self, TermOrder::Lex)
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::Graded(g) => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| ranked_lex(&g.descending, a, b))
            }
            TermOrder::Rees(l) => {
                let ya: u32 = a[l.n_x..].iter().sum();
                let yb: u32 = b[l.n_x..].iter().sum();
                ya.cmp(&yb)
                    .then_with(|| l.image(a).cmp(&l.image(b)))
                    .then_with(|| ranked_lex(&l.y_descending, &a[l.n_x..], &b[l.n_x..]))
                    .then_with(|| a[..l.n_x].cmp(&b[..l.n_x]))
            }
        }
    }
}

fn ranked_lex(descending: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in descending {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ScrollParams;

    #[test]
    fn graded_beats_lex() {
        let ord = TermOrder::graded_ranked(vec![2, 1, 0]);
        assert_eq!(ord.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(ord.cmp(&[1, 1, 0], &[0, 2, 0]), Ordering::Greater);
        let flipped = TermOrder::graded_ranked(vec![0, 1, 2]);
        assert_eq!(flipped.cmp(&[1, 1, 0], &[0, 2, 0]), Ordering::Less);
    }

    #[test]
    fn rees_compares_y_degree_then_image() {
        let vars = YVars::new(ScrollParams::new(2, 3, 1).unwrap());
        let ord = TermOrder::rees(&vars);
        let n = 4;
        let mut xy = vec![0u32; n + 3];
        xy[0] = 1; // x1
        xy[n + 2] = 1; // Y[2,4]
        let mut x3 = vec![0u32; n + 3];
        x3[0] = 3;
        assert_eq!(ord.cmp(&xy, &x3), Ordering::Greater);
        // x1*Y[2,4] has image x1 x2 x4; x3*Y[1,3] has image x1 x3^2
        let mut other = vec![0u32; n + 3];
        other[2] = 1;
        other[n] = 1;
        assert_eq!(ord.cmp(&xy, &other), Ordering::Greater);
    }
}
