//! Exact sparse Gaussian elimination over the rationals.

use num_traits::Zero;

use super::lincomb::LinComb;

/// An incrementally built echelon basis. Each stored row remembers which
/// combination of inserted vectors produced it, so span membership can be
/// answered with explicit coefficients.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, LinComb<K>, LinComb<usize>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduce `v` against the stored rows. Returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &LinComb<K>) -> (LinComb<K>, LinComb<usize>) {
        let mut residual = v.clone();
        let mut used = LinComb::zero();
        // A row never contains the pivot of an earlier row, so one pass in
        // insertion order clears every pivot.
        for (pivot, row, combo) in &self.rows {
            let c = residual.get(pivot);
            if c.is_zero() {
                continue;
            }
            let f = c / row.get(pivot);
            residual.add_scaled(row, &-f.clone());
            used.add_scaled(combo, &f);
        }
        (residual, used)
    }

    /// Insert a vector; returns true when it is independent of the previous ones.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let label = self.inserted;
        self.inserted += 1;
        let (residual, used) = self.reduce(v);
        match residual.first_key().cloned() {
            None => false,
            Some(pivot) => {
                let mut combo = used.neg();
                combo.add_int(label, 1);
                self.rows.push((pivot, residual, combo));
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients `c_i` with `v = Σ c_i · (i-th inserted vector)`, if any.
    pub fn solve(&self, v: &LinComb<K>) -> Option<LinComb<usize>> {
        let (residual, used) = self.reduce(v);
        residual.is_zero().then_some(used)
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// `dim(U ∩ V) = dim U + dim V - dim(U + V)`.
pub fn intersection_dim<K: Ord + Clone>(u: &[LinComb<K>], v: &[LinComb<K>]) -> usize {
    let both: Vec<LinComb<K>> = u.iter().chain(v.iter()).cloned().collect();
    rank(u) + rank(v) - rank(&both)
}

/// True when the two families span the same space.
pub fn same_span<K: Ord + Clone>(u: &[LinComb<K>], v: &[LinComb<K>]) -> bool {
    let (ru, rv) = (rank(u), rank(v));
    ru == rv && intersection_dim(u, v) == ru
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lincomb::rat;

    fn v(entries: &[(u32, i64)]) -> LinComb<u32> {
        entries.iter().map(|&(k, c)| (k, rat(c))).collect()
    }

    #[test]
    fn rank_and_solve() {
        let vs = [v(&[(1, 1), (2, 1)]), v(&[(2, 1), (3, 1)]), v(&[(1, 1), (3, -1)])];
        assert_eq!(rank(&vs), 2);
        let mut e = Echelon::new();
        for x in &vs {
            e.insert(x);
        }
        let target = v(&[(1, 2), (2, 3), (3, 1)]);
        let coeffs = e.solve(&target).unwrap();
        let mut back = LinComb::zero();
        for (i, c) in coeffs.iter() {
            back.add_scaled(&vs[*i], c);
        }
        assert_eq!(back, target);
        assert!(e.solve(&v(&[(4, 1)])).is_none());
    }

    #[test]
    fn spans() {
        let u = [v(&[(1, 1)]), v(&[(2, 1)])];
        let w = [v(&[(1, 1), (2, 1)]), v(&[(1, 1), (2, -1)])];
        assert!(same_span(&u, &w));
        assert_eq!(intersection_dim(&u, &[v(&[(2, 1), (3, 1)])]), 0);
    }
}
