use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational coefficient.
pub type Rational = BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// A finite formal sum `Σ c_k · k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements. Iteration follows the key order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K) -> Self {
        Self::term(k, Rational::one())
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add_int(&mut self, k: K, c: i64) {
        self.add_term(k, rat(c));
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut r = self.clone();
        r.add_scaled(other, &Rational::one());
        r
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut r = self.clone();
        r.add_scaled(other, &-Rational::one());
        r
    }

    pub fn scale(&self, c: &Rational) -> LinComb<K> {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn neg(&self) -> LinComb<K> {
        self.scale(&-Rational::one())
    }

    pub fn get(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn first_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    /// Apply a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, F>(&self, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible version of [`LinComb::map_linear`].
    pub fn try_map_linear<L: Ord + Clone, E, F>(&self, mut f: F) -> Result<LinComb<L>, E>
    where
        F: FnMut(&K) -> Result<LinComb<L>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Relabel keys injectively or not; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Rational);
    type IntoIter = std::collections::btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

/// Tensor product of two combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term((a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// `(f ⊗ g)(t)` for linear maps given on basis elements.
pub fn tensor_map<A, B, C, D, F, G>(t: &LinComb<(A, B)>, mut f: F, mut g: G) -> LinComb<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
    F: FnMut(&A) -> LinComb<C>,
    G: FnMut(&B) -> LinComb<D>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&tensor(&f(a), &g(b)), c);
    }
    out
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}*[{k}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_pruning_and_scaling() {
        let mut x: LinComb<u32> = LinComb::single(7);
        x.add_term(7, rat(-1));
        assert!(x.is_zero());
        let y = LinComb::single(3u32).scale(&rat(2)).scale(&(rat(3) / rat(2)));
        assert_eq!(y, LinComb::term(3, rat(3)));
        let t = tensor(&LinComb::single(1u32), &LinComb::single(2u32));
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&(1, 2)), rat(1));
    }
}
