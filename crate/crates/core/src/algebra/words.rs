//! Truncated word realization: an element of degree `n` is evaluated on `m`
//! noncommuting variables and stored as an exact multiset of words.

use std::collections::BTreeMap;

use num_traits::One;

use super::lincomb::{LinComb, Rational};
use crate::combinatorics::SetComposition;
use crate::error::{Error, Result};

/// A word over `[m]`, letters stored 1-based.
pub type Word = Vec<u8>;

/// Default cap on `m^n` for any single realization.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Reject realizations whose word space `m^n` exceeds `cap`.
pub fn check_size(m: usize, n: usize, cap: u128) -> Result<()> {
    let mut size: u128 = 1;
    for _ in 0..n {
        size = size.saturating_mul(m as u128);
    }
    if size > cap || m > u8::MAX as usize {
        return Err(Error::OracleTooLarge { size, cap });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPolynomial {
    n: usize,
    m: usize,
    terms: LinComb<Word>,
}

impl WordPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        WordPolynomial { n, m, terms: LinComb::zero() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &LinComb<Word> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &[u8]) -> Rational {
        self.terms.get(&w.to_vec())
    }

    pub fn add_word(&mut self, w: Word, c: Rational) {
        debug_assert_eq!(w.len(), self.n);
        self.terms.add_term(w, c);
    }

    pub fn add_scaled(&mut self, other: &WordPolynomial, c: &Rational) {
        self.terms.add_scaled(&other.terms, c);
    }
}

/// Visit every strictly increasing `k`-tuple of values in `[m]`.
fn for_each_increasing(m: usize, k: usize, mut f: impl FnMut(&[u8])) {
    if k > m {
        return;
    }
    let mut vals: Vec<u8> = (1..=k as u8).collect();
    loop {
        f(&vals);
        // Advance the rightmost value that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (vals[i] as usize) < m - (k - 1 - i) {
                break;
            }
            if i == 0 {
                return;
            }
        }
        vals[i] += 1;
        for j in i + 1..k {
            vals[j] = vals[j - 1] + 1;
        }
    }
}

/// `M_φ` on `m` variables: positions sharing a block get equal letters and
/// letters increase from block to block.
pub fn realize_m(phi: &SetComposition, m: usize) -> WordPolynomial {
    let n = phi.n();
    let mut out = WordPolynomial::zero(n, m);
    if n == 0 {
        out.add_word(Vec::new(), Rational::one());
        return out;
    }
    let mut w = vec![0u8; n];
    for_each_increasing(m, phi.len(), |vals| {
        for (b, block) in phi.blocks().iter().enumerate() {
            for &e in block {
                w[e - 1] = vals[b];
            }
        }
        out.add_word(w.clone(), Rational::one());
    });
    out
}

/// Linear extension of [`realize_m`] to an M-basis combination of degree `n`.
pub fn realize(x: &LinComb<SetComposition>, n: usize, m: usize, cap: u128) -> Result<WordPolynomial> {
    check_size(m, n, cap)?;
    let mut out = WordPolynomial::zero(n, m);
    for (phi, c) in x.iter() {
        if phi.n() != n {
            return Err(Error::Invalid(format!("{phi} is not of degree {n}")));
        }
        out.add_scaled(&realize_m(phi, m), c);
    }
    Ok(out)
}

/// Concatenation product of word polynomials over the same alphabet.
pub fn word_product(p: &WordPolynomial, q: &WordPolynomial) -> Result<WordPolynomial> {
    if p.m != q.m {
        return Err(Error::Invalid(format!("alphabet sizes differ: {} vs {}", p.m, q.m)));
    }
    let mut out = WordPolynomial::zero(p.n + q.n, p.m);
    for (u, a) in p.terms.iter() {
        for (v, b) in q.terms.iter() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_word(w, a * b);
        }
    }
    Ok(out)
}

/// Positions grouped by equal letters, groups ordered by letter value.
pub fn word_pattern(w: &[u8]) -> SetComposition {
    let mut groups: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
    for (i, &c) in w.iter().enumerate() {
        groups.entry(c).or_default().push(i + 1);
    }
    SetComposition::from_blocks_unchecked(w.len(), groups.into_values().collect())
}

/// Exact combination of word pairs, the realization of a tensor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorWordPolynomial {
    terms: LinComb<(Word, Word)>,
}

impl TensorWordPolynomial {
    pub fn terms(&self) -> &LinComb<(Word, Word)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

/// Realize each tensor factor on `m` variables.
pub fn realize_tensor(
    t: &LinComb<(SetComposition, SetComposition)>,
    m: usize,
    cap: u128,
) -> Result<TensorWordPolynomial> {
    let mut terms = LinComb::zero();
    for ((a, b), c) in t.iter() {
        check_size(m, a.n(), cap)?;
        check_size(m, b.n(), cap)?;
        let (ra, rb) = (realize_m(a, m), realize_m(b, m));
        for (u, x) in ra.terms.iter() {
            for (v, y) in rb.terms.iter() {
                terms.add_term((u.clone(), v.clone()), c * x * y);
            }
        }
    }
    Ok(TensorWordPolynomial { terms })
}

/// Split a realization over `x_1 < ... < x_m < y_1 < ... < y_m` (alphabet
/// `2m`) into its `x`-subword and its `y`-subword.
pub fn split_bialphabet(p: &WordPolynomial, m: usize) -> Result<TensorWordPolynomial> {
    if p.m != 2 * m {
        return Err(Error::Invalid(format!("expected alphabet {} but got {}", 2 * m, p.m)));
    }
    let mut terms = LinComb::zero();
    for (w, c) in p.terms.iter() {
        let u: Word = w.iter().copied().filter(|&l| (l as usize) <= m).collect();
        let v: Word = w.iter().filter(|&&l| (l as usize) > m).map(|&l| l - m as u8).collect();
        terms.add_term((u, v), c.clone());
    }
    Ok(TensorWordPolynomial { terms })
}

/// Decode a realization over the `m²` letters `x_i y_j` (ordered
/// lexicographically) into the pair of words `(i-letters, j-letters)`.
pub fn split_paired(p: &WordPolynomial, m: usize) -> Result<TensorWordPolynomial> {
    if p.m != m * m {
        return Err(Error::Invalid(format!("expected alphabet {} but got {}", m * m, p.m)));
    }
    let mut terms = LinComb::zero();
    for (w, c) in p.terms.iter() {
        let u: Word = w.iter().map(|&l| ((l as usize - 1) / m + 1) as u8).collect();
        let v: Word = w.iter().map(|&l| ((l as usize - 1) % m + 1) as u8).collect();
        terms.add_term((u, v), c.clone());
    }
    Ok(TensorWordPolynomial { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    #[test]
    fn small_realizations() {
        let r = realize_m(&sc("1,2"), 2);
        assert_eq!(r.terms().keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1], vec![2, 2]]);
        let r = realize_m(&sc("1|2"), 2);
        assert_eq!(r.terms().keys().cloned().collect::<Vec<_>>(), vec![vec![1, 2]]);
        assert_eq!(realize_m(&sc("2|1,3"), 4).terms().len(), 6);
        assert!(realize_m(&sc("1|2|3"), 2).is_zero());
    }

    #[test]
    fn pattern_and_product() {
        assert_eq!(word_pattern(&[2, 1, 2]), sc("2|1,3"));
        assert_eq!(word_pattern(&[1, 1, 1]), sc("1,2,3"));
        let mut a = WordPolynomial::zero(2, 1);
        a.add_word(vec![1, 1], Rational::one());
        let mut b = WordPolynomial::zero(1, 1);
        b.add_word(vec![1], Rational::one());
        let ab = word_product(&a, &b).unwrap();
        assert_eq!(ab.coeff(&[1, 1, 1]), Rational::one());
        for phi in SetComposition::all(3) {
            for w in realize_m(&phi, 3).terms().keys() {
                assert_eq!(word_pattern(w), phi);
            }
        }
    }

    #[test]
    fn guard_rejects_large_spaces() {
        assert!(check_size(10, 7, DEFAULT_CAP).is_ok());
        assert!(matches!(check_size(10, 8, DEFAULT_CAP), Err(Error::OracleTooLarge { .. })));
    }
}
