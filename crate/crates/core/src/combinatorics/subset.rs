//! Integer compositions, subsets of `[n-1]`, permutations, and the
//! descent/peak/odd-set bijections between them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// An ordered list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return invalid("composition parts must be positive");
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All parts odd.
    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A subset of `[n-1] = {1, ..., n-1}`, stored as a bitmask.
///
/// The ambient `n` is part of the value: `{2}` as a subset of `[4]` and of
/// `[5]` are different objects. Peak sets and odd sets are subsets with extra
/// structure and use the same type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    mask: u64,
}

impl Subset {
    pub const MAX_N: usize = 63;

    pub fn new(n: usize, elems: &[usize]) -> Result<Self> {
        if n > Self::MAX_N {
            return invalid(format!("n = {n} is too large (max {})", Self::MAX_N));
        }
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e >= n.max(1) {
                return invalid(format!("element {e} is outside [n-1] for n = {n}"));
            }
            if mask & (1 << e) != 0 {
                return invalid(format!("duplicate element {e}"));
            }
            mask |= 1 << e;
        }
        Ok(Subset { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        Subset { n, mask: 0 }
    }

    /// `[n-1]` itself.
    pub fn full(n: usize) -> Self {
        Subset { n, mask: Self::full_mask(n) }
    }

    fn full_mask(n: usize) -> u64 {
        if n <= 1 {
            0
        } else {
            ((1u64 << n) - 1) & !1
        }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert_eq!(mask & !Self::full_mask(n), 0);
        Subset { n, mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e < 64 && self.mask & (1 << e) != 0
    }

    pub fn elems(&self) -> Vec<usize> {
        (1..self.n).filter(|&e| self.contains(e)).collect()
    }

    pub fn max_elem(&self) -> usize {
        if self.mask == 0 {
            0
        } else {
            63 - self.mask.leading_zeros() as usize
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset::from_mask(self.n, self.mask | other.mask)
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        Subset::from_mask(self.n, self.mask & !other.mask)
    }

    /// `{a + 1 : a in A}` intersected with `[n-1]`.
    pub fn shift_up(&self) -> Subset {
        Subset::from_mask(self.n, (self.mask << 1) & Self::full_mask(self.n))
    }

    /// `{a - 1 : a in A}` intersected with `[n-1]`.
    pub fn shift_down(&self) -> Subset {
        Subset::from_mask(self.n, (self.mask >> 1) & Self::full_mask(self.n))
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(&self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = self.mask;
        loop {
            out.push(Subset::from_mask(self.n, sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.mask;
        }
        out.reverse();
        out
    }

    /// All `C` with `self ⊆ C ⊆ [n-1]`.
    pub fn supersets(&self) -> Vec<Subset> {
        let free = Subset::from_mask(self.n, Self::full_mask(self.n) & !self.mask);
        free.subsets().into_iter().map(|c| Subset::from_mask(self.n, c.mask | self.mask)).collect()
    }

    /// All subsets of `[n-1]`.
    pub fn all(n: usize) -> Vec<Subset> {
        Subset::full(n).subsets()
    }

    /// No two consecutive elements and every element in `{2, ..., n-1}`.
    pub fn is_peak_set(&self) -> bool {
        !self.contains(1) && self.mask & (self.mask >> 1) == 0
    }

    /// Consecutive differences of `0 = a_0 < a_1 < ... < a_k < a_{k+1} = n`
    /// are all odd.
    pub fn is_odd_set(&self) -> bool {
        let mut prev = 0;
        for a in self.elems().into_iter().chain(std::iter::once(self.n)) {
            if (a - prev) % 2 == 0 {
                return false;
            }
            prev = a;
        }
        true
    }

    /// Peak sets of `[n]`, in canonical subset order.
    pub fn peak_sets(n: usize) -> Vec<Subset> {
        let mut v: Vec<Subset> = Subset::all(n).into_iter().filter(|s| s.is_peak_set()).collect();
        v.sort();
        v
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ambient size, then cardinality, then lexicographic on elements.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.len().cmp(&other.len())).then_with(|| self.elems().cmp(&other.elems()))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elems().iter().map(|e| e.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A permutation of `[n]` in one-line notation (1-based images).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return invalid(format!("{images:?} is not a permutation of [{n}]"));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn descent_set(&self) -> Subset {
        let n = self.n();
        let mut mask = 0u64;
        for i in 1..n {
            if self.images[i - 1] > self.images[i] {
                mask |= 1 << i;
            }
        }
        Subset::from_mask(n, mask)
    }

    pub fn peak_set(&self) -> Subset {
        let n = self.n();
        let mut mask = 0u64;
        for i in 2..n {
            let (a, b, c) = (self.images[i - 2], self.images[i - 1], self.images[i]);
            if a < b && b > c {
                mask |= 1 << i;
            }
        }
        Subset::from_mask(n, mask)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Comma-separated images, or a bare digit string when `n ≤ 9`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("permutation {s:?}"));
        let images: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Permutation::new(images).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// Parse a comma-separated subset of `[n-1]`; braces and `∅` are accepted.
pub fn parse_subset(s: &str, n: usize) -> Result<Subset> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if t.is_empty() || t == "∅" {
        return Ok(Subset::empty(n));
    }
    let elems: std::result::Result<Vec<usize>, _> = t.split(',').map(|x| x.trim().parse::<usize>()).collect();
    let elems = elems.map_err(|e| Error::Parse(format!("subset {s:?}: {e}")))?;
    Subset::new(n, &elems).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Lexicographic successor in place; false when `v` was the last permutation.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(a_1, a_2 - a_1, ..., n - a_k)`.
pub fn comp_of_subset(a: &Subset) -> Composition {
    let mut parts = Vec::with_capacity(a.len() + 1);
    let mut prev = 0;
    for e in a.elems() {
        parts.push(e - prev);
        prev = e;
    }
    if a.n() > 0 {
        parts.push(a.n() - prev);
    }
    Composition { parts }
}

/// Inverse of [`comp_of_subset`]: the partial sums, last one dropped.
pub fn subset_of_comp(c: &Composition) -> Subset {
    let n = c.n();
    let mut mask = 0u64;
    let mut acc = 0;
    for &p in &c.parts()[..c.len().saturating_sub(1)] {
        acc += p;
        mask |= 1 << acc;
    }
    Subset::from_mask(n, mask)
}

/// `Odd(B) = [n-1] \ (B ∪ (B-1))` for a peak set `B`.
pub fn odd_of_peak(b: &Subset) -> Result<Subset> {
    if !b.is_peak_set() {
        return invalid(format!("{{{b}}} is not a peak set of [{}]", b.n()));
    }
    Ok(Subset::full(b.n()).minus(&b.union(&b.shift_down())))
}

/// The unique peak set `B` with `Odd(B) = a`.
pub fn peak_of_odd(a: &Subset) -> Result<Subset> {
    if !a.is_odd_set() {
        return invalid(format!("{{{a}}} is not an odd set of [{}]", a.n()));
    }
    // Each gap between consecutive elements of a ∪ {0, n} has even length and
    // splits into pairs (b-1, b); the peak set collects the right ends.
    let n = a.n();
    let mut mask = 0u64;
    let mut prev = 0;
    for e in a.elems().into_iter().chain(std::iter::once(n)) {
        let mut b = prev + 2;
        while b < e {
            mask |= 1 << b;
            b += 2;
        }
        prev = e;
    }
    Ok(Subset::from_mask(n, mask))
}

/// `ODiff(A) = {a_i : a_i - a_{i-1} odd}` with `a_0 = 0`; needs `n - max(A)`
/// odd (with `max(∅) = 0`).
pub fn odiff(a: &Subset) -> Result<Subset> {
    if (a.n() - a.max_elem()) % 2 == 0 {
        return invalid(format!("n - max(A) is even for A = {{{a}}}, n = {}", a.n()));
    }
    let mut mask = 0u64;
    let mut prev = 0;
    for e in a.elems() {
        if (e - prev) % 2 == 1 {
            mask |= 1 << e;
        }
        prev = e;
    }
    Ok(Subset::from_mask(a.n(), mask))
}

/// Compositions of `n` in (length, lexicographic) order.
pub fn compositions(n: usize) -> Vec<Composition> {
    let mut v: Vec<Composition> = Subset::all(n).iter().map(comp_of_subset).collect();
    if n == 0 {
        v = vec![Composition { parts: vec![] }];
    }
    v.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.parts.cmp(&y.parts)));
    v
}

pub fn odd_compositions(n: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.is_odd()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    #[test]
    fn comp_of_subset_examples() {
        assert_eq!(comp_of_subset(&s(6, &[2, 3])).parts(), &[2, 1, 3]);
        assert_eq!(comp_of_subset(&s(5, &[])).parts(), &[5]);
        assert_eq!(comp_of_subset(&s(4, &[1, 2, 3])).parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn odd_and_peak_sets() {
        assert_eq!(odd_of_peak(&s(11, &[2, 5, 7, 10])).unwrap(), s(11, &[3, 8]));
        assert_eq!(odd_of_peak(&s(6, &[])).unwrap(), Subset::full(6));
        assert_eq!(peak_of_odd(&s(11, &[3, 8])).unwrap(), s(11, &[2, 5, 7, 10]));
        assert!(odd_of_peak(&s(6, &[2, 3])).is_err());
        assert!(peak_of_odd(&s(6, &[2])).is_err());
    }

    #[test]
    fn odiff_examples() {
        assert_eq!(odiff(&s(9, &[1, 3, 4, 8])).unwrap(), s(9, &[1, 4]));
        assert_eq!(odiff(&s(7, &[])).unwrap(), s(7, &[]));
        let r = odiff(&s(5, &[2])).unwrap();
        assert!(r.is_empty() && r.is_odd_set());
        assert!(odiff(&s(6, &[])).is_err());
    }

    #[test]
    fn descents_and_peaks() {
        let p = Permutation::new(vec![3, 7, 2, 8, 4, 5, 1, 6]).unwrap();
        assert_eq!(p.descent_set(), s(8, &[2, 4, 6]));
        let q = Permutation::new(vec![2, 7, 8, 1, 3, 4, 5, 6, 9]).unwrap();
        assert_eq!(q.peak_set(), s(9, &[3]));
        assert!(Permutation::identity(5).descent_set().is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(odd_compositions(6).len(), 8);
        assert_eq!(Subset::peak_sets(6).len(), 8);
        assert_eq!(Subset::new(4, &[1, 3]).unwrap().supersets().len(), 2);
    }
}
