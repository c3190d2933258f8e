//! Set partitions of `[n]`, the partition lattice and its Möbius function.
//!
//! Order convention: `π ≤ τ` when every block of `τ` lies inside a block of
//! `π`. The one-block partition is the minimum and the all-singletons
//! partition is the maximum.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::factorial;
use super::setcomp::{fmt_blocks, parse_blocks};
use crate::error::{invalid, Error, Result};

/// Unordered blocks, stored sorted by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return invalid("set partition has an empty block");
            }
            for &e in b {
                if e == 0 || e > n || seen[e] {
                    return invalid(format!("blocks do not partition [{n}]"));
                }
                seen[e] = true;
            }
        }
        Ok(Self::from_blocks_unchecked(n, blocks))
    }

    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    pub fn single_block(n: usize) -> Self {
        Self::from_blocks_unchecked(n, if n == 0 { vec![] } else { vec![(1..=n).collect()] })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|e| vec![e]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_odd(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 1)
    }

    /// `self ≤ tau`: every block of `tau` lies in some block of `self`.
    pub fn leq(&self, tau: &SetPartition) -> bool {
        if self.n != tau.n {
            return false;
        }
        let owner = self.block_index();
        tau.blocks.iter().all(|b| b.iter().all(|&e| owner[e] == owner[b[0]]))
    }

    fn block_index(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                owner[e] = i;
            }
        }
        owner
    }

    /// All `τ ≤ self`: partitions obtained by merging blocks.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        SetPartition::all(self.len())
            .into_iter()
            .map(|merge| {
                let blocks = merge
                    .blocks
                    .iter()
                    .map(|grp| grp.iter().flat_map(|&i| self.blocks[i - 1].iter().copied()).collect())
                    .collect();
                SetPartition::from_blocks_unchecked(self.n, blocks)
            })
            .collect()
    }

    /// All `τ ≥ self`: partitions obtained by splitting blocks.
    pub fn refinements(&self) -> Vec<SetPartition> {
        let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for b in &self.blocks {
            let splits = SetPartition::all(b.len());
            let mut next = Vec::with_capacity(acc.len() * splits.len());
            for prefix in &acc {
                for sp in &splits {
                    let mut blocks = prefix.clone();
                    blocks.extend(sp.blocks.iter().map(|g| g.iter().map(|&i| b[i - 1]).collect()));
                    next.push(blocks);
                }
            }
            acc = next;
        }
        acc.into_iter().map(|bl| SetPartition::from_blocks_unchecked(self.n, bl)).collect()
    }

    /// `π | τ`: the blocks of `π` followed by the blocks of `τ` shifted by `n(π)`.
    pub fn shifted_concat(&self, tau: &SetPartition) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.extend(tau.blocks.iter().map(|b| b.iter().map(|e| e + self.n).collect()));
        SetPartition::from_blocks_unchecked(self.n + tau.n, blocks)
    }

    /// The unique factorization `self = π_1 | π_2 | ... | π_k` into connected
    /// pieces (each not a shifted concatenation of two nonempty partitions).
    pub fn components(&self) -> Vec<SetPartition> {
        let owner_max: Vec<usize> = {
            let mut m = vec![0; self.n + 1];
            for b in &self.blocks {
                let mx = *b.last().unwrap();
                for &e in b {
                    m[e] = mx;
                }
            }
            m
        };
        let mut out = Vec::new();
        let mut start = 1;
        let mut reach = 0;
        for k in 1..=self.n {
            reach = reach.max(owner_max[k]);
            if reach == k {
                let blocks = self
                    .blocks
                    .iter()
                    .filter(|b| b[0] >= start && b[0] <= k)
                    .map(|b| b.iter().map(|e| e - start + 1).collect())
                    .collect();
                out.push(SetPartition::from_blocks_unchecked(k - start + 1, blocks));
                start = k + 1;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// `∏ (-1)^{|b|-1} (|b|-1)!` over the blocks `b` of `self`.
    ///
    /// This is the Möbius value between `self` and the all-singletons
    /// partition; with the order reversed it is the classical
    /// `μ(0̂, π)` of the refinement lattice.
    pub fn mobius_zerohat(&self) -> BigInt {
        self.blocks
            .iter()
            .map(|b| {
                let f = factorial(b.len() - 1);
                if b.len() % 2 == 0 {
                    -f
                } else {
                    f
                }
            })
            .product()
    }

    /// Set partitions of `[n]` in canonical order (restricted growth strings).
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        rgs_rec(n, 0, 0, &mut rgs, &mut out);
        out.sort();
        out
    }

    pub fn all_odd(n: usize) -> Vec<SetPartition> {
        SetPartition::all(n).into_iter().filter(SetPartition::is_odd).collect()
    }

    fn flat(&self) -> impl Iterator<Item = &usize> {
        self.blocks.iter().flatten()
    }
}

fn rgs_rec(n: usize, i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
    if i == n {
        let mut blocks: Vec<Vec<usize>> = vec![vec![]; max];
        for (e, &b) in rgs.iter().enumerate() {
            blocks[b].push(e + 1);
        }
        out.push(SetPartition { n, blocks });
        return;
    }
    for b in 0..=max {
        rgs[i] = b;
        rgs_rec(n, i + 1, max.max(b + 1), rgs, out);
    }
}

/// `μ(π, τ)` in the partition lattice, by the defining recursion over the
/// interval `[π, τ]`.
pub fn mobius_partition(pi: &SetPartition, tau: &SetPartition) -> Result<BigInt> {
    if !pi.leq(tau) {
        return invalid(format!("{pi} ≰ {tau}"));
    }
    // Interval elements: coarsenings of tau that lie above pi.
    let mut interval: Vec<SetPartition> = tau.coarsenings().into_iter().filter(|r| pi.leq(r)).collect();
    interval.sort_by_key(|r| r.len());
    let mut mu: Vec<BigInt> = Vec::with_capacity(interval.len());
    for (i, r) in interval.iter().enumerate() {
        if r == pi {
            mu.push(BigInt::one());
            continue;
        }
        let mut s = BigInt::zero();
        for j in 0..i {
            if interval[j].leq(r) && interval[j] != *r {
                s += &mu[j];
            }
        }
        mu.push(-s);
    }
    let idx = interval.iter().position(|r| r == tau).expect("tau lies in its own interval");
    Ok(mu[idx].clone())
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.flat().cmp(other.flat()))
            .then_with(|| self.blocks.iter().map(Vec::len).cmp(other.blocks.iter().map(Vec::len)))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(&self.blocks, "/", f)
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SetPartition::new(parse_blocks(s, '/')?).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| SetPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        let odd: Vec<usize> = (0..=5).map(|n| SetPartition::all_odd(n).len()).collect();
        assert_eq!(odd, vec![1, 1, 1, 2, 5, 12]);
    }

    #[test]
    fn order_direction() {
        assert!(sp("1,2").leq(&sp("1/2")));
        assert!(!sp("1/2").leq(&sp("1,2")));
        assert!(sp("1,2,3/4").leq(&sp("1,3/2/4")));
    }

    #[test]
    fn coarsenings_and_refinements_are_dual() {
        for pi in SetPartition::all(4) {
            for t in pi.coarsenings() {
                assert!(t.leq(&pi));
            }
            for t in pi.refinements() {
                assert!(pi.leq(&t));
            }
            let down = SetPartition::all(4).iter().filter(|t| t.leq(&pi)).count();
            assert_eq!(down, pi.coarsenings().len());
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(sp("1,2,3/4").mobius_zerohat(), BigInt::from(2));
        assert_eq!(sp("1,2").mobius_zerohat(), BigInt::from(-1));
        let p = sp("1,3/2");
        assert_eq!(mobius_partition(&p, &p).unwrap(), BigInt::one());
        assert!(mobius_partition(&sp("1/2"), &sp("1,2")).is_err());
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 0..=5 {
            let top = SetPartition::singletons(n);
            for pi in SetPartition::all(n) {
                assert_eq!(pi.mobius_zerohat(), mobius_partition(&pi, &top).unwrap(), "{pi}");
            }
        }
    }

    #[test]
    fn shifted_concat_and_components() {
        let c = sp("1,2/3").shifted_concat(&sp("1"));
        assert_eq!(c, sp("1,2/3/4"));
        assert_eq!(c.components(), vec![sp("1,2"), sp("1"), sp("1")]);
        assert!(sp("1,3/2").is_connected());
        assert_eq!(SetPartition::single_block(0).shifted_concat(&sp("1/2")), sp("1/2"));
    }
}
