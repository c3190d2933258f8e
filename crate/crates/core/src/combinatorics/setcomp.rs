//! Set compositions of `[n]` and their interaction with standard and
//! enriched standard pairs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::setpart::SetPartition;
use super::subset::{odd_of_peak, peak_of_odd, Composition, Permutation, Subset};
use crate::error::{invalid, Error, Result};

/// An ordered list of disjoint nonempty blocks whose union is `[n]`.
///
/// Elements are stored ascending inside each block. The refinement order
/// used throughout is: `ψ ≤ φ` when every block of `ψ` is a union of
/// consecutive blocks of `φ` (so smaller means coarser).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetComposition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetComposition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return invalid("set composition has an empty block");
            }
            b.sort_unstable();
            for &e in b.iter() {
                if e == 0 || e > n || seen[e] {
                    return invalid(format!("blocks do not partition [{n}]"));
                }
                seen[e] = true;
            }
        }
        Ok(SetComposition { n, blocks })
    }

    /// Caller guarantees blocks are sorted, nonempty and partition `[n]`.
    pub(crate) fn from_blocks_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        SetComposition { n, blocks }
    }

    /// Relabel blocks over an arbitrary finite set of positive integers onto
    /// `[k]`, preserving relative order of elements.
    pub fn standardize(blocks: &[Vec<usize>]) -> SetComposition {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let rank = |x: usize| all.binary_search(&x).unwrap() + 1;
        let mut out: Vec<Vec<usize>> =
            blocks.iter().filter(|b| !b.is_empty()).map(|b| b.iter().map(|&x| rank(x)).collect()).collect();
        for b in &mut out {
            b.sort_unstable();
        }
        SetComposition { n: all.len(), blocks: out }
    }

    pub fn empty() -> Self {
        SetComposition { n: 0, blocks: vec![] }
    }

    /// The one-block composition `[n]`.
    pub fn single_block(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        SetComposition { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn singletons(order: &[usize]) -> Result<Self> {
        SetComposition::new(order.iter().map(|&e| vec![e]).collect())
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

    pub fn block_sizes(&self) -> Composition {
        Composition::new(self.blocks.iter().map(Vec::len).collect()).expect("blocks are nonempty")
    }

    /// Every block has odd size.
    pub fn is_odd(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 1)
    }

    /// `(n - ℓ(φ)) / 2`, defined for odd set compositions.
    pub fn p(&self) -> Option<usize> {
        self.is_odd().then(|| (self.n - self.len()) / 2)
    }

    /// `self ≤ phi`: every block of `self` is a union of consecutive blocks of `phi`.
    pub fn leq(&self, phi: &SetComposition) -> bool {
        if self.n != phi.n {
            return false;
        }
        let mut it = phi.blocks.iter();
        for b in &self.blocks {
            let mut acc: Vec<usize> = Vec::with_capacity(b.len());
            while acc.len() < b.len() {
                match it.next() {
                    Some(x) => acc.extend_from_slice(x),
                    None => return false,
                }
            }
            acc.sort_unstable();
            if &acc != b {
                return false;
            }
        }
        it.next().is_none()
    }

    /// The composition obtained by keeping only the cuts of `self` after the
    /// block positions set in `mask` (bit `i` = cut after block `i`, 1-based).
    pub(crate) fn coarsen_by_mask(&self, mask: u64) -> SetComposition {
        let mut blocks = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            cur.extend_from_slice(b);
            if i + 1 == self.blocks.len() || mask & (1 << (i + 1)) != 0 {
                cur.sort_unstable();
                blocks.push(std::mem::take(&mut cur));
            }
        }
        SetComposition { n: self.n, blocks }
    }

    /// All `ψ ≤ self`, i.e. all ways of merging runs of consecutive blocks.
    pub fn coarsenings(&self) -> Vec<SetComposition> {
        if self.blocks.is_empty() {
            return vec![self.clone()];
        }
        let full = Subset::full(self.len()).mask();
        Subset::from_mask(self.len(), full).subsets().into_iter().map(|s| self.coarsen_by_mask(s.mask())).collect()
    }

    /// `φ ∧ ψ`: the blocks `φ_i ∩ ψ_j` in lexicographic `(i, j)` order with
    /// empty intersections removed.
    pub fn meet(&self, other: &SetComposition) -> Result<SetComposition> {
        if self.n != other.n {
            return Err(Error::Invalid(format!("meet of set compositions of [{}] and [{}]", self.n, other.n)));
        }
        let owner = other.block_index();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let mut parts: Vec<(usize, usize)> = b.iter().map(|&e| (owner[e], e)).collect();
            parts.sort_unstable();
            let mut cur: Vec<usize> = Vec::new();
            let mut cur_owner = usize::MAX;
            for (o, e) in parts {
                if o != cur_owner && !cur.is_empty() {
                    blocks.push(std::mem::take(&mut cur));
                }
                cur_owner = o;
                cur.push(e);
            }
            if !cur.is_empty() {
                blocks.push(cur);
            }
        }
        Ok(SetComposition { n: self.n, blocks })
    }

    /// `owner[e]` = index of the block containing `e` (index 0 unused).
    pub(crate) fn block_index(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                owner[e] = i;
            }
        }
        owner
    }

    /// Merge each maximal run of block sizes shaped `(even, ..., even, odd)`
    /// into one block. Defined only when the last block has odd size.
    pub fn odd_merge(&self) -> Result<SetComposition> {
        if let Some(last) = self.blocks.last() {
            if last.len() % 2 == 0 {
                return invalid(format!("last block of {self} has even size"));
            }
        }
        let mut blocks = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        for b in &self.blocks {
            cur.extend_from_slice(b);
            if b.len() % 2 == 1 {
                cur.sort_unstable();
                blocks.push(std::mem::take(&mut cur));
            }
        }
        Ok(SetComposition { n: self.n, blocks })
    }

    pub fn underlying_partition(&self) -> SetPartition {
        SetPartition::from_blocks_unchecked(self.n, self.blocks.clone())
    }

    /// Blocks with every element increased by `k`.
    pub fn shifted_blocks(&self, k: usize) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|e| e + k).collect()).collect()
    }

    /// `std(φ|_S)`: intersect every block with `s`, drop empties, standardize.
    pub fn restrict(&self, s: &[usize]) -> SetComposition {
        let blocks: Vec<Vec<usize>> =
            self.blocks.iter().map(|b| b.iter().copied().filter(|e| s.contains(e)).collect()).collect();
        SetComposition::standardize(&blocks)
    }

    /// The same blocks in the order given by `order` (a permutation of block indices).
    pub fn reorder(&self, order: &[usize]) -> SetComposition {
        SetComposition { n: self.n, blocks: order.iter().map(|&i| self.blocks[i].clone()).collect() }
    }

    /// The unique standard pair `(A, σ)` with `SetComp(A, σ) = self`.
    pub fn standard_pair(&self) -> (Subset, Permutation) {
        let mut images = Vec::with_capacity(self.n);
        let mut mask = 0u64;
        for b in &self.blocks {
            images.extend_from_slice(b);
            if images.len() < self.n {
                mask |= 1 << images.len();
            }
        }
        (Subset::from_mask(self.n, mask), Permutation::new(images).expect("blocks partition [n]"))
    }

    /// For an odd set composition, the unique enriched standard pair
    /// `(B, σ)` with `SetCompOdd(B, σ) = self`.
    pub fn enriched_pair(&self) -> Result<(Subset, Permutation)> {
        if !self.is_odd() {
            return invalid(format!("{self} is not an odd set composition"));
        }
        let (a, sigma) = self.standard_pair();
        Ok((peak_of_odd(&a)?, sigma))
    }

    /// All set compositions of `[n]` in canonical order.
    pub fn all(n: usize) -> Vec<SetComposition> {
        let mut out = Vec::new();
        let full: u32 = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };
        let mut cur = Vec::new();
        all_rec(n, full, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All odd set compositions of `[n]` in canonical order.
    pub fn all_odd(n: usize) -> Vec<SetComposition> {
        SetComposition::all(n).into_iter().filter(SetComposition::is_odd).collect()
    }

    fn flat(&self) -> impl Iterator<Item = &usize> {
        self.blocks.iter().flatten()
    }
}

fn all_rec(n: usize, remaining: u32, cur: &mut Vec<Vec<usize>>, out: &mut Vec<SetComposition>) {
    if remaining == 0 {
        out.push(SetComposition { n, blocks: cur.clone() });
        return;
    }
    let mut sub = remaining;
    while sub != 0 {
        let block: Vec<usize> = (0..n).filter(|i| sub & (1 << i) != 0).map(|i| i + 1).collect();
        cur.push(block);
        all_rec(n, remaining & !sub, cur, out);
        cur.pop();
        sub = (sub - 1) & remaining;
    }
}

impl PartialOrd for SetComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ground-set size, then length, then lexicographic on the flattened form,
/// then block sizes.
impl Ord for SetComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.flat().cmp(other.flat()))
            .then_with(|| self.blocks.iter().map(Vec::len).cmp(other.blocks.iter().map(Vec::len)))
    }
}

pub(crate) fn fmt_blocks(blocks: &[Vec<usize>], sep: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if blocks.is_empty() {
        return write!(f, "{{}}");
    }
    let s: Vec<String> = blocks.iter().map(|b| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
    write!(f, "{}", s.join(sep))
}

pub(crate) fn parse_blocks(s: &str, sep: char) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() || s == "{}" || s == "∅" {
        return Ok(vec![]);
    }
    s.split(sep)
        .map(|b| {
            b.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad element {x:?} in {s:?}"))))
                .collect()
        })
        .collect()
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(&self.blocks, "|", f)
    }
}

impl FromStr for SetComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SetComposition::new(parse_blocks(s, '|')?).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// `SetComp(A, σ)`: cut the one-line notation of `σ` after each position in `A`.
pub fn set_comp(a: &Subset, sigma: &Permutation) -> Result<SetComposition> {
    if a.n() != sigma.n() {
        return invalid(format!("subset of [{}] paired with permutation of [{}]", a.n(), sigma.n()));
    }
    let n = sigma.n();
    let mut blocks = Vec::with_capacity(a.len() + 1);
    let mut cur = Vec::new();
    for i in 1..=n {
        cur.push(sigma.at(i));
        if i == n || a.contains(i) {
            cur.sort_unstable();
            blocks.push(std::mem::take(&mut cur));
        }
    }
    Ok(SetComposition { n, blocks })
}

/// `Std(A, σ)`.
pub fn std_pair(a: &Subset, sigma: &Permutation) -> Result<(Subset, Permutation)> {
    set_comp(a, sigma).map(|c| c.standard_pair())
}

/// `(A, σ)` is standard when `Des(σ) ⊆ A`.
pub fn is_standard(a: &Subset, sigma: &Permutation) -> bool {
    a.n() == sigma.n() && sigma.descent_set().is_subset_of(a)
}

/// `(B, σ)` is enriched standard when `B` is a peak set and `Des(σ) ⊆ Odd(B)`.
pub fn is_enriched_standard(b: &Subset, sigma: &Permutation) -> bool {
    match odd_of_peak(b) {
        Ok(odd) => is_standard(&odd, sigma),
        Err(_) => false,
    }
}

/// `EStd(B, σ)`.
pub fn estd_pair(b: &Subset, sigma: &Permutation) -> Result<(Subset, Permutation)> {
    let odd = odd_of_peak(b)?;
    let (_, s) = std_pair(&odd, sigma)?;
    Ok((*b, s))
}

/// `SetCompOdd(B, σ) = SetComp(Odd(B), σ)` for an enriched standard pair.
pub fn setcomp_odd(b: &Subset, sigma: &Permutation) -> Result<SetComposition> {
    if !is_enriched_standard(b, sigma) {
        return invalid(format!("({{{b}}}, {sigma}) is not enriched standard"));
    }
    set_comp(&odd_of_peak(b)?, sigma)
}

/// `ψ ≤ φ` as a free function.
pub fn refines(psi: &SetComposition, phi: &SetComposition) -> Result<bool> {
    if psi.n != phi.n {
        return invalid(format!("set compositions of [{}] and [{}]", psi.n, phi.n));
    }
    Ok(psi.leq(phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SetComposition {
        s.parse().unwrap()
    }
    fn perm(s: &str) -> Permutation {
        Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap()
    }

    #[test]
    fn set_comp_golden() {
        let a = Subset::new(8, &[2, 5, 6]).unwrap();
        assert_eq!(set_comp(&a, &perm("67325841")).unwrap(), sc("6,7|2,3,5|8|1,4"));
        assert_eq!(set_comp(&Subset::empty(4), &perm("3142")).unwrap(), sc("1,2,3,4"));
        assert_eq!(set_comp(&Subset::full(3), &perm("312")).unwrap(), sc("3|1|2"));
    }

    #[test]
    fn std_and_estd_golden() {
        let (a, s) = std_pair(&Subset::new(8, &[3, 5]).unwrap(), &perm("37284516")).unwrap();
        assert_eq!((a.elems(), s), (vec![3, 5], perm("23748156")));
        let (b, s) = estd_pair(&Subset::new(9, &[2, 5, 7]).unwrap(), &perm("287134659")).unwrap();
        assert_eq!((b.elems(), s.clone()), (vec![2, 5, 7], perm("278134569")));
        assert_eq!(setcomp_odd(&b, &s).unwrap(), sc("2,7,8|1,3,4,5,6|9"));
    }

    #[test]
    fn pair_of_setcomp_golden() {
        let (a, s) = sc("6,7|2,3,5|8|1,4").standard_pair();
        assert_eq!(a.elems(), vec![2, 5, 6]);
        assert_eq!(s, perm("67235814"));
        assert_eq!(sc("1,2,3").standard_pair(), (Subset::empty(3), Permutation::identity(3)));
    }

    #[test]
    fn refinement_examples() {
        assert!(sc("1,3,4|2").leq(&sc("3|1,4|2")));
        assert!(sc("3|1,4|2").leq(&sc("3|1,4|2")));
        assert!(!sc("1,2|3").leq(&sc("1,3|2")));
        assert_eq!(sc("3|1|4|2").coarsenings().len(), 8);
    }

    #[test]
    fn meet_examples() {
        assert_eq!(sc("3|1,2,4").meet(&sc("1,3,4|2")).unwrap(), sc("3|1,4|2"));
        assert_eq!(sc("2,3|1").meet(&sc("1|2|3")).unwrap().len(), 3);
        assert_eq!(sc("1,2,3").meet(&sc("2|1,3")).unwrap(), sc("2|1,3"));
    }

    #[test]
    fn odd_merge_examples() {
        assert_eq!(sc("1|5,8|6,9|4|2,3|7").odd_merge().unwrap(), sc("1|4,5,6,8,9|2,3,7"));
        assert_eq!(sc("1,2|3").odd_merge().unwrap(), sc("1,2,3"));
        assert_eq!(sc("2|1,3,4").odd_merge().unwrap(), sc("2|1,3,4"));
        assert!(sc("3|1,2").odd_merge().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| SetComposition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75, 541]);
        assert_eq!(SetComposition::all_odd(3).len(), 7);
        assert_eq!(SetComposition::all_odd(5).len(), 181);
    }

    #[test]
    fn canonical_order_is_length_first() {
        let all = SetComposition::all(3);
        assert_eq!(all[0], sc("1,2,3"));
        assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));
    }

    #[test]
    fn text_round_trip() {
        for c in SetComposition::all(4) {
            assert_eq!(c.to_string().parse::<SetComposition>().unwrap(), c);
        }
        assert_eq!("{}".parse::<SetComposition>().unwrap(), SetComposition::empty());
        assert!("1,2|2".parse::<SetComposition>().is_err());
    }
}
