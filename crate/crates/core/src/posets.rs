//! Labelled posets `(P, γ, σ)`, their edge-coloured digraphs, linear
//! extensions, and the fundamental / enriched fundamental functions they
//! define, both by the linear-extension expansion and by brute-force
//! enumeration of (enriched) `(P,γ)`-partitions.
//!
//! Ground-set elements are `1..=n`. Labellings are [`Permutation`]s whose
//! `i`-th image is the label of element `i`.

use std::collections::BTreeSet;

use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::words::check_size;
use crate::algebra::{tensor, LinComb, MComb, MTensor, Rational, WordPolynomial};
use crate::combinatorics::{Permutation, SetComposition, Subset};
use crate::error::{invalid, Error, Result};
use crate::ncpeak::{k_pair_in_k, k_to_m};
use crate::ncqsym::{f_to_m, to_f_basis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledPoset {
    n: usize,
    covers: Vec<(usize, usize)>,
    /// `less[a][b]` for `a <_P b`, 0-based.
    less: Vec<Vec<bool>>,
    gamma: Permutation,
    sigma: Permutation,
}

fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut less = vec![vec![false; n]; n];
    for &(a, b) in edges {
        less[a - 1][b - 1] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if less[i][k] {
                for j in 0..n {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    less
}

fn standardize_labels(values: &[usize]) -> Permutation {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let images = values.iter().map(|v| sorted.binary_search(v).expect("present") + 1).collect();
    Permutation::new(images).expect("ranks form a permutation")
}

impl LabelledPoset {
    /// Build from the Hasse diagram `covers` (pairs `a ⋖ b`, 1-based).
    pub fn new(n: usize, covers: &[(usize, usize)], gamma: Permutation, sigma: Permutation) -> Result<Self> {
        if gamma.n() != n || sigma.n() != n {
            return invalid(format!("labellings must be permutations of [{n}]"));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in covers {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return invalid(format!("bad cover ({a},{b}) on [{n}]"));
            }
            if !seen.insert((a, b)) {
                return invalid(format!("repeated cover ({a},{b})"));
            }
        }
        let less = closure(n, covers);
        if (0..n).any(|i| less[i][i]) {
            return invalid("cover relation has a cycle");
        }
        for &(a, b) in covers {
            if (0..n).any(|c| less[a - 1][c] && less[c][b - 1]) {
                return invalid(format!("({a},{b}) is implied by transitivity, not a cover"));
            }
        }
        let mut covers: Vec<(usize, usize)> = covers.to_vec();
        covers.sort_unstable();
        Ok(LabelledPoset { n, covers, less, gamma, sigma })
    }

    /// The chain `1 < 2 < … < n` with the given labellings.
    pub fn chain(gamma: Permutation, sigma: Permutation) -> Result<Self> {
        let n = gamma.n();
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &covers, gamma, sigma)
    }

    /// The antichain on `[n]` with identity labellings.
    pub fn antichain(n: usize) -> Self {
        Self::new(n, &[], Permutation::identity(n), Permutation::identity(n)).expect("no relations")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// `a <_P b` for 1-based elements.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a - 1][b - 1]
    }

    /// Call `f` on every linear extension `(w_1, …, w_n)`, in lexicographic
    /// order, without materializing the full list.
    pub fn for_each_linear_extension(&self, mut f: impl FnMut(&[usize])) {
        let n = self.n;
        let mut below = vec![0usize; n];
        for row in &self.less {
            for (b, &lt) in row.iter().enumerate() {
                if lt {
                    below[b] += 1;
                }
            }
        }
        let mut used = vec![false; n];
        let mut w = Vec::with_capacity(n);
        self.extend(&mut below, &mut used, &mut w, &mut f);
    }

    fn extend(&self, below: &mut [usize], used: &mut [bool], w: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if w.len() == self.n {
            f(w);
            return;
        }
        for x in 0..self.n {
            if used[x] || below[x] > 0 {
                continue;
            }
            used[x] = true;
            w.push(x + 1);
            for y in 0..self.n {
                if self.less[x][y] {
                    below[y] -= 1;
                }
            }
            self.extend(below, used, w, f);
            for y in 0..self.n {
                if self.less[x][y] {
                    below[y] += 1;
                }
            }
            w.pop();
            used[x] = false;
        }
    }

    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_linear_extension(|w| out.push(w.to_vec()));
        out
    }

    /// `Des(w, γ) = {i : γ(w_i) > γ(w_{i+1})}`.
    pub fn descent_set(&self, w: &[usize]) -> Subset {
        let g: Vec<usize> = w.iter().map(|&x| self.gamma.at(x)).collect();
        let elems: Vec<usize> = (1..g.len()).filter(|&i| g[i - 1] > g[i]).collect();
        Subset::new(self.n, &elems).expect("positions lie in [n-1]")
    }

    /// `Peak(w, γ) = {i : γ(w_{i-1}) < γ(w_i) > γ(w_{i+1})}`.
    pub fn peak_set(&self, w: &[usize]) -> Subset {
        let g: Vec<usize> = w.iter().map(|&x| self.gamma.at(x)).collect();
        let elems: Vec<usize> = (2..g.len()).filter(|&i| g[i - 2] < g[i - 1] && g[i - 1] > g[i]).collect();
        Subset::new(self.n, &elems).expect("positions lie in [n-1]")
    }

    /// `τ_w(i) = σ(w_i)`.
    pub fn tau(&self, w: &[usize]) -> Permutation {
        Permutation::new(w.iter().map(|&x| self.sigma.at(x)).collect()).expect("σ is a bijection")
    }

    /// `F_{(P,γ,σ)} = Σ_w F_{(Des(w,γ), τ_w)}` in the M basis.
    pub fn y_expansion(&self) -> MComb {
        let mut out = MComb::zero();
        self.for_each_linear_extension(|w| {
            out.add_scaled(&f_to_m(&self.descent_set(w), &self.tau(w)).expect("sizes agree"), &Rational::one());
        });
        out
    }

    /// [`Self::y_expansion`] in the F basis (standard-pair keys).
    pub fn y_expansion_f(&self) -> LinComb<SetComposition> {
        to_f_basis(&self.y_expansion())
    }

    /// `K_{(P,γ,σ)} = Σ_w K_{(Peak(w,γ), τ_w)}` in the M basis.
    pub fn fcal_expansion(&self) -> MComb {
        let mut out = MComb::zero();
        self.for_each_linear_extension(|w| {
            out.add_scaled(&k_to_m(&self.peak_set(w), &self.tau(w)).expect("peak sets are valid"), &Rational::one());
        });
        out
    }

    /// [`Self::fcal_expansion`] in canonical K keys.
    pub fn fcal_expansion_k(&self) -> LinComb<SetComposition> {
        let mut out = LinComb::zero();
        self.for_each_linear_extension(|w| {
            out.add_scaled(
                &k_pair_in_k(&self.peak_set(w), &self.tau(w)).expect("peak sets are valid"),
                &Rational::one(),
            );
        });
        out
    }

    fn proper(&self, f: &[usize]) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                if self.less[a][b] {
                    let strict = self.gamma.at(a + 1) > self.gamma.at(b + 1);
                    if f[a] > f[b] || (strict && f[a] == f[b]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Enriched values are ranks in `-1 ≺ 1 ≺ -2 ≺ 2 ≺ …`: rank `2k-2` is `-k`, `2k-1` is `k`.
    fn enriched(&self, f: &[usize]) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                if self.less[a][b] {
                    if f[a] > f[b] {
                        return false;
                    }
                    if f[a] == f[b] {
                        let (ga, gb) = (self.gamma.at(a + 1), self.gamma.at(b + 1));
                        let positive = f[a] % 2 == 1;
                        if (positive && ga > gb) || (!positive && ga < gb) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Brute-force sum of `x_{f(σ⁻¹(1))} ⋯ x_{f(σ⁻¹(n))}` over all (enriched)
    /// `(P,γ)`-partitions with values in `[m]` (resp. `±[m]`, letters `|f|`).
    pub fn enumerate_colourings(&self, m: usize, enriched: bool, cap: u128) -> Result<WordPolynomial> {
        if m == 0 {
            return invalid("alphabet size must be at least 1");
        }
        let values = if enriched { 2 * m } else { m };
        check_size(values, self.n, cap)?;
        let sigma_inv = self.sigma.inverse();
        let mut out = WordPolynomial::zero(self.n, m);
        let mut f = vec![0usize; self.n];
        loop {
            let ok = if enriched { self.enriched(&f) } else { self.proper(&f) };
            if ok {
                let word = (1..=self.n)
                    .map(|i| {
                        let v = f[sigma_inv.at(i) - 1];
                        (if enriched { v / 2 + 1 } else { v + 1 }) as u8
                    })
                    .collect();
                out.add_word(word, Rational::one());
            }
            // Odometer over values^n assignments.
            let mut i = 0;
            while i < self.n {
                f[i] += 1;
                if f[i] < values {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
            if i == self.n {
                break;
            }
        }
        Ok(out)
    }

    /// The induced labelled poset on `keep` (1-based), with elements and
    /// both labellings standardized.
    pub fn restrict(&self, keep: &[usize]) -> LabelledPoset {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let k = keep.len();
        let mut rel = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.less(a, b) && !keep.iter().any(|&c| self.less(a, c) && self.less(c, b)) {
                    rel.push((i + 1, j + 1));
                }
            }
        }
        let gamma = standardize_labels(&keep.iter().map(|&x| self.gamma.at(x)).collect::<Vec<_>>());
        let sigma = standardize_labels(&keep.iter().map(|&x| self.sigma.at(x)).collect::<Vec<_>>());
        LabelledPoset::new(k, &rel, gamma, sigma).expect("restriction of a poset is a poset")
    }

    /// `G | H`: disjoint union with `other`'s elements and labels shifted by `n`.
    pub fn shifted_union(&self, other: &LabelledPoset) -> LabelledPoset {
        let n = self.n;
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + n, b + n)));
        let shift = |p: &Permutation, q: &Permutation| {
            let mut v = p.images().to_vec();
            v.extend(q.images().iter().map(|x| x + n));
            Permutation::new(v).expect("shifted images are disjoint")
        };
        LabelledPoset::new(n + other.n, &covers, shift(&self.gamma, &other.gamma), shift(&self.sigma, &other.sigma))
            .expect("disjoint union of posets")
    }

    /// All up-sets (order filters), each sorted, 1-based.
    pub fn up_sets(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        (0u64..1 << n)
            .filter(|mask| {
                (0..n).all(|a| mask & (1 << a) == 0 || (0..n).all(|b| !self.less[a][b] || mask & (1 << b) != 0))
            })
            .map(|mask| (0..n).filter(|a| mask & (1 << a) != 0).map(|a| a + 1).collect())
            .collect()
    }

    /// `Σ_U E(P∖U) ⊗ E(U)` over up-sets `U`, where `E` is the fundamental
    /// (or enriched fundamental) expansion in the M basis.
    pub fn coproduct_by_up_sets(&self, enriched: bool) -> MTensor {
        let expand = |p: &LabelledPoset| {
            if enriched {
                p.fcal_expansion()
            } else {
                p.y_expansion()
            }
        };
        let mut out = MTensor::zero();
        for up in self.up_sets() {
            let down: Vec<usize> = (1..=self.n).filter(|x| !up.contains(x)).collect();
            out.add_scaled(&tensor(&expand(&self.restrict(&down)), &expand(&self.restrict(&up))), &Rational::one());
        }
        out
    }

    /// Triple JSON: `{"vertices","solid","double","gamma","sigma"}`.
    pub fn to_json(&self) -> Value {
        let (solid, double): (Vec<_>, Vec<_>) =
            self.covers.iter().partition(|&&(a, b)| self.gamma.at(a) > self.gamma.at(b));
        let pairs = |v: Vec<&(usize, usize)>| v.iter().map(|&&(a, b)| json!([a, b])).collect::<Vec<_>>();
        json!({
            "vertices": (1..=self.n).collect::<Vec<_>>(),
            "solid": pairs(solid),
            "double": pairs(double),
            "gamma": self.gamma.images(),
            "sigma": self.sigma.images(),
        })
    }

    /// Parse triple JSON. Vertex labels may be any distinct naturals; they
    /// are renumbered by rank. Edge types must agree with `gamma`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (vertices, solid, double) = parse_graph(v)?;
        let n = vertices.len();
        let rank = |x: usize| vertices.binary_search(&x).map(|i| i + 1);
        let labels = |key: &str| -> Result<Permutation> {
            let arr = v.get(key).and_then(Value::as_array).ok_or_else(|| Error::Parse(format!("missing {key:?}")))?;
            let images = arr.iter().map(|x| x.as_u64().map(|u| u as usize)).collect::<Option<Vec<_>>>();
            Permutation::new(images.ok_or_else(|| Error::Parse(format!("{key:?} must list naturals")))?)
        };
        let gamma = labels("gamma")?;
        let sigma = labels("sigma")?;
        let mut covers = Vec::new();
        for (edges, is_solid) in [(&solid, true), (&double, false)] {
            for &(a, b) in edges {
                let (a, b) = (rank(a).expect("checked"), rank(b).expect("checked"));
                if gamma.n() == n && (gamma.at(a) > gamma.at(b)) != is_solid {
                    return invalid(format!("edge ({a},{b}) type disagrees with gamma"));
                }
                covers.push((a, b));
            }
        }
        LabelledPoset::new(n, &covers, gamma, sigma)
    }

    /// Every labelled poset on `[n]`, as cover lists, in a fixed order.
    pub fn all_cover_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let rel: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &p)| p).collect();
            let less = closure(n, &rel);
            let is_order = rel.iter().all(|&(a, b)| !less[b - 1][a - 1])
                && (0..n).all(|a| (0..n).all(|b| less[a][b] == rel.contains(&(a + 1, b + 1))));
            if is_order {
                let covers =
                    rel.iter().copied().filter(|&(a, b)| !(0..n).any(|c| less[a - 1][c] && less[c][b - 1])).collect();
                out.push(covers);
            }
        }
        out
    }
}

fn parse_graph(v: &Value) -> Result<(Vec<usize>, Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let naturals = |x: &Value| x.as_u64().map(|u| u as usize);
    let vertices = v
        .get("vertices")
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(naturals).collect::<Option<Vec<_>>>())
        .ok_or_else(|| Error::Parse("\"vertices\" must be a list of naturals".into()))?;
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vertices.len() {
        return Err(Error::Parse("repeated vertex".into()));
    }
    let edges = |key: &str| -> Result<Vec<(usize, usize)>> {
        let Some(arr) = v.get(key) else {
            return Ok(Vec::new());
        };
        let arr = arr.as_array().ok_or_else(|| Error::Parse(format!("{key:?} must be a list")))?;
        arr.iter()
            .map(|e| match e.as_array().map(|p| p.iter().map(naturals).collect::<Option<Vec<_>>>()) {
                Some(Some(p))
                    if p.len() == 2 && sorted.binary_search(&p[0]).is_ok() && sorted.binary_search(&p[1]).is_ok() =>
                {
                    Ok((p[0], p[1]))
                }
                _ => Err(Error::Parse(format!("bad edge {e} in {key:?}"))),
            })
            .collect()
    };
    let solid = edges("solid")?;
    let double = edges("double")?;
    Ok((sorted, solid, double))
}

/// A labelled edge-coloured digraph: vertices are naturals, each edge is
/// solid (`→`, label decreases) or double (`⇒`, label increases).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouredDigraph {
    pub vertices: Vec<usize>,
    pub solid: Vec<(usize, usize)>,
    pub double: Vec<(usize, usize)>,
}

impl EdgeColouredDigraph {
    pub fn to_json(&self) -> Value {
        let pairs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>();
        json!({ "vertices": self.vertices, "solid": pairs(&self.solid), "double": pairs(&self.double) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (vertices, solid, double) = parse_graph(v)?;
        Ok(EdgeColouredDigraph { vertices, solid, double })
    }
}

/// The digraph of `(P,γ,σ)`: vertex `σ(x)` per element, an edge `σ(a) → σ(b)`
/// for each cover `a ⋖ b`, solid when `γ(a) > γ(b)` and double otherwise.
pub fn digraph_of_triple(p: &LabelledPoset) -> EdgeColouredDigraph {
    let s = p.sigma();
    let mut solid = Vec::new();
    let mut double = Vec::new();
    for &(a, b) in p.covers() {
        let e = (s.at(a), s.at(b));
        if p.gamma().at(a) > p.gamma().at(b) {
            solid.push(e);
        } else {
            double.push(e);
        }
    }
    solid.sort_unstable();
    double.sort_unstable();
    EdgeColouredDigraph { vertices: (1..=p.n()).collect(), solid, double }
}

/// A triple realizing `g`: `σ` numbers vertices by rank and `γ` is the
/// lexicographically least labelling compatible with every edge type.
pub fn triple_of_digraph(g: &EdgeColouredDigraph) -> Result<LabelledPoset> {
    let mut vertices = g.vertices.clone();
    vertices.sort_unstable();
    let n = vertices.len();
    let rank = |x: usize| -> Result<usize> {
        vertices
            .binary_search(&x)
            .map(|i| i + 1)
            .map_err(|_| Error::Invalid(format!("edge endpoint {x} is not a vertex")))
    };
    let mut covers = Vec::new();
    // smaller[u] lists vertices whose γ must be below γ(u).
    let mut smaller: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &g.solid {
        let (a, b) = (rank(a)?, rank(b)?);
        covers.push((a, b));
        smaller[a - 1].push(b - 1);
    }
    for &(a, b) in &g.double {
        let (a, b) = (rank(a)?, rank(b)?);
        covers.push((a, b));
        smaller[b - 1].push(a - 1);
    }
    // Kahn's algorithm on the "must be smaller" constraints.
    let mut pending: Vec<usize> = smaller.iter().map(Vec::len).collect();
    let mut gamma = vec![0usize; n];
    let mut next = 1;
    while next <= n {
        let Some(u) = (0..n).find(|&u| gamma[u] == 0 && pending[u] == 0) else {
            return invalid("edge types admit no consistent labelling");
        };
        gamma[u] = next;
        next += 1;
        for (w, list) in smaller.iter().enumerate() {
            if gamma[w] == 0 {
                pending[w] -= list.iter().filter(|&&x| x == u).count();
            }
        }
    }
    LabelledPoset::new(n, &covers, Permutation::new(gamma)?, Permutation::identity(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// `a < b, a < c, b < d` with `γ = 2143`, `σ = 1234`.
    fn example() -> LabelledPoset {
        LabelledPoset::new(4, &[(1, 2), (1, 3), (2, 4)], perm("2143"), perm("1234")).unwrap()
    }

    #[test]
    fn validation() {
        assert!(LabelledPoset::new(2, &[(1, 2), (2, 1)], perm("12"), perm("12")).is_err());
        assert!(LabelledPoset::new(3, &[(1, 2), (2, 3), (1, 3)], perm("123"), perm("123")).is_err());
        assert!(LabelledPoset::new(2, &[(1, 2)], perm("1"), perm("12")).is_err());
    }

    #[test]
    fn digraph_round_trip() {
        let g = digraph_of_triple(&example());
        assert_eq!(g.solid, vec![(1, 2)]);
        assert_eq!(g.double, vec![(1, 3), (2, 4)]);
        let back = triple_of_digraph(&g).unwrap();
        assert_eq!(digraph_of_triple(&back), g);
        let cyc = EdgeColouredDigraph { vertices: vec![1, 2], solid: vec![(1, 2)], double: vec![(2, 1)] };
        assert!(triple_of_digraph(&cyc).is_err());
    }

    #[test]
    fn extensions() {
        let exts = example().linear_extensions();
        assert_eq!(exts, vec![vec![1, 2, 3, 4], vec![1, 2, 4, 3], vec![1, 3, 2, 4]]);
        assert_eq!(LabelledPoset::antichain(4).linear_extensions().len(), 24);
        assert_eq!(LabelledPoset::all_cover_sets(3).len(), 19);
    }

    #[test]
    fn json_round_trip() {
        let p = example();
        assert_eq!(LabelledPoset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn single_vertex() {
        let p = LabelledPoset::antichain(1);
        assert_eq!(p.y_expansion_f(), LinComb::single("1".parse().unwrap()));
        assert_eq!(p.fcal_expansion(), MComb::term("1".parse().unwrap(), crate::algebra::rat(2)));
    }
}
