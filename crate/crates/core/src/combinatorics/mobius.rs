//! Möbius function of the poset of odd set compositions under refinement.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::catalan;
use super::setcomp::SetComposition;
use super::subset::Subset;
use crate::error::{invalid, Result};

/// `μ(x, top)` for every odd cut-set `x` of `[l]`, where odd compositions
/// of `l` are encoded as odd subsets of `[l-1]` and `top` is `[l-1]`.
fn mobius_to_top(l: usize) -> HashMap<u64, BigInt> {
    let mut odd: Vec<Subset> = Subset::all(l).into_iter().filter(|s| s.is_odd_set()).collect();
    odd.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let top = Subset::full(l).mask();
    let mut mu: HashMap<u64, BigInt> = HashMap::with_capacity(odd.len());
    for x in &odd {
        let xm = x.mask();
        let val = if xm == top {
            BigInt::one()
        } else {
            -mu.iter().filter(|(&ym, _)| ym != xm && ym & xm == xm).map(|(_, v)| v).sum::<BigInt>()
        };
        mu.insert(xm, val);
    }
    mu
}

fn mu_cache() -> &'static Mutex<HashMap<usize, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `μ_ℓ = Σ_{ψ ≤ φ, ψ odd} μ(ψ, φ)` for any `φ` with `ℓ` odd blocks,
/// computed by recursion over odd compositions of `ℓ`.
pub fn mu_ell(l: usize) -> BigInt {
    if l == 0 {
        return BigInt::one();
    }
    if let Some(v) = mu_cache().lock().unwrap().get(&l) {
        return v.clone();
    }
    let v: BigInt = mobius_to_top(l).into_values().sum();
    mu_cache().lock().unwrap().insert(l, v.clone());
    v
}

/// `μ_1 = 1`, `μ_ℓ = 0` for odd `ℓ > 1`, `(-1)^{ℓ/2-1} Cat_{ℓ/2-1}` for even `ℓ`.
pub fn mu_ell_closed_form(l: usize) -> BigInt {
    match l {
        0 | 1 => BigInt::one(),
        _ if l % 2 == 1 => BigInt::zero(),
        _ => signed_catalan(l / 2 - 1),
    }
}

/// `(-1)^k Cat_k`.
pub fn signed_catalan(k: usize) -> BigInt {
    let c = catalan(k);
    if k % 2 == 0 {
        c
    } else {
        -c
    }
}

fn check_odd_pair(psi: &SetComposition, phi: &SetComposition) -> Result<()> {
    if !psi.is_odd() || !phi.is_odd() {
        return invalid(format!("{psi} and {phi} must both be odd"));
    }
    if !psi.leq(phi) {
        return invalid(format!("{psi} ≰ {phi}"));
    }
    Ok(())
}

/// `μ(ψ, φ)` in the poset of odd set compositions, by recursion over the
/// interval `[ψ, φ]`.
pub fn mobius_odd(psi: &SetComposition, phi: &SetComposition) -> Result<BigInt> {
    check_odd_pair(psi, phi)?;
    // Interval elements are coarsenings of φ, encoded by their cut masks over
    // φ's block boundaries; ψ corresponds to the smallest such mask.
    let l = phi.len();
    let mut prefix = Vec::with_capacity(l);
    let mut acc = 0;
    for b in phi.blocks() {
        acc += b.len();
        prefix.push(acc);
    }
    let cuts = |c: &SetComposition| -> u64 {
        let mut m = 0u64;
        let mut seen = 0;
        for b in c.blocks().iter().take(c.len().saturating_sub(1)) {
            seen += b.len();
            let j = prefix.iter().position(|&p| p == seen).expect("psi is coarser than phi");
            m |= 1 << (j + 1);
        }
        m
    };
    let low = cuts(psi);
    let mut elems: Vec<u64> = Subset::full(l)
        .subsets()
        .into_iter()
        .map(|s| s.mask())
        .filter(|&m| m & low == low && phi.coarsen_by_mask(m).is_odd())
        .collect();
    elems.sort_by_key(|m| m.count_ones());
    let mut mu: HashMap<u64, BigInt> = HashMap::new();
    for &m in &elems {
        let val = if m == low {
            BigInt::one()
        } else {
            -mu.iter().filter(|(&k, _)| k & m == k && k != m).map(|(_, v)| v).sum::<BigInt>()
        };
        mu.insert(m, val);
    }
    Ok(mu[&Subset::full(l).mask()].clone())
}

/// The uniform signed-Catalan value `(-1)^{d} Cat_{d}` with
/// `d = (ℓ(φ) - ℓ(ψ)) / 2`.
pub fn mobius_odd_signed_catalan(psi: &SetComposition, phi: &SetComposition) -> Result<BigInt> {
    check_odd_pair(psi, phi)?;
    Ok(signed_catalan((phi.len() - psi.len()) / 2))
}

/// The interval `[ψ, φ]` is a product over the blocks of `ψ`; a block made
/// of `k` blocks of `φ` contributes `(-1)^{(k-1)/2} Cat_{(k-1)/2}`.
pub fn mobius_odd_blockwise(psi: &SetComposition, phi: &SetComposition) -> Result<BigInt> {
    check_odd_pair(psi, phi)?;
    let mut prod = BigInt::one();
    let mut bi = 0;
    for b in psi.blocks() {
        let mut size = 0;
        let mut k = 0;
        while size < b.len() {
            size += phi.blocks()[bi].len();
            bi += 1;
            k += 1;
        }
        prod *= signed_catalan((k - 1) / 2);
    }
    Ok(prod)
}
