//! Symmetric functions in noncommuting variables: the `m`, `p`, `e`, `h`
//! bases, the involution `ω`, and the odd-partition families `q_π`, `n_π`
//! spanning `NCSym ∩ NCΠ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{rat_int, Basis, LinComb, MComb, Rational};
use crate::combinatorics::numbers::pow2;
use crate::combinatorics::subset::next_permutation;
use crate::combinatorics::{SetComposition, SetPartition};
use crate::error::{invalid, Error, Result};
use crate::ncqsym::product;
use crate::theta::theta;

pub type PartComb = LinComb<SetPartition>;

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// All orderings of the blocks of `pi`.
fn orderings(pi: &SetPartition) -> Vec<SetComposition> {
    let mut idx: Vec<usize> = (0..pi.len()).collect();
    let mut out = Vec::new();
    loop {
        let blocks = idx.iter().map(|&i| pi.blocks()[i].clone()).collect();
        out.push(SetComposition::from_blocks_unchecked(pi.n(), blocks));
        if !next_permutation(&mut idx) {
            break;
        }
    }
    out
}

/// `m_π = Σ_{π(φ) = π} M_φ`.
pub fn m_to_big_m(pi: &SetPartition) -> MComb {
    orderings(pi).into_iter().map(|phi| (phi, Rational::one())).collect()
}

/// `p_π = Σ_{τ ≤ π} m_τ`, `τ` ranging over partitions obtained by merging blocks of `π`.
pub fn p_to_m(pi: &SetPartition) -> PartComb {
    pi.coarsenings().into_iter().map(|t| (t, Rational::one())).collect()
}

/// `e_π = Σ μ(τ) p_τ` over the partitions `τ` that split blocks of `π`, where
/// `μ(τ) = ∏_b (-1)^{|b|-1}(|b|-1)!` runs over the blocks of `τ`.
pub fn e_to_p(pi: &SetPartition) -> PartComb {
    pi.refinements().into_iter().map(|t| (t.clone(), rat_int(t.mobius_zerohat()))).collect()
}

/// `h_π`: as `e_π` with absolute values of the Möbius weights.
pub fn h_to_p(pi: &SetPartition) -> PartComb {
    pi.refinements().into_iter().map(|t| (t.clone(), rat_int(t.mobius_zerohat().abs()))).collect()
}

pub fn m_comb_to_big_m(x: &PartComb) -> MComb {
    x.map_linear(m_to_big_m)
}

pub fn p_comb_to_m(x: &PartComb) -> PartComb {
    x.map_linear(p_to_m)
}

pub fn p_comb_to_big_m(x: &PartComb) -> MComb {
    m_comb_to_big_m(&p_comb_to_m(x))
}

pub fn e_to_big_m(pi: &SetPartition) -> MComb {
    p_comb_to_big_m(&e_to_p(pi))
}

pub fn h_to_big_m(pi: &SetPartition) -> MComb {
    p_comb_to_big_m(&h_to_p(pi))
}

/// `ω` on the `p`, `e` and `h` bases; returns the basis of the image.
pub fn omega(basis: Basis, x: &PartComb) -> Result<(Basis, PartComb)> {
    match basis {
        Basis::P => Ok((Basis::P, x.map_linear(|pi| PartComb::term(pi.clone(), sign(pi.n() - pi.len()))))),
        Basis::E => Ok((Basis::H, x.clone())),
        Basis::H => Ok((Basis::E, x.clone())),
        _ => Err(Error::BasisMismatch(format!("ω is defined here on p, e, h; got {basis}"))),
    }
}

/// `q_π = Θ(h_π)` in the M basis.
pub fn q_elem(pi: &SetPartition) -> MComb {
    theta(&h_to_big_m(pi))
}

/// `Θ(e_π)`, which must coincide with `q_π`.
pub fn q_elem_via_e(pi: &SetPartition) -> MComb {
    theta(&e_to_big_m(pi))
}

/// `n_π = (-1)^{(n-ℓ(π))/2} Σ_{π(φ) = π} η_φ`, in η keys.
pub fn n_elem(pi: &SetPartition) -> Result<LinComb<SetComposition>> {
    if !pi.is_odd() {
        return invalid(format!("{pi} is not an odd set partition"));
    }
    let s = sign((pi.n() - pi.len()) / 2);
    Ok(orderings(pi).into_iter().map(|phi| (phi, s.clone())).collect())
}

/// The `m` expansion of an M-basis element that is symmetric, i.e. whose
/// coefficients are constant on orderings of each set partition.
pub fn membership_ncsym(x: &MComb) -> Result<PartComb> {
    let mut classes: BTreeMap<SetPartition, Rational> = BTreeMap::new();
    for (phi, c) in x.iter() {
        classes.entry(phi.underlying_partition()).or_insert_with(|| c.clone());
    }
    let mut out = PartComb::zero();
    for (pi, c) in classes {
        for phi in orderings(&pi) {
            if x.get(&phi) != c {
                return Err(Error::NotSymmetric(pi.to_string()));
            }
        }
        out.add_term(pi, c);
    }
    Ok(out)
}

/// Rewrite an `m`-basis element in the `p` basis (triangular in the number of blocks).
pub fn m_to_p(x: &PartComb) -> PartComb {
    let mut residual = x.clone();
    let mut out = PartComb::zero();
    while let Some(pi) = residual.keys().min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b))).cloned() {
        let c = residual.get(&pi);
        residual.add_scaled(&p_to_m(&pi), &-c.clone());
        out.add_term(pi, c);
    }
    out
}

/// An M-basis element of NCSym in the `p` basis.
pub fn to_p_basis(x: &MComb) -> Result<PartComb> {
    Ok(m_to_p(&membership_ncsym(x)?))
}

/// `Θ(p_π)` computed by expansion, returned in the `p` basis.
pub fn theta_p(pi: &SetPartition) -> Result<PartComb> {
    to_p_basis(&theta(&p_comb_to_big_m(&PartComb::single(pi.clone()))))
}

/// `2^{ℓ(π)} p_π` when `π` is odd, else zero.
pub fn theta_p_closed(pi: &SetPartition) -> PartComb {
    if pi.is_odd() {
        PartComb::term(pi.clone(), rat_int(pow2(pi.len())))
    } else {
        PartComb::zero()
    }
}

/// Number of odd set partitions of `[n]`.
pub fn dim_ncomega(n: usize) -> usize {
    SetPartition::all_odd(n).len()
}

/// `q_{π_1} · q_{π_2} ⋯` over the connected components of `π`.
pub fn q_component_product(pi: &SetPartition) -> MComb {
    pi.components().iter().fold(crate::ncqsym::unit(), |acc, c| product(&acc, &q_elem(c)))
}

/// `h_π · h_τ = h_{π|τ}` in the M basis.
pub fn h_product_law(pi: &SetPartition, tau: &SetPartition) -> bool {
    product(&h_to_big_m(pi), &h_to_big_m(tau)) == h_to_big_m(&pi.shifted_concat(tau))
}

/// Signed counts `Σ (-1)^{ℓ(φ)}` over `φ ⊨ [n]` with `π(φ) ≤ π` and last
/// block odd, grouped by `Odd(φ)`.
fn odd_merge_weights(pi: &SetPartition) -> BTreeMap<SetComposition, BigInt> {
    let mut out: BTreeMap<SetComposition, BigInt> = BTreeMap::new();
    for phi in SetComposition::all(pi.n()) {
        if !phi.underlying_partition().leq(pi) {
            continue;
        }
        let Ok(odd) = phi.odd_merge() else { continue };
        *out.entry(odd).or_default() += if phi.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    }
    out
}

fn odd_set_sides(
    pi: &SetPartition,
    psi: &SetComposition,
    weights: &BTreeMap<SetComposition, BigInt>,
) -> (BigInt, BigInt) {
    let lhs = weights.iter().filter(|(odd, _)| psi.leq(odd)).map(|(_, w)| w).sum();
    // π(ψ) ≤ π forces ℓ(ψ) ≤ ℓ(π).
    let mut rhs = pow2(pi.len() - psi.len());
    if pi.len() % 2 == 1 {
        rhs = -rhs;
    }
    (lhs, rhs)
}

/// Both sides of the odd-set identity for `(π, ψ)`: the signed count
/// `Σ (-1)^{ℓ(φ)}` over `φ ⊨ [n]` with `π(φ) ≤ π`, last block odd and
/// `ψ ≤ Odd(φ)`, and the value `2^{ℓ(π)-ℓ(ψ)} (-1)^{ℓ(π)}`.
pub fn suitable_sum(pi: &SetPartition, psi: &SetComposition) -> Result<(BigInt, BigInt)> {
    if !pi.is_odd() || psi.n() != pi.n() || !psi.underlying_partition().leq(pi) {
        return invalid(format!("need π odd and π(ψ) ≤ π; got π = {pi}, ψ = {psi}"));
    }
    Ok(odd_set_sides(pi, psi, &odd_merge_weights(pi)))
}

/// [`suitable_sum`] for every admissible `ψ` at once.
pub fn suitable_sums(pi: &SetPartition) -> Result<Vec<(SetComposition, BigInt, BigInt)>> {
    if !pi.is_odd() {
        return invalid(format!("{pi} is not an odd set partition"));
    }
    let weights = odd_merge_weights(pi);
    Ok(SetComposition::all(pi.n())
        .into_iter()
        .filter(|psi| psi.underlying_partition().leq(pi))
        .map(|psi| {
            let (l, r) = odd_set_sides(pi, &psi, &weights);
            (psi, l, r)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }
    fn pc(items: &[(&str, i64)]) -> PartComb {
        items.iter().map(|&(k, c)| (sp(k), rat(c))).collect()
    }

    #[test]
    fn small_expansions() {
        assert_eq!(m_to_big_m(&sp("1/2")).len(), 2);
        assert_eq!(p_to_m(&sp("1/2")), pc(&[("1/2", 1), ("1,2", 1)]));
        assert_eq!(e_to_p(&sp("1,2")), pc(&[("1,2", -1), ("1/2", 1)]));
        assert_eq!(h_to_p(&sp("1/2")), pc(&[("1/2", 1)]));
        let (b, w) = omega(Basis::P, &pc(&[("1/2", 1), ("1,2", 1)])).unwrap();
        assert_eq!(b, Basis::P);
        assert_eq!(w, pc(&[("1/2", 1), ("1,2", -1)]));
    }

    #[test]
    fn n_elem_signs() {
        let x = n_elem(&sp("1/2/3")).unwrap();
        assert_eq!(x.len(), 6);
        assert!(x.iter().all(|(_, c)| *c == rat(1)));
        assert_eq!(n_elem(&sp("1,2,3")).unwrap(), LinComb::term("1,2,3".parse().unwrap(), rat(-1)));
        assert!(n_elem(&sp("1,2")).is_err());
    }

    #[test]
    fn membership() {
        let sym = m_to_big_m(&sp("1/2"));
        assert_eq!(membership_ncsym(&sym).unwrap(), pc(&[("1/2", 1)]));
        let lone = MComb::single("1|2".parse().unwrap());
        assert!(matches!(membership_ncsym(&lone), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn theta_on_power_sums_small() {
        assert_eq!(theta_p(&sp("1/2")).unwrap(), pc(&[("1/2", 4)]));
        assert!(theta_p(&sp("1,2")).unwrap().is_zero());
        assert_eq!(q_elem(&sp("1")), MComb::term("1".parse().unwrap(), rat(2)));
    }

    #[test]
    fn odd_set_identity_example() {
        let (l, r) = suitable_sum(&sp("1/2"), &"1,2".parse().unwrap()).unwrap();
        assert_eq!((l, r), (BigInt::from(2), BigInt::from(2)));
    }
}
