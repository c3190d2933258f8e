//! The peak algebra NCΠ inside NCQSym: enriched fundamental functions `K`,
//! enriched monomial functions `η`, and the change of basis between them.
//!
//! Canonical K and η keys are odd set compositions: `K:φ` is `K_{(B,σ)}` for
//! the enriched standard pair with `SetCompOdd(B,σ) = φ`, likewise for η.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{rat_int, LinComb, MComb, Rational};
use crate::combinatorics::numbers::pow2;
use crate::combinatorics::{
    factorial, multinomial, odd_compositions, odd_of_peak, set_comp, Permutation, SetComposition, Subset,
};
use crate::error::{invalid, Error, Result};

fn signed(k: usize, v: BigInt) -> Rational {
    rat_int(if k % 2 == 0 { v } else { -v })
}

fn check_pair(b: &Subset, sigma: &Permutation) -> Result<()> {
    if b.n() != sigma.n() {
        return invalid(format!("peak set of [{}] paired with permutation of [{}]", b.n(), sigma.n()));
    }
    if !b.is_peak_set() {
        return invalid(format!("{{{b}}} is not a peak set"));
    }
    Ok(())
}

/// `K_{(B,σ)} = Σ_{A ⊆ [n-1], B ⊆ A ∪ (A+1)} 2^{|A|+1} M_{SetComp(A,σ)}`, valid for
/// any permutation `σ`.
pub fn k_to_m(b: &Subset, sigma: &Permutation) -> Result<MComb> {
    check_pair(b, sigma)?;
    let n = sigma.n();
    if n == 0 {
        return Ok(MComb::single(SetComposition::empty()));
    }
    let mut out = MComb::zero();
    for a in Subset::all(n) {
        if b.is_subset_of(&a.union(&a.shift_up())) {
            out.add_term(set_comp(&a, sigma)?, rat_int(pow2(a.len() + 1)));
        }
    }
    Ok(out)
}

/// `K_φ` in the M basis for an odd set composition `φ`.
pub fn k_key_to_m(phi: &SetComposition) -> Result<MComb> {
    if phi.n() == 0 {
        return Ok(MComb::single(SetComposition::empty()));
    }
    let (b, sigma) = phi.enriched_pair()?;
    k_to_m(&b, &sigma)
}

/// `η_φ = (-1)^{p(φ)} Σ_{ψ ≤ φ} 2^{ℓ(ψ)} M_ψ`.
pub fn eta_odd(phi: &SetComposition) -> Result<MComb> {
    let p = match phi.p() {
        Some(p) => p,
        None => return invalid(format!("{phi} is not an odd set composition")),
    };
    let mut out = MComb::zero();
    for psi in phi.coarsenings() {
        let c = signed(p, pow2(psi.len()));
        out.add_term(psi, c);
    }
    Ok(out)
}

/// `η_{(B,σ)} = (-1)^{|B|} Σ_{A ⊆ Odd(B)} 2^{|A|+1} M_{SetComp(A,σ)}`.
pub fn eta_to_m(b: &Subset, sigma: &Permutation) -> Result<MComb> {
    check_pair(b, sigma)?;
    if sigma.n() == 0 {
        return Ok(MComb::single(SetComposition::empty()));
    }
    let odd = odd_of_peak(b)?;
    let mut out = MComb::zero();
    for a in odd.subsets() {
        out.add_term(set_comp(&a, sigma)?, signed(b.len(), pow2(a.len() + 1)));
    }
    Ok(out)
}

/// The odd set composition `SetComp(Odd(B), σ)` naming `η_{(B,σ)}`; this holds
/// for every `σ`, standard or not.
pub fn eta_key(b: &Subset, sigma: &Permutation) -> Result<SetComposition> {
    check_pair(b, sigma)?;
    if sigma.n() == 0 {
        return Ok(SetComposition::empty());
    }
    set_comp(&odd_of_peak(b)?, sigma)
}

/// `K_{(B,σ)} = Σ_{C ⊆ B} η_{(C,σ)}` for any `σ`, in canonical η keys.
pub fn k_pair_in_eta(b: &Subset, sigma: &Permutation) -> Result<LinComb<SetComposition>> {
    check_pair(b, sigma)?;
    let mut out = LinComb::zero();
    for c in b.subsets() {
        out.add_term(eta_key(&c, sigma)?, Rational::one());
    }
    Ok(out)
}

/// `K_{(B,σ)}` for any `σ`, in canonical K keys.
pub fn k_pair_in_k(b: &Subset, sigma: &Permutation) -> Result<LinComb<SetComposition>> {
    eta_to_k(&k_pair_in_eta(b, sigma)?)
}

/// `η_φ = Σ_{C ⊆ B} (-1)^{|B|-|C|} K_{(C,σ)}` on canonical keys.
pub fn eta_to_k(x: &LinComb<SetComposition>) -> Result<LinComb<SetComposition>> {
    x.try_map_linear(|phi| {
        if phi.n() == 0 {
            return Ok(LinComb::single(phi.clone()));
        }
        let (b, sigma) = phi.enriched_pair()?;
        let mut out = LinComb::zero();
        for c in b.subsets() {
            // Odd(C) ⊇ Odd(B), so (C, σ) stays enriched standard.
            out.add_term(eta_key(&c, &sigma)?, signed(b.len() - c.len(), BigInt::one()));
        }
        Ok(out)
    })
}

/// `K_φ = Σ_{C ⊆ B} η_{(C,σ)}` on canonical keys.
pub fn k_to_eta(x: &LinComb<SetComposition>) -> Result<LinComb<SetComposition>> {
    x.try_map_linear(|phi| {
        if phi.n() == 0 {
            return Ok(LinComb::single(phi.clone()));
        }
        let (b, sigma) = phi.enriched_pair()?;
        k_pair_in_eta(&b, &sigma)
    })
}

pub fn eta_comb_to_m(x: &LinComb<SetComposition>) -> Result<MComb> {
    x.try_map_linear(eta_odd)
}

pub fn k_comb_to_m(x: &LinComb<SetComposition>) -> Result<MComb> {
    x.try_map_linear(k_key_to_m)
}

/// Express an M-basis element in the η basis by peeling off the longest odd
/// key first. Fails with [`Error::NotInPeakAlgebra`] when a residual remains.
pub fn to_eta_basis(x: &MComb) -> Result<LinComb<SetComposition>> {
    let mut residual = x.clone();
    let mut out = LinComb::zero();
    loop {
        let next =
            residual.keys().filter(|k| k.is_odd()).min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b))).cloned();
        let Some(phi) = next else { break };
        let lead = eta_odd(&phi)?.get(&phi);
        let coef = residual.get(&phi) / lead;
        residual.add_scaled(&eta_odd(&phi)?, &-coef.clone());
        out.add_term(phi, coef);
    }
    match residual.first_key() {
        None => Ok(out),
        Some(k) => Err(Error::NotInPeakAlgebra(k.to_string())),
    }
}

pub fn to_k_basis(x: &MComb) -> Result<LinComb<SetComposition>> {
    eta_to_k(&to_eta_basis(x)?)
}

pub fn in_ncpeak(x: &MComb) -> bool {
    to_eta_basis(x).is_ok()
}

/// Number of odd set compositions of `[n]`, by enumeration.
pub fn dim_ncpeak(n: usize) -> usize {
    SetComposition::all_odd(n).len()
}

/// The same count as a sum of multinomials over odd compositions of `n`.
pub fn dim_ncpeak_by_compositions(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    odd_compositions(n).iter().map(|c| multinomial(c.parts())).sum()
}

/// `n! [x^n] 1/(1 - sinh x)` by exact power-series inversion.
pub fn egf_one_over_one_minus_sinh(n: usize) -> BigInt {
    let mut f: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=n {
        let mut v = BigRational::zero();
        for j in (1..=k).step_by(2) {
            v += &f[k - j] / BigRational::from_integer(factorial(j));
        }
        f.push(v);
    }
    (&f[n] * BigRational::from_integer(factorial(n))).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn sc(s: &str) -> SetComposition {
        s.parse().unwrap()
    }
    fn mc(items: &[(&str, i64)]) -> MComb {
        items.iter().map(|&(k, c)| (sc(k), rat(c))).collect()
    }

    #[test]
    fn k_small_cases() {
        let id2 = Permutation::identity(2);
        assert_eq!(k_to_m(&Subset::empty(2), &id2).unwrap(), mc(&[("1,2", 2), ("1|2", 4)]));
        assert_eq!(k_key_to_m(&sc("1")).unwrap(), mc(&[("1", 2)]));
        assert_eq!(eta_to_m(&Subset::empty(2), &id2).unwrap(), mc(&[("1,2", 2), ("1|2", 4)]));
        assert!(k_to_m(&Subset::new(3, &[1]).unwrap(), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn eta_parameterizations_agree() {
        for n in 0..=4 {
            for phi in SetComposition::all_odd(n) {
                if n == 0 {
                    continue;
                }
                let (b, sigma) = phi.enriched_pair().unwrap();
                assert_eq!(eta_odd(&phi).unwrap(), eta_to_m(&b, &sigma).unwrap(), "{phi}");
            }
        }
        assert_eq!(SetComposition::all_odd(4).len(), 32);
    }

    #[test]
    fn non_standard_k_is_its_own_element() {
        let b = Subset::new(3, &[2]).unwrap();
        let s132: Permutation = "132".parse().unwrap();
        let lhs = k_to_m(&b, &s132).unwrap();
        assert_eq!(lhs, mc(&[("1|2,3", 4), ("1,3|2", 4), ("1|3|2", 8)]));
        assert_ne!(lhs, k_to_m(&b, &Permutation::identity(3)).unwrap());
        assert_eq!(k_comb_to_m(&k_pair_in_k(&b, &s132).unwrap()).unwrap(), lhs);
    }

    #[test]
    fn greedy_basis_change() {
        let x = k_key_to_m(&sc("1|2,3,4")).unwrap();
        let back = eta_comb_to_m(&to_eta_basis(&x).unwrap()).unwrap();
        assert_eq!(back, x);
        assert!(matches!(to_eta_basis(&mc(&[("1|2", 1)])), Err(Error::NotInPeakAlgebra(_))));
        assert!(to_eta_basis(&MComb::zero()).unwrap().is_zero());
    }

    #[test]
    fn dimensions() {
        for n in 0..=6 {
            let d = BigInt::from(dim_ncpeak(n));
            assert_eq!(d, dim_ncpeak_by_compositions(n));
            assert_eq!(d, egf_one_over_one_minus_sinh(n));
        }
    }
}
