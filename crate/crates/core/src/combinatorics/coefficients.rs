//! The reordering sets `𝒞_φ^ψ`, their odd down-closures `𝒟_φ^ψ`, and the
//! coefficients `C_{φ'}` that describe the internal coproduct of `η_φ`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mobius::{mobius_odd, mu_ell};
use super::numbers::pow2;
use super::setcomp::SetComposition;
use super::subset::next_permutation;
use crate::error::{invalid, Result};

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `2^{ℓ(ψ∧χ) - ℓ(χ)}`.
pub(crate) fn meet_weight(psi: &SetComposition, chi: &SetComposition) -> BigInt {
    let m = psi.meet(chi).expect("same ground set");
    pow2(m.len() - chi.len())
}

/// Block reorderings `ξ` of `φ` with `ψ ∧ ξ = φ`.
pub fn script_c(phi: &SetComposition, psi: &SetComposition) -> Result<BTreeSet<SetComposition>> {
    if !psi.leq(phi) {
        return invalid(format!("{psi} ≰ {phi}"));
    }
    let mut order: Vec<usize> = (0..phi.len()).collect();
    let mut out = BTreeSet::new();
    loop {
        let xi = phi.reorder(&order);
        if psi.meet(&xi)? == *phi {
            out.insert(xi);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(out)
}

/// Odd set compositions lying below some member of `𝒞_φ^ψ`.
pub fn script_d(phi: &SetComposition, psi: &SetComposition) -> Result<BTreeSet<SetComposition>> {
    Ok(script_c(phi, psi)?.iter().flat_map(|xi| xi.coarsenings()).filter(SetComposition::is_odd).collect())
}

/// `{χ odd : ψ ∧ χ ≤ φ}`; an alternative description of `𝒟_φ^ψ` by a
/// search over all odd set compositions of `[n]`.
pub fn script_d_by_meet(phi: &SetComposition, psi: &SetComposition) -> Result<BTreeSet<SetComposition>> {
    if !psi.leq(phi) {
        return invalid(format!("{psi} ≰ {phi}"));
    }
    let mut out = BTreeSet::new();
    for chi in SetComposition::all_odd(phi.n()) {
        if psi.meet(&chi)?.leq(phi) {
            out.insert(chi);
        }
    }
    Ok(out)
}

/// All coefficients `C_{φ'}` for fixed `(φ, ψ)`, with `φ'` ranging over `𝒟_φ^ψ`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    phi: SetComposition,
    psi: SetComposition,
    dset: BTreeSet<SetComposition>,
    values: BTreeMap<SetComposition, BigRational>,
}

impl CoeffTable {
    /// Solve the triangular system top-down from the members of `𝒞_φ^ψ`.
    pub fn new(phi: &SetComposition, psi: &SetComposition) -> Result<CoeffTable> {
        if !phi.is_odd() {
            return invalid(format!("{phi} is not odd"));
        }
        let dset = script_d(phi, psi)?;
        let p_phi = phi.p().unwrap();
        let mut order: Vec<&SetComposition> = dset.iter().collect();
        order.sort_by_key(|z| std::cmp::Reverse(z.len()));
        let mut values: BTreeMap<SetComposition, BigRational> = BTreeMap::new();
        for &z in &order {
            let rhs = BigRational::from_integer(sign(p_phi) * meet_weight(psi, z));
            let mut above = BigRational::zero();
            for (w, c) in &values {
                if w != z && z.leq(w) {
                    above += BigRational::from_integer(sign(w.p().unwrap())) * c;
                }
            }
            let c = BigRational::from_integer(sign(z.p().unwrap())) * (rhs - above);
            values.insert(z.clone(), c);
        }
        Ok(CoeffTable { phi: phi.clone(), psi: psi.clone(), dset, values })
    }

    pub fn dset(&self) -> &BTreeSet<SetComposition> {
        &self.dset
    }

    pub fn values(&self) -> &BTreeMap<SetComposition, BigRational> {
        &self.values
    }

    pub fn get(&self, phiprime: &SetComposition) -> Result<BigRational> {
        match self.values.get(phiprime) {
            Some(v) => Ok(v.clone()),
            None => invalid(format!("{phiprime} is not an odd set composition below a member of 𝒞")),
        }
    }

    /// `(-1)^{p(φ')+p(φ)} Σ_{ζ ∈ 𝒟, ζ ≥ φ'} μ(φ', ζ) 2^{ℓ(ψ∧ζ)-ℓ(ζ)}`.
    pub fn by_inclusion_exclusion(&self, phiprime: &SetComposition) -> Result<BigRational> {
        if !self.dset.contains(phiprime) {
            return invalid(format!("{phiprime} is not in 𝒟"));
        }
        let mut s = BigInt::zero();
        for z in &self.dset {
            if phiprime.leq(z) {
                s += mobius_odd(phiprime, z)? * meet_weight(&self.psi, z);
            }
        }
        let sg = sign(phiprime.p().unwrap() + self.phi.p().unwrap());
        Ok(BigRational::from_integer(sg * s))
    }

    /// The blockwise product formula observed experimentally; used only as a
    /// reported cross-check.
    pub fn by_block_product(&self, phiprime: &SetComposition) -> Result<BigRational> {
        if !self.dset.contains(phiprime) {
            return invalid(format!("{phiprime} is not in 𝒟"));
        }
        let mut prod = BigInt::one();
        for block in phiprime.blocks() {
            let phi_j = self.phi.restrict(block);
            let psi_j = self.psi.restrict(block);
            let mut factor = BigInt::zero();
            for chi in script_d(&phi_j, &psi_j)? {
                factor += meet_weight(&psi_j, &chi) * mu_ell(chi.len() + 1);
            }
            prod *= factor;
        }
        let sg = sign(phiprime.p().unwrap() + self.phi.p().unwrap());
        Ok(BigRational::from_integer(sg * prod))
    }
}

/// `C_{φ'}` for the triple `(φ, ψ, φ')`, by the top-down recursion.
pub fn coeff_c(phi: &SetComposition, psi: &SetComposition, phiprime: &SetComposition) -> Result<BigRational> {
    CoeffTable::new(phi, psi)?.get(phiprime)
}
