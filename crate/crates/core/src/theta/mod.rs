//! The labelled descent-to-peak map `Θ: NCQSym → NCΠ`.
//!
//! `Θ` is defined on fundamental functions by
//! `Θ(F_{(A,σ)}) = K_{(A \ ((A+1) ∪ {1}), σ)}` and extended linearly; every
//! other formula in this module is checked against that definition.

pub mod qsym;

use num_traits::One;

use crate::algebra::{LinComb, MComb, Rational};
use crate::combinatorics::{odiff, peak_of_odd, set_comp, Permutation, SetComposition, Subset};
use crate::error::{invalid, Result};
use crate::ncpeak::{eta_to_k, k_pair_in_eta, k_to_m};
use crate::ncqsym::{rho_m, to_f_basis};

pub use qsym::{peak_image, theta_qsym, theta_qsym_f, QComb};

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Θ(F_{(A,σ)})` in the M basis, for any pair.
pub fn theta_f(a: &Subset, sigma: &Permutation) -> Result<MComb> {
    if a.n() != sigma.n() {
        return invalid(format!("subset of [{}] paired with permutation of [{}]", a.n(), sigma.n()));
    }
    k_to_m(&peak_image(a), sigma)
}

/// `Θ(F_{(A,σ)})` in canonical K keys, for any pair.
pub fn theta_f_in_k(a: &Subset, sigma: &Permutation) -> Result<LinComb<SetComposition>> {
    if a.n() != sigma.n() {
        return invalid(format!("subset of [{}] paired with permutation of [{}]", a.n(), sigma.n()));
    }
    eta_to_k(&k_pair_in_eta(&peak_image(a), sigma)?)
}

/// `Θ` on an M-basis element, via the F basis.
pub fn theta(x: &MComb) -> MComb {
    to_f_basis(x).map_linear(|phi| {
        let (a, sigma) = phi.standard_pair();
        theta_f(&a, &sigma).expect("standard pairs are well formed")
    })
}

/// Closed form of `Θ(M_{(A,σ)})` in η keys: `(-1)^{n-1-|B|-|A|} η_{(B,σ)}` with
/// `Odd(B) = ODiff(A)` when `n - max(A)` is odd, and zero otherwise.
pub fn theta_m_closed(phi: &SetComposition) -> LinComb<SetComposition> {
    let n = phi.n();
    if n == 0 {
        return LinComb::single(SetComposition::empty());
    }
    let (a, sigma) = phi.standard_pair();
    if (n - a.max_elem()) % 2 == 0 {
        return LinComb::zero();
    }
    let od = odiff(&a).expect("parity checked");
    let b = peak_of_odd(&od).expect("ODiff(A) is an odd set");
    let key = set_comp(&od, &sigma).expect("sizes agree");
    LinComb::term(key, sign(n - 1 + b.len() + a.len()))
}

/// The same map phrased through block merging:
/// `Θ(M_φ) = (-1)^{n-ℓ(φ)+p(Odd(φ))} η_{Odd(φ)}` when the last block of `φ` is odd.
pub fn theta_m_merge(phi: &SetComposition) -> LinComb<SetComposition> {
    if phi.n() == 0 {
        return LinComb::single(SetComposition::empty());
    }
    match phi.odd_merge() {
        Ok(odd) => {
            let p = odd.p().expect("merged blocks are odd");
            LinComb::term(odd, sign(phi.n() - phi.len() + p))
        }
        Err(_) => LinComb::zero(),
    }
}

/// `Σ_{A ⊆ C} (-1)^{|C|} K_{(C \ ((C+1) ∪ {1}), σ)}` in the M basis.
pub fn theta_alternating_sum(a: &Subset, sigma: &Permutation) -> Result<MComb> {
    let mut out = MComb::zero();
    for c in a.supersets() {
        out.add_scaled(&theta_f(&c, sigma)?, &sign(c.len()));
    }
    Ok(out)
}

/// The expected value of [`theta_alternating_sum`]: `(-1)^{n-1-|B|} η_{(B,σ)}` with
/// `Odd(B) = ODiff(A)` when `n - max(A)` is odd, zero otherwise.
pub fn theta_alternating_sum_closed(a: &Subset, sigma: &Permutation) -> Result<MComb> {
    let n = sigma.n();
    if n == 0 || (n - a.max_elem()) % 2 == 0 {
        return Ok(MComb::zero());
    }
    let b = peak_of_odd(&odiff(a)?)?;
    let eta = crate::ncpeak::eta_to_m(&b, sigma)?;
    Ok(eta.scale(&sign(n - 1 + b.len())))
}

/// Set compositions `φ ⊨ [n]` where `ρ(Θ(M_φ)) ≠ Θ_QSym(ρ(M_φ))`.
pub fn check_diagram(n: usize) -> Vec<SetComposition> {
    SetComposition::all(n)
        .into_iter()
        .filter(|phi| {
            let m = MComb::single(phi.clone());
            rho_m(&theta(&m)) != theta_qsym(&rho_m(&m))
        })
        .collect()
}
