//! NCQSym: monomial and fundamental bases, product, graded coproduct,
//! internal coproduct, and the commutation map to QSym.
//!
//! Elements are [`MComb`]s (M basis). F-basis combinations are
//! `LinComb<SetComposition>` keyed by the set composition of the standard
//! pair, so `F:φ` means `F_{(A,σ)}` with `SetComp(A,σ) = φ`.

use num_traits::One;

use crate::algebra::{rat, LinComb, MComb, MTensor, Rational};
use crate::combinatorics::{set_comp, subset_of_comp, Permutation, SetComposition, Subset};
use crate::error::{invalid, Result};

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `F_{(A,σ)} = Σ_{A ⊆ C ⊆ [n-1]} M_{SetComp(C,σ)}` for any pair, standard or not.
pub fn f_to_m(a: &Subset, sigma: &Permutation) -> Result<MComb> {
    if a.n() != sigma.n() {
        return invalid(format!("subset of [{}] paired with permutation of [{}]", a.n(), sigma.n()));
    }
    let mut out = MComb::zero();
    for c in a.supersets() {
        out.add_term(set_comp(&c, sigma)?, Rational::one());
    }
    Ok(out)
}

/// `F_φ` in the M basis, `φ` naming the standard pair.
pub fn f_key_to_m(phi: &SetComposition) -> MComb {
    let (a, sigma) = phi.standard_pair();
    f_to_m(&a, &sigma).expect("standard pair is well formed")
}

/// `M_φ = Σ_{C ⊇ A} (-1)^{|C \ A|} F_{(C,σ)}` with `(A,σ)` the standard pair of `φ`.
pub fn m_to_f(phi: &SetComposition) -> LinComb<SetComposition> {
    let (a, sigma) = phi.standard_pair();
    let mut out = LinComb::zero();
    for c in a.supersets() {
        let key = set_comp(&c, &sigma).expect("sizes agree");
        out.add_term(key, sign(c.len() - a.len()));
    }
    out
}

pub fn to_f_basis(x: &MComb) -> LinComb<SetComposition> {
    x.map_linear(m_to_f)
}

pub fn from_f_basis(x: &LinComb<SetComposition>) -> MComb {
    x.map_linear(f_key_to_m)
}

/// `M_φ · M_ψ` by the quasi-shuffle of block sequences, `ψ` shifted by `n(φ)`.
pub fn product_m(phi: &SetComposition, psi: &SetComposition) -> MComb {
    let a = phi.blocks();
    let b = psi.shifted_blocks(phi.n());
    let n = phi.n() + psi.n();
    let mut out = MComb::zero();
    let mut cur: Vec<Vec<usize>> = Vec::with_capacity(a.len() + b.len());
    quasi_shuffle(a, &b, 0, 0, &mut cur, &mut |blocks| {
        out.add_term(SetComposition::from_blocks_unchecked(n, blocks.to_vec()), Rational::one());
    });
    out
}

fn quasi_shuffle(
    a: &[Vec<usize>],
    b: &[Vec<usize>],
    i: usize,
    j: usize,
    cur: &mut Vec<Vec<usize>>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    if i == a.len() && j == b.len() {
        emit(cur);
        return;
    }
    if i < a.len() {
        cur.push(a[i].clone());
        quasi_shuffle(a, b, i + 1, j, cur, emit);
        cur.pop();
    }
    if j < b.len() {
        cur.push(b[j].clone());
        quasi_shuffle(a, b, i, j + 1, cur, emit);
        cur.pop();
    }
    if i < a.len() && j < b.len() {
        let mut u = a[i].clone();
        u.extend_from_slice(&b[j]);
        cur.push(u);
        quasi_shuffle(a, b, i + 1, j + 1, cur, emit);
        cur.pop();
    }
}

pub fn product(x: &MComb, y: &MComb) -> MComb {
    let mut out = MComb::zero();
    for (phi, c) in x.iter() {
        for (psi, d) in y.iter() {
            out.add_scaled(&product_m(phi, psi), &(c * d));
        }
    }
    out
}

/// `Δ(M_φ)`: cut the block sequence anywhere and standardize both sides.
pub fn coproduct_m(phi: &SetComposition) -> MTensor {
    let blocks = phi.blocks();
    let mut out = MTensor::zero();
    for i in 0..=blocks.len() {
        let left = SetComposition::standardize(&blocks[..i]);
        let right = SetComposition::standardize(&blocks[i..]);
        out.add_term((left, right), Rational::one());
    }
    out
}

pub fn coproduct(x: &MComb) -> MTensor {
    x.map_linear(coproduct_m)
}

/// `Δ°(M_φ) = Σ_{ψ ≤ φ, ψ ∧ φ' = φ} M_ψ ⊗ M_φ'`.
///
/// Any `φ'` with `ψ ∧ φ' = φ` is a union pattern of the blocks of `φ`, so we
/// enumerate set compositions of the block indices and filter.
pub fn internal_coproduct_m(phi: &SetComposition) -> MTensor {
    let atoms = phi.blocks();
    let candidates: Vec<SetComposition> = SetComposition::all(atoms.len())
        .iter()
        .map(|omega| {
            let blocks = omega
                .blocks()
                .iter()
                .map(|g| {
                    let mut b: Vec<usize> = g.iter().flat_map(|&i| atoms[i - 1].iter().copied()).collect();
                    b.sort_unstable();
                    b
                })
                .collect();
            SetComposition::from_blocks_unchecked(phi.n(), blocks)
        })
        .collect();
    let mut out = MTensor::zero();
    for psi in phi.coarsenings() {
        for phiprime in &candidates {
            if psi.meet(phiprime).expect("same ground set") == *phi {
                out.add_term((psi.clone(), phiprime.clone()), Rational::one());
            }
        }
    }
    out
}

pub fn internal_coproduct(x: &MComb) -> MTensor {
    x.map_linear(internal_coproduct_m)
}

/// The counit: the coefficient of `M_∅`.
pub fn counit(x: &MComb) -> Rational {
    x.get(&SetComposition::empty())
}

/// `ρ(M_φ) = M_A` with `A` the cut set of the block sizes of `φ`.
pub fn rho_m(x: &MComb) -> LinComb<Subset> {
    x.map_keys(|phi| subset_of_comp(&phi.block_sizes()))
}

/// `ρ(F_φ) = F_A` where `(A, σ)` is the standard pair of `φ`.
pub fn rho_f(x: &LinComb<SetComposition>) -> LinComb<Subset> {
    x.map_keys(|phi| phi.standard_pair().0)
}

/// `M_φ ⊗ M_ψ ↦ M_φ · M_ψ`, used by the bialgebra checks.
pub fn multiply_tensor(t: &MTensor) -> MComb {
    let mut out = MComb::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&product_m(a, b), c);
    }
    out
}

/// Product in `NCQSym ⊗ NCQSym`, componentwise.
pub fn tensor_product(s: &MTensor, t: &MTensor) -> MTensor {
    let mut out = MTensor::zero();
    for ((a, b), c) in s.iter() {
        for ((x, y), d) in t.iter() {
            let left = product_m(a, x);
            let right = product_m(b, y);
            out.add_scaled(&crate::algebra::tensor(&left, &right), &(c * d));
        }
    }
    out
}

/// `dim NCQSym_n`: the ordered Bell number.
pub fn dim_ncqsym(n: usize) -> usize {
    SetComposition::all(n).len()
}

/// Unit `M_∅`.
pub fn unit() -> MComb {
    MComb::single(SetComposition::empty())
}

/// Shorthand for an integer multiple of `M_φ`.
pub fn m_term(phi: SetComposition, c: i64) -> MComb {
    MComb::term(phi, rat(c))
}
