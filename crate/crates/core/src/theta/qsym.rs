//! The commutative shadow: QSym in the M and F bases, the peak algebra Π
//! with its K and η bases, and the descent-to-peak map between them.
//!
//! Keys are subsets of `[n-1]`; K and η keys are peak sets.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{rat_int, LinComb, Rational};
use crate::combinatorics::numbers::pow2;
use crate::combinatorics::{odd_of_peak, Subset};
use crate::error::{invalid, Result};

pub type QComb = LinComb<Subset>;

fn signed(k: usize, v: BigInt) -> Rational {
    rat_int(if k % 2 == 0 { v } else { -v })
}

pub fn qsym_f_to_m(a: &Subset) -> QComb {
    a.supersets().into_iter().map(|c| (c, Rational::one())).collect()
}

pub fn qsym_m_to_f(a: &Subset) -> QComb {
    a.supersets().into_iter().map(|c| (c, signed(c.len() - a.len(), BigInt::one()))).collect()
}

fn check_peak(b: &Subset) -> Result<()> {
    if !b.is_peak_set() {
        return invalid(format!("{{{b}}} is not a peak set"));
    }
    Ok(())
}

/// `K_B = Σ_{B ⊆ A ∪ (A+1)} 2^{|A|+1} M_A`.
pub fn qsym_k_to_m(b: &Subset) -> Result<QComb> {
    check_peak(b)?;
    if b.n() == 0 {
        return Ok(QComb::single(*b));
    }
    Ok(Subset::all(b.n())
        .into_iter()
        .filter(|a| b.is_subset_of(&a.union(&a.shift_up())))
        .map(|a| (a, rat_int(pow2(a.len() + 1))))
        .collect())
}

/// `η_B = (-1)^{|B|} Σ_{A ⊆ Odd(B)} 2^{|A|+1} M_A`.
pub fn qsym_eta_to_m(b: &Subset) -> Result<QComb> {
    check_peak(b)?;
    if b.n() == 0 {
        return Ok(QComb::single(*b));
    }
    Ok(odd_of_peak(b)?.subsets().into_iter().map(|a| (a, signed(b.len(), pow2(a.len() + 1)))).collect())
}

/// `A \ ((A+1) ∪ {1})`, the peak set that `F_A` is sent to.
pub fn peak_image(a: &Subset) -> Subset {
    let mut drop = a.shift_up();
    if a.n() >= 2 {
        drop = drop.union(&Subset::new(a.n(), &[1]).expect("1 lies in [n-1]"));
    }
    a.minus(&drop)
}

/// `Θ_QSym(F_A) = K_{A \ ((A+1) ∪ {1})}` in the M basis.
pub fn theta_qsym_f(a: &Subset) -> QComb {
    qsym_k_to_m(&peak_image(a)).expect("peak_image returns a peak set")
}

/// `Θ_QSym` on an M-basis element, through the F basis.
pub fn theta_qsym(x: &QComb) -> QComb {
    x.map_linear(qsym_m_to_f).map_linear(theta_qsym_f)
}

/// `dim Π_n`: the number of peak sets of `[n]`.
pub fn dim_peak_qsym(n: usize) -> usize {
    Subset::peak_sets(n).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn small_cases() {
        let k = qsym_k_to_m(&Subset::empty(2)).unwrap();
        assert_eq!(k.get(&Subset::empty(2)), rat(2));
        assert_eq!(k.get(&Subset::new(2, &[1]).unwrap()), rat(4));
        assert_eq!(theta_qsym_f(&Subset::empty(3)), qsym_k_to_m(&Subset::empty(3)).unwrap());
        let dims: Vec<usize> = (1..=7).map(dim_peak_qsym).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn m_and_f_are_inverse() {
        for a in Subset::all(5) {
            let back = qsym_m_to_f(&a).map_linear(qsym_f_to_m);
            assert_eq!(back, QComb::single(a));
        }
    }
}
