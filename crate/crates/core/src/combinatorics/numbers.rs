//! Integer sequences used by the identity checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `n! / (α_1! α_2! ...)` with `n = Σ α_i`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// `Cat_k = binom(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> BigInt {
    binomial(2 * k, k) / (k + 1)
}

/// `E(n, k)`: permutations of `[n]` with `k` descents.
pub fn eulerian(n: usize, k: usize) -> Result<BigInt> {
    if k > n.saturating_sub(1) {
        return invalid(format!("eulerian({n}, {k}): k out of range"));
    }
    Ok(eulerian_row(n)[k].clone())
}

/// `E(n, 0), ..., E(n, max(n-1, 0))` via `E(n,k) = (k+1)E(n-1,k) + (n-k)E(n-1,k-1)`.
pub fn eulerian_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += &row[k] * (k + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                v += &row[k - 1] * (m - k);
            }
            *slot = v;
        }
        row = next;
    }
    row
}

/// `Σ_k (-1)^k E(n, k)`.
pub fn alternating_eulerian_sum(n: usize) -> BigInt {
    eulerian_row(n).into_iter().enumerate().map(|(k, e)| if k % 2 == 0 { e } else { -e }).sum()
}

pub fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cats: Vec<BigInt> = (0..5).map(catalan).collect();
        assert_eq!(cats, [1, 1, 2, 5, 14].map(BigInt::from));
        assert_eq!(eulerian_row(3), [1, 4, 1].map(BigInt::from));
        assert_eq!(eulerian(7, 0).unwrap(), BigInt::one());
        assert!(eulerian(3, 3).is_err());
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn eulerian_rows_sum_to_factorial() {
        for n in 1..=10 {
            let s: BigInt = eulerian_row(n).into_iter().sum();
            assert_eq!(s, factorial(n));
        }
    }
}
