//! Helpers shared by the integration tests.
#![allow(dead_code)]

use ncpeak_core::algebra::{MComb, MTensor};
use ncpeak_core::combinatorics::{Permutation, SetComposition, SetPartition, Subset};
use ncpeak_core::ncqsym::coproduct;
use ncpeak_core::theta::theta;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sc(s: &str) -> SetComposition {
    s.parse().unwrap()
}

pub fn sp(s: &str) -> SetPartition {
    s.parse().unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn subset(n: usize, elems: &[usize]) -> Subset {
    Subset::new(n, elems).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random set composition of `[n]`, built from a random word.
pub fn random_set_composition(rng: &mut impl Rng, n: usize) -> SetComposition {
    let word: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=n as u8)).collect();
    ncpeak_core::algebra::word_pattern(&word)
}

/// A random odd set composition of `[n]` and a random coarsening of it.
pub fn random_odd_pair(rng: &mut impl Rng, odd: &[SetComposition]) -> (SetComposition, SetComposition) {
    let phi = odd.choose(rng).unwrap().clone();
    let psi = phi.coarsenings().choose(rng).unwrap().clone();
    (phi, psi)
}

/// `(Θ ⊗ Θ)(t)`.
pub fn theta_tensor(t: &MTensor) -> MTensor {
    let mut out = MTensor::zero();
    for ((a, b), c) in t.iter() {
        let ta = theta(&MComb::single(a.clone()));
        let tb = theta(&MComb::single(b.clone()));
        out.add_scaled(&ncpeak_core::algebra::tensor(&ta, &tb), c);
    }
    out
}

pub fn coproduct_of(phi: &SetComposition) -> MTensor {
    coproduct(&MComb::single(phi.clone()))
}

/// Peak set of the sequence `w` computed from scratch: `2 ≤ i ≤ n-1` with
/// `w_{i-1} < w_i > w_{i+1}`.
pub fn peaks_of(w: &[usize]) -> Vec<usize> {
    (1..w.len().saturating_sub(1)).filter(|&i| w[i - 1] < w[i] && w[i] > w[i + 1]).map(|i| i + 1).collect()
}

pub fn descents_of(w: &[usize]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).map(|i| i + 1).collect()
}
