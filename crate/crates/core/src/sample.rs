//! Seeded random inputs for the randomized identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::Rational;

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with small numerator and denominator.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn small_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// Integer entries in [-2, 2]; keeps sizes down for cubic identities.
pub fn small_int_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::from_integer(rng.gen_range(-2..=2))).collect()
}
