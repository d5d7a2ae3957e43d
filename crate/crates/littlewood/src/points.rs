//! Seeded evaluation points: distinct small primes, each independently
//! inverted. Distinct primes keep every alternant used by the oracles
//! nonzero, including the symplectic one, which also needs `x_i ≠ x_j⁻¹`.

use littlewood_core::schur::{scalar, ExactScalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// One point with `rank` coordinates.
pub fn sample_point(rng: &mut impl Rng, rank: usize) -> Vec<ExactScalar> {
    assert!(rank <= PRIMES.len(), "at most {} coordinates", PRIMES.len());
    PRIMES
        .choose_multiple(rng, rank)
        .map(|&p| if rng.gen() { scalar(p) } else { scalar(p).recip() })
        .collect()
}

/// `count` points for case number `stream` under `seed`. The same triple
/// always gives the same points, whatever order cases are evaluated in.
pub fn sample_points(seed: u64, stream: u64, rank: usize, count: usize) -> Vec<Vec<ExactScalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..count).map(|_| sample_point(&mut rng, rank)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_reproducible_and_distinct() {
        let a = sample_points(7, 3, 4, 3);
        assert_eq!(a, sample_points(7, 3, 4, 3));
        assert_ne!(a, sample_points(7, 4, 4, 3));
        for pt in &a {
            for (i, x) in pt.iter().enumerate() {
                for y in &pt[i + 1..] {
                    assert_ne!(x, y);
                    assert_ne!(x, &y.recip());
                }
            }
        }
    }
}
