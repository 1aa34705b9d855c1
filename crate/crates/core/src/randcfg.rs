//! Seeded random rational configurations for the dual-implementation
//! oracles. Everything is driven by an explicit seed so reported runs can be
//! replayed bit for bit.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::point::{Point, PointConfiguration};
use crate::{RatConfig, Rational};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One coordinate p/q with |p/q| <= max_abs and 1 <= q <= max_den.
fn coordinate(rng: &mut impl Rng, max_abs: i64, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    let p = rng.gen_range(-max_abs * q..=max_abs * q);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A random configuration with at least two distinct points; all-equal draws
/// are resampled so downstream diameter computations stay well posed.
pub fn random_rational_config(
    rng: &mut impl Rng,
    dim: usize,
    n: usize,
    max_abs: i64,
    max_den: i64,
) -> RatConfig {
    assert!(dim >= 1 && n >= 2 && max_abs >= 1 && max_den >= 1);
    loop {
        let points: Vec<Point<Rational>> = (0..n)
            .map(|_| {
                Point(
                    (0..dim)
                        .map(|_| coordinate(rng, max_abs, max_den))
                        .collect(),
                )
            })
            .collect();
        let cfg = PointConfiguration::new(dim, points).expect("coordinates match dim");
        if !cfg.all_points_equal() {
            return cfg;
        }
    }
}

/// Batch for the antipodality-gauge agreement oracle: dimensions 2 through
/// 4, 2 to 10 points, coordinates in [-10, 10] with denominators up to 7.
pub fn equivalence_batch(seed: u64, count: usize) -> Vec<RatConfig> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let dim = rng.gen_range(2..=4);
            let n = rng.gen_range(2..=10);
            random_rational_config(&mut rng, dim, n, 10, 7)
        })
        .collect()
}

/// Batch for the spatial diameter-graph structure oracle: Euclidean 3-space,
/// 2 to 8 points each.
pub fn spatial_batch(seed: u64, count: usize) -> Vec<RatConfig> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            random_rational_config(&mut rng, 3, n, 10, 7)
        })
        .collect()
}
