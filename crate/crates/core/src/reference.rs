//! Closed-form extremal counts and literature bounds used as the reference
//! table for verifiers, searches, and the reproduction suite. Exact values
//! return integers; open ranges return (lower, upper) pairs; transcendental
//! covering estimates return floats.
//!
//! Conventions: `k` is the tuple size of the defining property (at least 2),
//! `d` the ambient dimension (at least 2 unless noted). Configurations allow
//! repeated points; point sets require distinct points.

/// Largest k-antipodal configuration in dimension d: (k-1) * 2^d, attained
/// exactly by the vertex set of an affine d-cube with every vertex repeated
/// k-1 times. For k = 2 this specializes to 2^d.
pub fn antipodal_configuration_number(k: usize, d: usize) -> u64 {
    assert!(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
    (k as u64 - 1) << d
}

/// Largest k-diametral configuration over all d-dimensional Minkowski norms:
/// (k-1) * 2^d, attained only when the unit ball is an affine d-cube.
pub fn diametral_configuration_number_any_norm(k: usize, d: usize) -> u64 {
    antipodal_configuration_number(k, d)
}

/// Lower bound for the largest Euclidean k-diametral configuration in
/// dimension d: (k-1)(d+1), from a regular simplex with multiplicity k-1.
pub fn diametral_configuration_lower(k: usize, d: usize) -> u64 {
    assert!(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
    (k as u64 - 1) * (d as u64 + 1)
}

/// Exact largest Euclidean k-diametral configuration where known: equals the
/// simplex lower bound (k-1)(d+1) in dimensions 2 and 3; open otherwise.
pub fn diametral_configuration_number_euclidean(k: usize, d: usize) -> Option<u64> {
    if d == 2 || d == 3 {
        Some(diametral_configuration_lower(k, d))
    } else {
        None
    }
}

/// Upper bound for the largest Euclidean 3-diametral configuration in
/// dimension d: 2d + 4, versus the doubled-simplex lower bound 2d + 2.
pub fn almost_diametral_configuration_upper(d: usize) -> u64 {
    assert!(d >= 2, "need d >= 2");
    2 * d as u64 + 4
}

/// Bounds for the largest k-antipodal point set in dimension d with k >= 3:
/// lower k * 2^(d-1) from stacked prisms over a planar extremal set, upper
/// (k-1) * 2^d - 1 since a point set cannot carry multiplicities. For k = 2
/// the exact value 2^d is returned as a collapsed pair.
pub fn antipodal_point_set_bounds(k: usize, d: usize) -> (u64, u64) {
    assert!(k >= 2 && d >= 2, "need k >= 2 and d >= 2");
    if k == 2 {
        (1 << d, 1 << d)
    } else {
        ((k as u64) << (d - 1), ((k as u64 - 1) << d) - 1)
    }
}

/// Exact largest planar k-antipodal point set: 2k, attained by point sets
/// whose hull is a 2s-gon with sides paired off in parallel, equally loaded
/// pairs.
pub fn planar_antipodal_point_set_number(k: usize) -> u64 {
    assert!(k >= 2, "need k >= 2");
    2 * k as u64
}

/// Exact largest planar Euclidean k-diametral point set: 2k - 1, attained
/// only by the vertex set of a regular (2k-1)-gon.
pub fn planar_diametral_point_set_number(k: usize) -> u64 {
    assert!(k >= 2, "need k >= 2");
    2 * k as u64 - 1
}

/// Exact largest 3-diametral point set in Euclidean 3-space: 6, with the
/// diameter graph of any witness isomorphic to one of the eight catalog
/// classes.
pub fn spatial_almost_diametral_point_set_number() -> u64 {
    6
}

/// Bounds for the largest Euclidean k-diametral point set in 3-space with
/// k >= 4: lower 2k from an odd polygon with an apex, upper 3k - 2.
pub fn spatial_diametral_point_set_bounds(k: usize) -> (u64, u64) {
    assert!(k >= 4, "need k >= 4");
    (2 * k as u64, 3 * k as u64 - 2)
}

/// Exact largest k-diametral point set under the d-cube norm: k * 2^(d-1).
pub fn cube_norm_diametral_point_set_number(k: usize, d: usize) -> u64 {
    assert!(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
    (k as u64) << (d - 1)
}

/// Exact largest planar Euclidean 3-equidistant configuration: 7, attained
/// by the seven-point unit-distance witness.
pub fn planar_almost_equidistant_number() -> u64 {
    7
}

/// Upper bound for the largest planar k-equidistant configuration over all
/// planar norms: 8 for k = 3, and 8(k - 1) in general.
pub fn planar_equidistant_configuration_upper(k: usize) -> u64 {
    assert!(k >= 2, "need k >= 2");
    if k == 3 {
        8
    } else {
        8 * (k as u64 - 1)
    }
}

/// Upper bound for the largest Euclidean k-equidistant configuration in
/// dimension d: (k-1) * 3^d.
pub fn equidistant_configuration_upper_euclidean(k: usize, d: usize) -> u64 {
    assert!(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
    let value = (k as u128 - 1) * 3u128.pow(d as u32);
    u64::try_from(value).expect("equidistant bound overflows u64")
}

/// Upper bound for the largest k-equidistant configuration over all
/// d-dimensional norms: min of (k-1) * 4^d and (k-1)((k-1) * 3^d - (k-2)),
/// with the sharper 2 * 3^d when k = 3.
pub fn equidistant_configuration_upper_any_norm(k: usize, d: usize) -> u64 {
    assert!(k >= 2 && d >= 1, "need k >= 2 and d >= 1");
    let k = k as u128;
    let value = if k == 3 {
        2 * 3u128.pow(d as u32)
    } else {
        let four = (k - 1) * 4u128.pow(d as u32);
        let three = (k - 1) * ((k - 1) * 3u128.pow(d as u32) - (k - 2));
        four.min(three)
    };
    u64::try_from(value).expect("equidistant bound overflows u64")
}

/// Upper bound for the Borsuk partition number of Euclidean d-space: the
/// smaller of 2^(d-1) + 1 and 5 d^(3/2) (4 + ln d) (3/2)^(d/2). The second
/// estimate wins exactly from dimension 18 on.
pub fn borsuk_number_upper(d: usize) -> f64 {
    assert!(d >= 2, "need d >= 2");
    let exponential = (d as f64).exp2() / 2.0 + 1.0;
    let df = d as f64;
    let subexponential = 5.0 * df * df.sqrt() * (4.0 + df.ln()) * 1.5f64.powf(df / 2.0);
    exponential.min(subexponential)
}

/// Upper bound for the homothetic covering number of d-space: the smaller of
/// binom(2d, d) * d * (ln d + ln ln d + 5) and the polynomial estimate
/// (d+1) d^(d-1) - (d-1)(d-2)^(d-1).
pub fn covering_number_upper(d: usize) -> f64 {
    assert!(d >= 2, "need d >= 2");
    let df = d as f64;
    let mut binom = 1.0f64;
    for i in 1..=d {
        binom *= (d + i) as f64 / i as f64;
    }
    let entropic = binom * df * (df.ln() + df.ln().ln() + 5.0);
    let polynomial =
        (df + 1.0) * df.powi(d as i32 - 1) - (df - 1.0) * (df - 2.0).powi(d as i32 - 1);
    entropic.min(polynomial)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn configuration_numbers_match_the_small_cases() {
        assert_eq!(antipodal_configuration_number(2, 2), 4);
        assert_eq!(antipodal_configuration_number(3, 2), 8);
        assert_eq!(antipodal_configuration_number(3, 3), 16);
        assert_eq!(diametral_configuration_number_euclidean(3, 2), Some(6));
        assert_eq!(diametral_configuration_number_euclidean(4, 3), Some(12));
        assert_eq!(diametral_configuration_number_euclidean(3, 4), None);
        assert_eq!(diametral_configuration_lower(3, 4), 10);
    }

    #[test]
    fn point_set_numbers_match_the_small_cases() {
        assert_eq!(planar_antipodal_point_set_number(3), 6);
        assert_eq!(planar_diametral_point_set_number(4), 7);
        assert_eq!(spatial_almost_diametral_point_set_number(), 6);
        assert_eq!(spatial_diametral_point_set_bounds(4), (8, 10));
        assert_eq!(cube_norm_diametral_point_set_number(2, 3), 8);
        assert_eq!(cube_norm_diametral_point_set_number(3, 2), 6);
        assert_eq!(antipodal_point_set_bounds(2, 3), (8, 8));
        assert_eq!(antipodal_point_set_bounds(3, 3), (12, 15));
    }

    #[test]
    fn point_sets_never_beat_configurations() {
        for k in 2..=6 {
            for d in 2..=6 {
                let (lo, hi) = antipodal_point_set_bounds(k, d);
                assert!(lo <= hi);
                assert!(hi <= antipodal_configuration_number(k, d));
            }
            assert!(
                planar_diametral_point_set_number(k)
                    <= diametral_configuration_number_euclidean(k, 2).unwrap()
            );
        }
    }

    #[test]
    fn equidistant_bounds_dominate_diametral_values() {
        assert_eq!(planar_almost_equidistant_number(), 7);
        assert_eq!(planar_equidistant_configuration_upper(3), 8);
        assert_eq!(planar_equidistant_configuration_upper(4), 24);
        assert_eq!(equidistant_configuration_upper_euclidean(3, 2), 18);
        assert_eq!(equidistant_configuration_upper_any_norm(3, 3), 54);
        assert!(planar_almost_equidistant_number() >= 6);
        for d in 2..=5 {
            for k in 2..=5 {
                assert!(
                    equidistant_configuration_upper_euclidean(k, d)
                        >= diametral_configuration_lower(k, d)
                );
            }
        }
    }

    #[test]
    fn almost_diametral_window_brackets_the_doubled_simplex() {
        for d in 2..=8 {
            let lower = diametral_configuration_lower(3, d);
            assert_eq!(lower, 2 * d as u64 + 2);
            assert_eq!(almost_diametral_configuration_upper(d), lower + 2);
        }
    }

    #[test]
    fn borsuk_upper_crossover_sits_at_dimension_eighteen() {
        assert_eq!(borsuk_number_upper(2), 3.0);
        assert_eq!(borsuk_number_upper(3), 5.0);
        for d in 4..18 {
            assert_eq!(
                borsuk_number_upper(d),
                (d as f64).exp2() / 2.0 + 1.0,
                "exponential estimate should win at d={}",
                d
            );
        }
        assert!(borsuk_number_upper(18) < 18f64.exp2() / 2.0 + 1.0);
    }

    #[test]
    fn covering_upper_is_finite_and_positive() {
        for d in 2..=12 {
            let bound = covering_number_upper(d);
            assert!(bound.is_finite() && bound > 0.0);
            assert!(bound >= (d as f64).exp2(), "conjectured value is 2^d");
        }
    }
}
