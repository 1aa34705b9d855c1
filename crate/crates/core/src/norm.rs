//! Norms: the three standard ones plus polytope gauges.
//!
//! Distances are compared through [`DistanceKey`]s: the Euclidean key is the
//! squared distance so rational inputs stay rational, every other kind keys
//! on the distance itself. Two keys compare equal iff the true distances are
//! equal, which is what diameter-graph edges and unit-distance edges need.

use crate::error::{Error, Result};
use crate::lp::{Outcome, Program, Rel, VarDomain};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub enum Norm<S> {
    Euclidean,
    Linf,
    L1,
    Gauge(Polytope<S>),
}

/// Totally ordered stand-in for a distance; see the module docs for the
/// euclidean squaring convention.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceKey<S>(pub S);

impl<S: Scalar> DistanceKey<S> {
    pub fn total_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }

    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        self.0.approx_eq(&other.0, rel_tol)
    }
}

impl<S: Scalar> Norm<S> {
    /// Wraps a polytope as a gauge norm after validating the body invariants.
    pub fn gauge(body: Polytope<S>) -> Result<Norm<S>> {
        validate_norm_body(&body)?;
        Ok(Norm::Gauge(body))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Norm::Euclidean => "euclidean",
            Norm::Linf => "linf",
            Norm::L1 => "l1",
            Norm::Gauge(_) => "gauge",
        }
    }

    /// Key of the distance between two points; exact on rational inputs.
    pub fn distance_key(&self, x: &Point<S>, y: &Point<S>) -> Result<DistanceKey<S>> {
        if x.dim() != y.dim() {
            return Err(Error::DimensionMismatch(
                "distance between points of different dimension".into(),
            ));
        }
        let d = x.sub(y);
        let key = match self {
            Norm::Euclidean => d.dot(&d),
            Norm::Linf => d.0.iter().map(|c| c.abs()).fold(S::zero(), |m, c| {
                if c.total_cmp(&m).is_gt() {
                    c
                } else {
                    m
                }
            }),
            Norm::L1 => d.0.iter().fold(S::zero(), |acc, c| acc + c.abs()),
            Norm::Gauge(body) => gauge_norm(body, &d)?,
        };
        Ok(DistanceKey(key))
    }

    /// The key value that means "distance one" under this norm.
    pub fn unit_key(&self) -> DistanceKey<S> {
        DistanceKey(S::one())
    }
}

/// Checks the invariants a polytope must satisfy to serve as a norm body:
/// vertex set symmetric through the origin, origin in the affine hull (so
/// the body's span is linear), and positive facet offsets when an
/// H-representation is present.
pub fn validate_norm_body<S: Scalar>(body: &Polytope<S>) -> Result<()> {
    if body.vertices.is_empty() {
        return Err(Error::InvalidBody("empty vertex set".into()));
    }
    for v in &body.vertices {
        let neg = v.scale(&-S::one());
        if !body.vertices.iter().any(|w| *w == neg) {
            return Err(Error::InvalidBody(format!(
                "vertex set not symmetric: missing -{:?}",
                v.0
            )));
        }
    }
    if body.vertices.iter().all(|v| v.is_zero()) {
        return Err(Error::InvalidBody("body has no extent".into()));
    }
    for (_, c) in &body.chart.equalities {
        if !c.is_zero() {
            return Err(Error::InvalidBody(
                "affine hull does not pass through the origin".into(),
            ));
        }
    }
    if let Some(facets) = &body.facets {
        for f in facets {
            if f.offset <= S::zero() {
                return Err(Error::InvalidBody(
                    "facet offset not strictly positive; origin not interior".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Minkowski functional of `body` at `x`: min { t >= 0 : x in t.body }.
///
/// With an H-representation this is the classic facet maximum
/// max_f (normal.x)/offset. Without one (difference bodies) it is the exact
/// LP min sum(c) subject to sum c_i v_i = x, c >= 0 over the vertices; the
/// two routes agree and are cross-checked in tests.
pub fn gauge_norm<S: Scalar>(body: &Polytope<S>, x: &Point<S>) -> Result<S> {
    if x.dim() != body.dim {
        return Err(Error::DimensionMismatch(
            "gauge argument dimension differs from body".into(),
        ));
    }
    // Span membership: the affine hull is linear (validated), so membership
    // in the span is exactly the equality system.
    for (n, _) in &body.chart.equalities {
        if !n.dot(x).is_zero() {
            return Err(Error::DimensionMismatch(
                "point outside the linear span of the body".into(),
            ));
        }
    }
    if x.is_zero() {
        return Ok(S::zero());
    }
    match &body.facets {
        Some(facets) => {
            let mut best = S::zero();
            for f in facets {
                let v = f.normal.dot(x) / f.offset.clone();
                if v.total_cmp(&best).is_gt() {
                    best = v;
                }
            }
            if best <= S::zero() {
                return Err(Error::InvalidBody(
                    "gauge not positive on a nonzero point; body unbounded or invalid".into(),
                ));
            }
            Ok(best)
        }
        None => {
            let m = body.vertices.len();
            let mut lp: Program<S> = Program::new(m, VarDomain::NonNegative);
            for r in 0..body.dim {
                let row: Vec<S> = body.vertices.iter().map(|v| v.0[r].clone()).collect();
                lp.push(row, Rel::Eq, x.0[r].clone());
            }
            match lp.minimize(&vec![S::one(); m]) {
                Outcome::Optimal { value, .. } => Ok(value),
                Outcome::Infeasible => Err(Error::DimensionMismatch(
                    "point outside the cone of the body vertices".into(),
                )),
                Outcome::Unbounded => Err(Error::Internal(
                    "gauge LP cannot be unbounded: objective bounded below by zero".into(),
                )),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::PointConfiguration;
    use crate::polytope::{convex_hull_centered, difference_body};
    use crate::{rat, RatPoint, Rational};

    fn pts(coords: &[&[i64]]) -> Vec<RatPoint> {
        coords.iter().map(|c| Point::from_ints(c)).collect()
    }

    fn body(coords: &[&[i64]]) -> Polytope<Rational> {
        convex_hull_centered(&pts(coords)).unwrap()
    }

    #[test]
    fn gauge_of_square_is_linf() {
        let k = body(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let g = gauge_norm(&k, &Point::from_ints(&[3, 1])).unwrap();
        assert_eq!(g, rat(3, 1));
    }

    #[test]
    fn gauge_of_cross_polytope_is_l1() {
        let k = body(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let g = gauge_norm(&k, &Point::from_ints(&[1, 1])).unwrap();
        assert_eq!(g, rat(2, 1));
    }

    #[test]
    fn gauge_of_hexagon() {
        let k = body(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]);
        assert_eq!(
            gauge_norm(&k, &Point::from_ints(&[1, 1])).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            gauge_norm(&k, &Point::from_ints(&[1, -1])).unwrap(),
            rat(1, 1)
        );
        assert_eq!(gauge_norm(&k, &Point::zero(2)).unwrap(), rat(0, 1));
    }

    #[test]
    fn gauge_homogeneous_and_triangle_inequality() {
        let k = body(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]);
        let samples = pts(&[&[1, 2], &[-3, 1], &[2, -5], &[7, 0]]);
        for x in &samples {
            let gx = gauge_norm(&k, x).unwrap();
            assert!(gx > rat(0, 1));
            let three_x = x.scale(&rat(3, 1));
            assert_eq!(gauge_norm(&k, &three_x).unwrap(), rat(3, 1) * gx.clone());
            let neg = x.scale(&rat(-1, 1));
            assert_eq!(gauge_norm(&k, &neg).unwrap(), gx.clone());
            for y in &samples {
                let gy = gauge_norm(&k, y).unwrap();
                let gxy = gauge_norm(&k, &x.add(y)).unwrap();
                assert!(gxy <= gx.clone() + gy);
            }
        }
    }

    #[test]
    fn facet_route_and_vertex_lp_route_agree() {
        // The same hexagon, once with facets and once stripped to V-rep.
        let with_facets = body(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]);
        let mut vrep_only = with_facets.clone();
        vrep_only.facets = None;
        for x in pts(&[&[1, 1], &[2, -1], &[-4, 3], &[5, 5], &[0, -2]]) {
            let a = gauge_norm(&with_facets, &x).unwrap();
            let b = gauge_norm(&vrep_only, &x).unwrap();
            assert_eq!(a, b, "routes disagree at {:?}", x.0);
        }
    }

    #[test]
    fn degenerate_body_span_checks() {
        // Segment body on the x-axis inside the plane.
        let k = body(&[&[2, 0], &[-2, 0]]);
        assert_eq!(
            gauge_norm(&k, &Point::from_ints(&[1, 0])).unwrap(),
            rat(1, 2)
        );
        assert!(matches!(
            gauge_norm(&k, &Point::from_ints(&[1, 1])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn norm_body_validation_rejects_asymmetric() {
        let k = convex_hull_centered(&pts(&[&[1, 1], &[2, 1], &[1, 2], &[-1, -1]])).unwrap();
        assert!(matches!(validate_norm_body(&k), Err(Error::InvalidBody(_))));
    }

    #[test]
    fn distance_keys() {
        let e = Norm::<Rational>::Euclidean;
        let k = e
            .distance_key(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(k.0, rat(2, 1)); // squared

        let li = Norm::<Rational>::Linf;
        assert_eq!(
            li.distance_key(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap()
                .0,
            rat(1, 1)
        );

        let l1 = Norm::<Rational>::L1;
        assert_eq!(
            l1.distance_key(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap()
                .0,
            rat(2, 1)
        );

        let hex = Norm::gauge(body(&[
            &[1, 0],
            &[-1, 0],
            &[0, 1],
            &[0, -1],
            &[1, -1],
            &[-1, 1],
        ]))
        .unwrap();
        assert_eq!(
            hex.distance_key(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap()
                .0,
            rat(2, 1)
        );
    }

    #[test]
    fn distance_key_symmetry_and_zero() {
        let norms: Vec<Norm<Rational>> = vec![Norm::Euclidean, Norm::Linf, Norm::L1];
        let a = Point::from_ints(&[3, -2]);
        let b = Point::from_ints(&[-1, 5]);
        for n in &norms {
            assert_eq!(
                n.distance_key(&a, &b).unwrap(),
                n.distance_key(&b, &a).unwrap()
            );
            assert_eq!(n.distance_key(&a, &a).unwrap().0, rat(0, 1));
        }
    }

    #[test]
    fn difference_body_gauge_spans_unit_distances() {
        // Gauge of the difference body is at most 1 on every pairwise
        // difference, with equality somewhere.
        let cfg =
            PointConfiguration::<Rational>::from_ints(2, &[&[0, 0], &[3, 1], &[1, 4], &[2, 2]]);
        let db = difference_body(&cfg).unwrap();
        let mut saw_unit = false;
        for i in 0..cfg.len() {
            for j in 0..cfg.len() {
                if i == j {
                    continue;
                }
                let d = cfg.points()[i].sub(&cfg.points()[j]);
                let g = gauge_norm(&db, &d).unwrap();
                assert!(g <= rat(1, 1));
                if g == rat(1, 1) {
                    saw_unit = true;
                }
            }
        }
        assert!(saw_unit);
    }
}
