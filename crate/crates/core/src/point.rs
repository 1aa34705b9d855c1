use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// A point in `R^dim`. Also used for direction vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<S>(pub Vec<S>);

impl<S: Scalar> Point<S> {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![S::zero(); dim])
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Point(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = S::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        let half = S::from_ratio(1, 2);
        self.add(other).scale(&half)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Coordinatewise lexicographic order, total thanks to `total_cmp`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }

    pub fn to_exact(&self) -> Point<Rational> {
        Point(self.0.iter().map(|c| c.to_exact()).collect())
    }
}

/// Ordered, labeled list of points; duplicates are permitted and meaningful
/// (a point of multiplicity m occupies m indices).
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<S> {
    dim: usize,
    points: Vec<Point<S>>,
}

impl<S: Scalar> PointConfiguration<S> {
    pub fn new(dim: usize, points: Vec<Point<S>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "dimension must be positive".into(),
            ));
        }
        if points.is_empty() {
            return Err(Error::DegenerateConfiguration(
                "configuration needs at least one point".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {} has {} coordinates, expected {}",
                    i,
                    p.dim(),
                    dim
                )));
            }
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn from_ints(dim: usize, coords: &[&[i64]]) -> Self {
        let points = coords.iter().map(|c| Point::from_ints(c)).collect();
        PointConfiguration::new(dim, points).expect("integer literal configuration")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Result<&Point<S>> {
        self.points.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.points.len(),
        })
    }

    /// Distinct points in first-occurrence order, with their multiplicities
    /// and the index of the first occurrence.
    pub fn distinct_points(&self) -> Vec<(Point<S>, usize, usize)> {
        let mut out: Vec<(Point<S>, usize, usize)> = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            match out.iter_mut().find(|(q, _, _)| q == p) {
                Some((_, mult, _)) => *mult += 1,
                None => out.push((p.clone(), 1, i)),
            }
        }
        out
    }

    pub fn all_points_equal(&self) -> bool {
        self.points.iter().all(|p| p == &self.points[0])
    }

    /// Restriction to a subset of indices, preserving order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let mut points = Vec::with_capacity(indices.len());
        for &i in indices {
            points.push(self.point(i)?.clone());
        }
        PointConfiguration::new(self.dim, points)
    }

    pub fn to_exact(&self) -> PointConfiguration<Rational> {
        PointConfiguration {
            dim: self.dim,
            points: self.points.iter().map(|p| p.to_exact()).collect(),
        }
    }
}

/// A configuration in either numeric mode, for code that handles both
/// (construction tables, CLI I/O).
#[derive(Clone, Debug, PartialEq)]
pub enum AnyConfig {
    Exact(PointConfiguration<Rational>),
    Float(PointConfiguration<f64>),
}

impl AnyConfig {
    pub fn dim(&self) -> usize {
        match self {
            AnyConfig::Exact(c) => c.dim(),
            AnyConfig::Float(c) => c.dim(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyConfig::Exact(c) => c.len(),
            AnyConfig::Float(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn rejects_mixed_dimensions() {
        let pts = vec![Point::<f64>(vec![0.0, 0.0]), Point(vec![1.0])];
        assert!(matches!(
            PointConfiguration::new(2, pts),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn multiplicities_are_tracked() {
        let cfg = PointConfiguration::from_ints(2, &[&[0, 0], &[1, 0], &[0, 0], &[0, 0]]);
        let distinct: Vec<(Point<Rational>, usize, usize)> = cfg.distinct_points();
        assert_eq!(distinct.len(), 2);
        assert_eq!(distinct[0].1, 3);
        assert_eq!(distinct[0].2, 0);
        assert_eq!(distinct[1].1, 1);
        assert_eq!(distinct[1].2, 1);
    }

    #[test]
    fn lex_order_is_coordinatewise() {
        let a: Point<Rational> = Point(vec![rat(0, 1), rat(1, 1)]);
        let b: Point<Rational> = Point(vec![rat(0, 1), rat(3, 2)]);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }
}
