//! Exact-arithmetic toolkit for k-diametral, k-antipodal, and k-equidistant
//! point configurations in Minkowski spaces.
//!
//! A configuration is k-diametral when every k of its (labeled, possibly
//! repeated) points contain a pair at the configuration's diameter,
//! equivalently when its diameter graph has independence number at most k-1.
//! k-antipodal asks instead for a pair on distinct parallel supporting
//! hyperplanes of the convex hull, and k-equidistant for a pair at distance
//! exactly one. The crate builds the extremal examples for these properties,
//! verifies them with machine-checkable certificates, and searches small
//! families exhaustively.
//!
//! Everything is generic over [`scalar::Scalar`]: `BigRational` for exact
//! verdicts, `f64` for constructions with irrational coordinates. The
//! combinatorial decision paths (graph edges, LP pivots, hull orientation)
//! run on rationals whenever the input is rational.

pub mod antipodal;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod lp;
pub mod norm;
pub mod point;
pub mod polytope;
pub mod randcfg;
pub mod reference;
pub mod repro;
pub mod scalar;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Scalar, ScalarValue, DEFAULT_REL_TOL};

/// Exact scalar used on all certified decision paths.
pub type Rational = num_rational::BigRational;

pub type RatPoint = point::Point<Rational>;
pub type FloatPoint = point::Point<f64>;
pub type RatConfig = point::PointConfiguration<Rational>;
pub type FloatConfig = point::PointConfiguration<f64>;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    <Rational as Scalar>::from_ratio(num, den)
}
