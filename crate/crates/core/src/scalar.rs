//! Scalar abstraction shared by the exact and the floating point pipelines.
//!
//! Every geometric routine in this crate is generic over [`Scalar`]. The two
//! implementations are `BigRational` (exact, used whenever a verdict must be
//! certified) and `f64` (used for constructions whose coordinates are
//! irrational, with a pinned relative tolerance for distance comparisons).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Relative tolerance used by the float pipeline when two distance keys are
/// compared for equality. Pinned here so every caller agrees on it.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Field operations plus the comparisons the geometry code needs.
///
/// `PartialOrd` is required but `total_cmp` is what the algorithms call: for
/// rationals it is the exact order, for floats it is `f64::total_cmp`. None of
/// the code paths feed NaN into comparisons; `total_cmp` exists so sorting is
/// still deterministic if one ever appears while debugging.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialOrd + Signed + 'static {
    /// True when arithmetic is exact and equality comparisons are reliable.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact conversion to a rational. Lossless for both implementations
    /// (every finite f64 is rational).
    fn to_exact(&self) -> BigRational;

    fn total_cmp(&self, other: &Self) -> Ordering;

    /// Equality up to `rel_tol`, relative to the larger magnitude. Exact
    /// scalars ignore the tolerance.
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool;

    /// Type-erased value for labels and serialization.
    fn erase(&self) -> ScalarValue;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational out of f64 range")
    }

    fn to_exact(&self) -> BigRational {
        self.clone()
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn approx_eq(&self, other: &Self, _rel_tol: f64) -> bool {
        self == other
    }

    fn erase(&self) -> ScalarValue {
        ScalarValue::Exact(self.clone())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_exact(&self) -> BigRational {
        BigRational::from_f64(*self).expect("non-finite float has no exact form")
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        f64::total_cmp(self, other)
    }

    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self == other {
            return true;
        }
        let scale = self.abs().max(other.abs());
        (self - other).abs() <= rel_tol * scale
    }

    fn erase(&self) -> ScalarValue {
        ScalarValue::Approx(*self)
    }
}

/// A scalar with its numeric mode erased. Used for report labels such as the
/// diameter key, where exact and float pipelines meet.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarValue {
    Exact(BigRational),
    Approx(f64),
}

impl ScalarValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarValue::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ScalarValue::Exact(r) => Scalar::to_f64(r),
            ScalarValue::Approx(x) => *x,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ScalarValue::Exact(r) => serde_json::Value::String(format_rational(r)),
            ScalarValue::Approx(x) => serde_json::json!(x),
        }
    }
}

impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarValue::Exact(r) => write!(f, "{}", format_rational(r)),
            ScalarValue::Approx(x) => write!(f, "{}", x),
        }
    }
}

/// Canonical string form of a rational: `"p/q"` in lowest terms, or just
/// `"p"` when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical rational form: an optionally signed integer, or
/// `"p/q"` with a nonzero integer denominator.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer {:?} in rational {:?}", num_str, s))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| format!("invalid integer {:?} in rational {:?}", den_str, s))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational {:?}", s));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_round_trip() {
        for (s, canon) in [
            ("1/3", "1/3"),
            ("4/2", "2"),
            ("-6/4", "-3/2"),
            ("0", "0"),
            ("7", "7"),
        ] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), canon);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn rational_parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/3").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn float_to_exact_is_lossless() {
        for x in [0.1, -3.75, 1e-9, 12345.6789] {
            let r = Scalar::to_exact(&x);
            assert_eq!(Scalar::to_f64(&r), x);
        }
    }

    #[test]
    fn approx_eq_is_relative() {
        assert!(1.0f64.approx_eq(&(1.0 + 1e-12), DEFAULT_REL_TOL));
        assert!(!1.0f64.approx_eq(&(1.0 + 1e-6), DEFAULT_REL_TOL));
        // Exact scalars ignore the tolerance entirely.
        assert!(!rat(1, 1).approx_eq(&rat(1000000001, 1000000000), 1e-3));
        assert!(0.0f64.approx_eq(&0.0, DEFAULT_REL_TOL));
    }

    #[test]
    fn from_ratio_agrees_across_modes() {
        let r = <BigRational as Scalar>::from_ratio(-7, 4);
        let f = <f64 as Scalar>::from_ratio(-7, 4);
        assert_eq!(Scalar::to_f64(&r), f);
    }
}
