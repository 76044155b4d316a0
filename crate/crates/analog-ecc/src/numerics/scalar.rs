use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator (the underlying representation reduces on construction).
pub type Rational = num_rational::BigRational;

/// The scalar field a computation runs in: either binary64 floats or exact
/// rationals. The type parameter is the mode tag; a pipeline instantiated at
/// `f64` can never mix values with one instantiated at [`Rational`].
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic carries no rounding error; zero tests are then strict.
    const EXACT: bool;

    /// Short mode name used in reports ("float" / "rational").
    const MODE: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Convert a finite binary64 value. Exact in rational mode (every finite
    /// float is a dyadic rational), identity in float mode.
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Absolute pivot tolerance: 1e-9 in float mode, exact zero in rational mode.
    fn pivot_tol() -> Self;

    /// |self| <= pivot tolerance. In rational mode this is an exact zero test.
    fn is_negligible(&self) -> bool {
        self.abs() <= Self::pivot_tol()
    }

    /// JSON form: a number in float mode, a `"p/q"` string in rational mode.
    fn to_json(&self) -> Value;

    /// Parse the JSON form. Rational mode additionally accepts plain JSON
    /// numbers (converted exactly).
    fn from_json(v: &Value) -> Result<Self>;

    /// Full-precision text form: 17 significant digits for floats, `p/q` for
    /// rationals. Used wherever reports must be reproducible byte-for-byte.
    fn display_full(&self) -> String;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const MODE: &'static str = "float";

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn pivot_tol() -> Self {
        1e-9
    }

    fn to_json(&self) -> Value {
        serde_json::json!(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_f64()
            .ok_or_else(|| Error::Parse(format!("expected a number, got {v}")))
    }

    fn display_full(&self) -> String {
        format!("{:.16e}", self)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const MODE: &'static str = "rational";

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(v: f64) -> Self {
        Rational::from_float(v).expect("finite float required for exact conversion")
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn pivot_tol() -> Self {
        <Rational as Zero>::zero()
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Rational::from_str(s)
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Self::from_int(i))
                } else if let Some(f) = n.as_f64() {
                    Ok(Self::from_f64(f))
                } else {
                    Err(Error::Parse(format!("unrepresentable number {n}")))
                }
            }
            other => Err(Error::Parse(format!(
                "expected a \"p/q\" string or number, got {other}"
            ))),
        }
    }

    fn display_full(&self) -> String {
        self.to_string()
    }
}

/// A nonnegative quantity that may be infinite: heights and thresholds of
/// minimum-distance-1 codes are genuinely `+inf`, not an error.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedScalar<S> {
    Finite(S),
    Infinite,
}

impl<S: Scalar> ExtendedScalar<S> {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedScalar::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&S> {
        match self {
            ExtendedScalar::Finite(s) => Some(s),
            ExtendedScalar::Infinite => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedScalar::Finite(s) => s.to_f64(),
            ExtendedScalar::Infinite => f64::INFINITY,
        }
    }

    /// Apply `f` to the finite value; infinity propagates.
    pub fn map(self, f: impl FnOnce(S) -> S) -> Self {
        match self {
            ExtendedScalar::Finite(s) => ExtendedScalar::Finite(f(s)),
            ExtendedScalar::Infinite => ExtendedScalar::Infinite,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExtendedScalar::Finite(s) => s.to_json(),
            ExtendedScalar::Infinite => Value::String("inf".to_string()),
        }
    }

    pub fn display_full(&self) -> String {
        match self {
            ExtendedScalar::Finite(s) => s.display_full(),
            ExtendedScalar::Infinite => "inf".to_string(),
        }
    }
}

impl<S: Scalar> PartialOrd for ExtendedScalar<S> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use ExtendedScalar::*;
        match (self, other) {
            (Infinite, Infinite) => Some(std::cmp::Ordering::Equal),
            (Infinite, Finite(_)) => Some(std::cmp::Ordering::Greater),
            (Finite(_), Infinite) => Some(std::cmp::Ordering::Less),
            (Finite(a), Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl<S: Scalar> fmt::Display for ExtendedScalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::Finite(s) => write!(f, "{s}"),
            ExtendedScalar::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms_positive_denominator() {
        let r = Rational::from_ratio(6, -4);
        assert_eq!(r, Rational::from_ratio(-3, 2));
        assert!(r.denom() > &BigInt::from(0));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn dyadic_conversion_is_exact() {
        let f = 0.1f64;
        let r = <Rational as Scalar>::from_f64(f);
        assert_eq!(r.to_f64(), f);
        // 0.1 is not 1/10 in binary64; the conversion must preserve the float.
        assert_ne!(r, Rational::from_ratio(1, 10));
    }

    #[test]
    fn json_round_trip_both_modes() {
        let x = 2.5f64;
        assert_eq!(f64::from_json(&x.to_json()).unwrap(), x);
        let q = Rational::from_ratio(7, 3);
        assert_eq!(Rational::from_json(&q.to_json()).unwrap(), q);
        // rational mode accepts plain integers
        assert_eq!(
            Rational::from_json(&serde_json::json!(4)).unwrap(),
            Rational::from_int(4)
        );
    }

    #[test]
    fn extended_ordering() {
        let inf: ExtendedScalar<f64> = ExtendedScalar::Infinite;
        let one = ExtendedScalar::Finite(1.0);
        assert!(inf > one);
        assert_eq!(inf.to_f64(), f64::INFINITY);
        assert_eq!(one.to_f64(), 1.0);
    }
}
