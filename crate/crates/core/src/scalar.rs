//! Exact scalar types.
//!
//! Every distance and function value in this crate is an exact number. The
//! metric layer works over any [`Scalar`] (machine integers or rationals);
//! anything that halves values or solves linear systems additionally needs a
//! [`Field`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact, totally ordered number type.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact scalar represents i64")
    }
}

impl<T> Scalar for T where
    T: Clone + Ord + Hash + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// A [`Scalar`] whose division is exact.
pub trait Field: Scalar {
    fn half(&self) -> Self {
        self.clone() / Self::two()
    }
}

impl<I> Field for Ratio<I>
where
    I: Integer + Clone + Hash + Debug + Display + Signed + Send + Sync + 'static,
    Ratio<I>: Scalar,
{
}

/// Arbitrary precision rational, the default exact field.
pub type Rational = Ratio<BigInt>;

/// Rational with machine-word numerator and denominator.
pub type Rational64 = Ratio<i64>;

/// Parse `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Ratio::new(num, den))
}

/// Render an exact value the way it is parsed: `"p"` or `"p/q"`.
pub fn format_scalar<T: Display>(v: &T) -> String {
    v.to_string()
}

/// Serde adapter writing an exact value as its `"p/q"` string.
pub fn serialize_display<T: Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Exact conversion of an integer to the rational field.
pub fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` as a reduced rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3"), Some(rational(3)));
        assert_eq!(parse_rational(" 1/2 "), Some(ratio(1, 2)));
        assert_eq!(parse_rational("4/2"), Some(rational(2)));
        assert_eq!(parse_rational("-3/9"), Some(ratio(-1, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn display_matches_parse_format() {
        assert_eq!(format_scalar(&ratio(1, 2)), "1/2");
        assert_eq!(format_scalar(&rational(7)), "7");
        assert_eq!(ratio(3, 1).half(), ratio(3, 2));
    }
}
