//! Exact scalar arithmetic.
//!
//! Three coefficient domains are used throughout the crate:
//!
//! - [`BigRat`]: arbitrary-precision rationals, used once the coupling has
//!   been fixed to a rational value;
//! - [`BetaPoly`]: polynomials in the coupling `β` over the rationals;
//! - [`BetaRatFunc`]: the fraction field `ℚ(β)`, always kept reduced with a
//!   monic denominator so that pole detection is sound.
//!
//! Polynomial code is generic over the [`Scalar`] trait so the same operator
//! implementations run symbolically and at a specialized coupling.

mod betapoly;
mod ratfunc;

pub use betapoly::BetaPoly;
pub use ratfunc::{BetaRatFunc, PoleError};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Debug;

/// Arbitrary-precision rational number, always in lowest terms.
pub type BigRat = BigRational;

/// Error raised when decoding coefficients from JSON.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed coefficient: {0}")]
pub struct CoeffDecodeError(pub String);

/// A commutative ring containing `ℚ`, used as the coefficient domain of
/// polynomials. All arithmetic is by reference and exact.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &BigRat) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&BigRat::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale_int(&self, v: i64) -> Self {
        self.mul(&Self::from_int(v))
    }

    /// JSON encoding used by the polynomial file formats.
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, CoeffDecodeError>;
}

impl Scalar for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &BigRat) -> Self {
        q.clone()
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(RatJson::from(self)).expect("rational serializes")
    }
    fn from_json(v: &Value) -> Result<Self, CoeffDecodeError> {
        let r: RatJson = serde_json::from_value(v.clone()).map_err(|e| CoeffDecodeError(e.to_string()))?;
        r.to_rat()
    }
}

/// Wire form of a rational: decimal strings of arbitrary length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRat> for RatJson {
    fn from(q: &BigRat) -> Self {
        RatJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl RatJson {
    pub fn to_rat(&self) -> Result<BigRat, CoeffDecodeError> {
        let num: BigInt = self
            .num
            .trim()
            .parse()
            .map_err(|_| CoeffDecodeError(format!("bad numerator {:?}", self.num)))?;
        let den: BigInt = self
            .den
            .trim()
            .parse()
            .map_err(|_| CoeffDecodeError(format!("bad denominator {:?}", self.den)))?;
        if Zero::is_zero(&den) {
            return Err(CoeffDecodeError("zero denominator".into()));
        }
        Ok(BigRat::new(num, den))
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rat(s: &str) -> Result<BigRat, CoeffDecodeError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    RatJson {
        num: num.to_string(),
        den: den.to_string(),
    }
    .to_rat()
}

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// The specialized coupling `β(k,r) = −(r−1)/(k+1)`.
pub fn beta_kr(k: u32, r: u32) -> BigRat {
    rat(-(i64::from(r) - 1), i64::from(k) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_json_round_trip() {
        let q = rat(-123456789, 1000);
        let v = q.to_json();
        assert_eq!(v["num"], "-123456789");
        assert_eq!(v["den"], "1000");
        assert_eq!(BigRat::from_json(&v).unwrap(), q);
    }

    #[test]
    fn parse_fractions() {
        assert_eq!(parse_rat("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_kr(1, 2), rat(-1, 2));
        assert_eq!(beta_kr(2, 3), rat(-2, 3));
        assert_eq!(beta_kr(2, 5), rat(-4, 3));
    }
}
