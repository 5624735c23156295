//! Exact rationals for the growth parameters.
//!
//! Thresholds such as `count >= 2 * alpha` or the floor in the correction
//! term must be decided exactly, so every parameter that comes from the user
//! is carried as a reduced fraction and only turned into a float for the log
//! domain.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigmath::ln_biguint;
use crate::error::Error;

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Integer part, rounding toward negative infinity.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract_part(&self) -> Rational {
        Rational(&self.0 - self.0.floor())
    }

    pub fn recip(&self) -> Rational {
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Natural logarithm; `self` must be positive.
    pub fn ln(&self) -> f64 {
        debug_assert!(self.is_positive());
        ln_biguint(self.numer().magnitude()) - ln_biguint(self.denom().magnitude())
    }

    pub fn to_f64(&self) -> f64 {
        match (self.numer().to_f64(), self.denom().to_f64()) {
            (Some(p), Some(q)) if p.is_finite() && q.is_finite() => p / q,
            _ => {
                let sign = if self.is_negative() { -1.0 } else { 1.0 };
                sign * (ln_biguint(self.numer().magnitude()) - ln_biguint(self.denom().magnitude()))
                    .exp()
            }
        }
    }

    /// Numerator magnitude and denominator; valid for non-negative values.
    pub(crate) fn to_biguint_parts(&self) -> (BigUint, BigUint) {
        debug_assert!(!self.is_negative());
        (
            self.numer().magnitude().clone(),
            self.denom().magnitude().clone(),
        )
    }

    pub fn cmp_integer(&self, n: usize) -> Ordering {
        self.0.cmp(&BigRational::from_integer(BigInt::from(n)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$tr::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(std::ops::$tr::$method(self.0, rhs.0))
            }
        }
        impl std::ops::$tr<usize> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: usize) -> Rational {
                Rational(std::ops::$tr::$method(
                    &self.0,
                    BigRational::from_integer(BigInt::from(rhs)),
                ))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl PartialEq<usize> for Rational {
    fn eq(&self, other: &usize) -> bool {
        self.cmp_integer(*other) == Ordering::Equal
    }
}

impl PartialOrd<usize> for Rational {
    fn partial_cmp(&self, other: &usize) -> Option<Ordering> {
        Some(self.cmp_integer(*other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p/q"` or `"p"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::Parse {
            what: "rational",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| err("bad numerator"))?;
        let q: BigInt = q.parse().map_err(|_| err("bad denominator"))?;
        if q.is_zero() {
            return Err(err("zero denominator"));
        }
        if q.sign() == Sign::Minus {
            return Ok(Rational::new(-p, -q));
        }
        Ok(Rational::new(p, q))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
