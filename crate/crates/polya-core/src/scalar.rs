//! Arbitrary-precision real scalars backed by MPFR.
//!
//! Every value carries its own mantissa precision in bits. Binary operations
//! allocate the result at the larger of the two operand precisions, so
//! precision is never silently lost; promoting a value to higher precision is
//! exact.

use std::cmp::Ordering;
use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};

/// Default working precision in mantissa bits.
pub const DEFAULT_PREC: u32 = 256;
/// Smallest supported precision.
pub const MIN_PREC: u32 = 64;

/// An arbitrary-precision real number.
#[derive(Clone)]
pub struct Scalar(Float);

fn clamp_prec(prec: u32) -> u32 {
    prec.max(MIN_PREC)
}

impl Scalar {
    pub fn zero(prec: u32) -> Self {
        Scalar(Float::new(clamp_prec(prec)))
    }

    pub fn one(prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), 1))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), v))
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), v))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), v))
    }

    /// Exact conversion from a big integer; the precision is raised as needed
    /// so no bits are dropped.
    pub fn from_integer(v: &Integer, prec: u32) -> Self {
        let need = v.significant_bits().max(1);
        let p = clamp_prec(prec).max(need);
        Scalar(Float::with_val(p, v))
    }

    /// Parse a decimal string directly at the target precision (one correctly
    /// rounded conversion, never an intermediate f64).
    pub fn parse(text: &str, prec: u32) -> Result<Self> {
        let inc = Float::parse(text.trim()).map_err(|_| Error::ParseNumber {
            text: text.to_owned(),
        })?;
        Ok(Scalar(Float::with_val(clamp_prec(prec), inc)))
    }

    pub fn pi(prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Copy at a new precision (exact when raising, rounded when lowering).
    pub fn to_prec(&self, prec: u32) -> Self {
        Scalar(Float::with_val(clamp_prec(prec), &self.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact integer value, when the scalar holds one.
    pub fn to_integer_exact(&self) -> Option<Integer> {
        if self.0.is_integer() {
            self.0.to_integer()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.clone().abs())
    }

    pub fn neg(&self) -> Self {
        Scalar(Float::with_val(self.prec(), -&self.0))
    }

    pub fn sqrt(&self) -> Self {
        Scalar(self.0.clone().sqrt())
    }

    /// k-th real root (k >= 1).
    pub fn root(&self, k: u32) -> Self {
        Scalar(self.0.clone().root(k))
    }

    pub fn ln(&self) -> Self {
        Scalar(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        Scalar(self.0.clone().exp())
    }

    pub fn cos(&self) -> Self {
        Scalar(self.0.clone().cos())
    }

    pub fn sin(&self) -> Self {
        Scalar(self.0.clone().sin())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.prec()));
        (Scalar(s), Scalar(c))
    }

    /// Two-argument arctangent; `self` is the ordinate.
    pub fn atan2(&self, x: &Self) -> Self {
        let p = self.prec().max(x.prec());
        Scalar(self.to_prec(p).0.atan2(&x.0))
    }

    pub fn hypot(&self, other: &Self) -> Self {
        let p = self.prec().max(other.prec());
        Scalar(self.to_prec(p).0.hypot(&other.0))
    }

    pub fn powi(&self, e: i32) -> Self {
        Scalar(self.0.clone().pow(e))
    }

    pub fn recip(&self) -> Self {
        Scalar(Float::with_val(self.prec(), self.0.recip_ref()))
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub(crate) fn as_float(&self) -> &Float {
        &self.0
    }

    pub(crate) fn from_float(f: Float) -> Self {
        Scalar(f)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let p = self.prec().max(rhs.prec());
                Scalar(Float::with_val(p, &self.0 $op &rhs.0))
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self) $op (&rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self) $op rhs
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl PartialEq<i64> for Scalar {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::LowerExp for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerExp::fmt(&self.0, f)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({:e}@{})", self.0, self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_propagates_upward() {
        let a = Scalar::from_i64(1, 64);
        let b = Scalar::from_i64(3, 320);
        assert_eq!((&a / &b).prec(), 320);
        assert_eq!((&b * &a).prec(), 320);
    }

    #[test]
    fn minimum_precision_enforced() {
        let a = Scalar::from_i64(7, 8);
        assert_eq!(a.prec(), MIN_PREC);
    }

    #[test]
    fn parse_decimal_string() {
        let x = Scalar::parse("0.5", 256).unwrap();
        assert_eq!(x, Scalar::from_f64(0.5, 256));
        assert!(Scalar::parse("not-a-number", 256).is_err());
        // 1e-12 parses at full precision, not through f64
        let tiny = Scalar::parse("1e-12", 256).unwrap();
        assert!(tiny > Scalar::zero(256));
    }

    #[test]
    fn integer_round_trip_is_exact() {
        let n = Integer::from(1_234_567_890_i64);
        let s = Scalar::from_integer(&n, 256);
        assert_eq!(s.to_integer_exact().unwrap(), n);
        // values wider than the requested precision get promoted, not rounded
        let big = Integer::from(Integer::factorial(200));
        let s = Scalar::from_integer(&big, 64);
        assert_eq!(s.to_integer_exact().unwrap(), big);
    }

    #[test]
    fn atan2_quadrants() {
        let p = 128;
        let pi = Scalar::pi(p);
        let y = Scalar::from_i64(1, p);
        let x = Scalar::from_i64(-1, p);
        let a = y.atan2(&x);
        let expected = &pi * &Scalar::from_f64(0.75, p);
        assert!((&a - &expected).abs().to_f64() < 1e-30);
    }
}
