//! Exact rational scalars.
//!
//! Every possibility degree, probability mass and payoff in this crate is a
//! `Rational`: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. There is no floating point on any value path; the
//! only decimal output is [`Rational::decimal`], which rounds explicitly in
//! integer arithmetic.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds `numer/denom`. Panics on a zero denominator; intended for
    /// literals in code and tests.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
        if a <= b {
            a
        } else {
            b
        }
    }

    pub fn max_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
        if a >= b {
            a
        } else {
            b
        }
    }

    /// Decimal approximation with `sig` significant digits, computed in
    /// exact integer arithmetic (round half away from zero), trailing
    /// zeros stripped. `sig` must be at least 1.
    pub fn decimal(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.0.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let a = self.0.numer().abs();
        let b = self.0.denom().clone();

        // Compare a/b with 10^k exactly.
        let cmp_pow10 = |k: i64| -> std::cmp::Ordering {
            if k >= 0 {
                a.cmp(&(&b * BigInt::from(10u32).pow(k as u32)))
            } else {
                (&a * BigInt::from(10u32).pow((-k) as u32)).cmp(&b)
            }
        };

        // Smallest d with a/b < 10^d, so the value has d digits before the
        // decimal point (d <= 0 means leading zeros after "0.").
        let mut d: i64 = 0;
        while cmp_pow10(d) != std::cmp::Ordering::Less {
            d += 1;
        }
        while cmp_pow10(d - 1) == std::cmp::Ordering::Less {
            d -= 1;
        }

        // digits = round(a/b * 10^(sig - d)), an integer with `sig` digits.
        let shift = sig as i64 - d;
        let (num, den) = if shift >= 0 {
            (&a * BigInt::from(10u32).pow(shift as u32), b)
        } else {
            (a.clone(), &b * BigInt::from(10u32).pow((-shift) as u32))
        };
        let mut digits = &num / &den;
        let rem = &num % &den;
        if &rem * BigInt::from(2) >= den {
            digits += 1;
        }
        let bound = BigInt::from(10u32).pow(sig);
        if digits == bound {
            digits /= 10;
            d += 1;
        }

        let ds = digits.to_string();
        debug_assert_eq!(ds.len(), sig as usize);
        let mut out = if d <= 0 {
            format!("0.{}{}", "0".repeat((-d) as usize), ds)
        } else if (d as usize) < sig as usize {
            format!("{}.{}", &ds[..d as usize], &ds[d as usize..])
        } else {
            format!("{}{}", ds, "0".repeat(d as usize - sig as usize))
        };
        if out.contains('.') {
            out = out.trim_end_matches('0').trim_end_matches('.').to_string();
        }
        if neg {
            format!("-{out}")
        } else {
            out
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `-?\d+`, `-?\d+.\d+` and `-?\d+/\d+`; the decimal form is
    /// expanded exactly ("0.95" becomes 19/20).
    fn from_str(s: &str) -> Result<Self, Error> {
        let fail = || Error::ParseRational {
            token: s.to_string(),
        };
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());

        let value = if let Some((num, den)) = body.split_once('/') {
            if !all_digits(num) || !all_digits(den) {
                return Err(fail());
            }
            let den: BigInt = den.parse().map_err(|_| fail())?;
            if den.is_zero() {
                return Err(fail());
            }
            BigRational::new(num.parse().map_err(|_| fail())?, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            if !all_digits(int) || !all_digits(frac) {
                return Err(fail());
            }
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let int: BigInt = int.parse().map_err(|_| fail())?;
            let frac: BigInt = frac.parse().map_err(|_| fail())?;
            BigRational::new(int * &scale + frac, scale)
        } else {
            if !all_digits(body) {
                return Err(fail());
            }
            BigRational::from_integer(body.parse().map_err(|_| fail())?)
        };
        Ok(Rational(if neg { -value } else { value }))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for v in iter {
            acc += v;
        }
        acc
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for v in iter {
            acc += &v;
        }
        acc
    }
}
