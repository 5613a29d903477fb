//! Exact scalars: Q, Q(√3) and Q(ζ₁₂) = Q(√3)(i).

mod cyclotomic;
mod rational;
mod real;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::DeserializeOwned;
use serde::Serialize;

pub use cyclotomic::Scalar;
pub use rational::Rational;
pub use real::RealScalar;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_i64(n: i64) -> Sign {
        match n.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// A field of exact scalars.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        let r = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * r)
    }
}

/// Fields with an exact ordering compatible with the real embedding.
pub trait OrderedField: Field {
    fn sign(&self) -> Sign;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl OrderedField for Rational {
    fn sign(&self) -> Sign {
        Rational::sign(self)
    }
}

/// Sign of a + b√3, decided without leaving the integers.
pub fn real_sign(x: &RealScalar) -> Sign {
    x.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_multiplication_table() {
        use Sign::*;
        assert_eq!(Negative * Negative, Positive);
        assert_eq!(Negative * Positive, Negative);
        assert_eq!(Zero * Negative, Zero);
    }

    #[test]
    fn checked_div_reports_zero_divisor() {
        let one = Rational::one();
        assert!(matches!(
            one.checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(
            Rational::from_integer(3).checked_div(&Rational::from_integer(6)).unwrap(),
            Rational::new(1, 2)
        );
    }
}
