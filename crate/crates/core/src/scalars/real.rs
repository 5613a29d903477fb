use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Field, OrderedField, Rational, Sign};

/// a + b√3 in Q(√3).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct RealScalar {
    pub a: Rational,
    pub b: Rational,
}

impl From<[Rational; 2]> for RealScalar {
    fn from([a, b]: [Rational; 2]) -> Self {
        RealScalar { a, b }
    }
}

impl From<RealScalar> for [Rational; 2] {
    fn from(x: RealScalar) -> Self {
        [x.a, x.b]
    }
}

impl From<Rational> for RealScalar {
    fn from(a: Rational) -> Self {
        RealScalar { a, b: Rational::zero() }
    }
}

impl From<i64> for RealScalar {
    fn from(n: i64) -> Self {
        RealScalar::from(Rational::from_integer(n))
    }
}

impl RealScalar {
    pub fn new(a: Rational, b: Rational) -> RealScalar {
        RealScalar { a, b }
    }

    pub fn sqrt3() -> RealScalar {
        RealScalar { a: Rational::zero(), b: Rational::one() }
    }

    /// Galois conjugate a − b√3.
    pub fn galois(&self) -> RealScalar {
        RealScalar { a: self.a.clone(), b: -&self.b }
    }

    /// a² − 3b², the field norm down to Q.
    pub fn norm(&self) -> Rational {
        self.a.square() - Rational::from_integer(3) * self.b.square()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sa == sb || sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero {
            return sb;
        }
        // Opposite signs: the larger of a² and 3b² wins.
        let a2 = self.a.square();
        let b2 = Rational::from_integer(3) * self.b.square();
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }
}

impl fmt::Debug for RealScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RealScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√3", self.b)
        } else {
            write!(f, "{}+{}√3", self.a, self.b)
        }
    }
}

fn add(x: &RealScalar, y: &RealScalar) -> RealScalar {
    RealScalar { a: &x.a + &y.a, b: &x.b + &y.b }
}

fn sub(x: &RealScalar, y: &RealScalar) -> RealScalar {
    RealScalar { a: &x.a - &y.a, b: &x.b - &y.b }
}

fn mul(x: &RealScalar, y: &RealScalar) -> RealScalar {
    if x.b.is_zero() && y.b.is_zero() {
        return RealScalar::from(&x.a * &y.a);
    }
    let three = Rational::from_integer(3);
    RealScalar {
        a: &x.a * &y.a + three * (&x.b * &y.b),
        b: &x.a * &y.b + &x.b * &y.a,
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<&RealScalar> for &RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: &RealScalar) -> RealScalar {
                $f(self, rhs)
            }
        }
        impl $tr<RealScalar> for RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: RealScalar) -> RealScalar {
                $f(&self, &rhs)
            }
        }
        impl $tr<&RealScalar> for RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: &RealScalar) -> RealScalar {
                $f(&self, rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        RealScalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        RealScalar { a: -&self.a, b: -&self.b }
    }
}

impl Field for RealScalar {
    fn zero() -> Self {
        RealScalar::default()
    }
    fn one() -> Self {
        RealScalar::from(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let n = self.norm().recip()?;
        let g = self.galois();
        Some(RealScalar { a: &g.a * &n, b: &g.b * &n })
    }
    fn from_rational(r: &Rational) -> Self {
        RealScalar::from(r.clone())
    }
}

impl OrderedField for RealScalar {
    fn sign(&self) -> Sign {
        RealScalar::sign(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(a: i64, b: i64) -> RealScalar {
        RealScalar::new(Rational::from_integer(a), Rational::from_integer(b))
    }

    #[test]
    fn signs_near_zero() {
        assert_eq!(rs(0, 0).sign(), Sign::Zero);
        assert_eq!(rs(2, -1).sign(), Sign::Positive);
        assert_eq!(rs(1, -1).sign(), Sign::Negative);
        assert_eq!(rs(-2, 1).sign(), Sign::Negative);
        // 97² = 9409 > 3·56² = 9408
        assert_eq!(rs(97, -56).sign(), Sign::Positive);
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let s = RealScalar::sqrt3();
        assert_eq!(&s * &s, rs(3, 0));
    }

    #[test]
    fn inverse_of_unit() {
        let x = rs(2, 1);
        assert_eq!(x.inv().unwrap(), rs(2, -1));
        assert!(rs(0, 0).inv().is_none());
    }

    #[test]
    fn json_is_a_pair() {
        let s = serde_json::to_string(&rs(1, -2)).unwrap();
        assert_eq!(s, "[[1,1],[-2,1]]");
        let back: RealScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rs(1, -2));
    }

    fn arb() -> impl Strategy<Value = RealScalar> {
        (-50i64..50, 1i64..8, -50i64..50, 1i64..8)
            .prop_map(|(a, da, b, db)| RealScalar::new(Rational::new(a, da), Rational::new(b, db)))
    }

    proptest! {
        #[test]
        fn sign_is_multiplicative(x in arb(), y in arb()) {
            prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
        }

        #[test]
        fn sign_agrees_with_floats_away_from_zero(x in arb()) {
            let f = x.a.to_i64_pair().map(|(n, d)| n as f64 / d as f64).unwrap()
                + x.b.to_i64_pair().map(|(n, d)| n as f64 / d as f64).unwrap() * 3f64.sqrt();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.sign() == Sign::Positive, f > 0.0);
            }
        }

        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if let Some(xi) = x.inv() {
                prop_assert_eq!(&x * &xi, RealScalar::one());
            }
        }
    }
}
