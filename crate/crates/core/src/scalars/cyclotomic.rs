use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Field, Rational, RealScalar};

/// Element of Q(ζ) with ζ a primitive 12th root of unity, stored in the
/// basis {1, ζ, ζ², ζ³} modulo ζ⁴ = ζ² − 1.
///
/// The complex embedding is ζ = e^{iπ/6}, so ζ³ = i, ζ⁴ = ω is the
/// primitive cube root −½ + (√3/2)i and √3 = ζ + ζ¹¹ = 2ζ − ζ³.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 4]", into = "[Rational; 4]")]
pub struct Scalar {
    pub coeffs: [Rational; 4],
}

impl From<[Rational; 4]> for Scalar {
    fn from(coeffs: [Rational; 4]) -> Self {
        Scalar { coeffs }
    }
}

impl From<Scalar> for [Rational; 4] {
    fn from(x: Scalar) -> Self {
        x.coeffs
    }
}

impl From<RealScalar> for Scalar {
    fn from(x: RealScalar) -> Self {
        Scalar::from_parts(&x, &RealScalar::default())
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_ints([0, 0, 0, 0]).with_coeff(0, r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from(Rational::from_integer(n))
    }
}

impl Scalar {
    pub fn from_ints(c: [i64; 4]) -> Scalar {
        Scalar { coeffs: c.map(Rational::from_integer) }
    }

    fn with_coeff(mut self, k: usize, r: Rational) -> Scalar {
        self.coeffs[k] = r;
        self
    }

    pub fn zeta() -> Scalar {
        Scalar::from_ints([0, 1, 0, 0])
    }

    /// ζ⁴, the cube root of unity −½ + (√3/2)i.
    pub fn omega() -> Scalar {
        Scalar::from_ints([-1, 0, 1, 0])
    }

    pub fn i() -> Scalar {
        Scalar::from_ints([0, 0, 0, 1])
    }

    pub fn sqrt3() -> Scalar {
        Scalar::from_ints([0, 2, 0, -1])
    }

    /// Assemble re + im·i from two elements of Q(√3).
    pub fn from_parts(re: &RealScalar, im: &RealScalar) -> Scalar {
        let two = Rational::from_integer(2);
        Scalar {
            coeffs: [
                &re.a - &im.b,
                &two * &re.b,
                &two * &im.b,
                &im.a - &re.b,
            ],
        }
    }

    pub fn re(&self) -> RealScalar {
        let half = Rational::new(1, 2);
        let [c0, c1, c2, _] = &self.coeffs;
        RealScalar::new(c0 + &(c2 * &half), c1 * &half)
    }

    pub fn im(&self) -> RealScalar {
        let half = Rational::new(1, 2);
        let [_, c1, c2, c3] = &self.coeffs;
        RealScalar::new(&(c1 * &half) + c3, c2 * &half)
    }

    pub fn is_real(&self) -> bool {
        Field::is_zero(&self.im())
    }

    /// The real part, if the imaginary part vanishes.
    pub fn to_real(&self) -> Option<RealScalar> {
        self.is_real().then(|| self.re())
    }

    /// Complex conjugation ζ ↦ ζ¹¹.
    pub fn conjugate(&self) -> Scalar {
        Scalar::from_parts(&self.re(), &-self.im())
    }

    /// |x|² = x·x̄ as an element of Q(√3).
    pub fn abs_sq(&self) -> RealScalar {
        let (re, im) = (self.re(), self.im());
        &re * &re + &im * &im
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if Field::is_zero(&im) {
            write!(f, "{re}")
        } else if Field::is_zero(&re) {
            write!(f, "({im})i")
        } else {
            write!(f, "{re}+({im})i")
        }
    }
}

fn add(x: &Scalar, y: &Scalar) -> Scalar {
    Scalar {
        coeffs: std::array::from_fn(|k| &x.coeffs[k] + &y.coeffs[k]),
    }
}

fn sub(x: &Scalar, y: &Scalar) -> Scalar {
    Scalar {
        coeffs: std::array::from_fn(|k| &x.coeffs[k] - &y.coeffs[k]),
    }
}

fn mul(x: &Scalar, y: &Scalar) -> Scalar {
    let mut p: [Rational; 7] = Default::default();
    for (i, a) in x.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.coeffs.iter().enumerate() {
            if !b.is_zero() {
                p[i + j] += &(a * b);
            }
        }
    }
    // ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ, ζ⁶ = −1
    let [p0, p1, p2, p3, p4, p5, p6] = p;
    Scalar {
        coeffs: [p0 - &p4 - p6, p1 - &p5, p2 + p4, p3 + p5],
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn one() -> Self {
        Scalar::from_ints([1, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.abs_sq().inv()?;
        Some(self.conjugate() * Scalar::from(n))
    }
    fn from_rational(r: &Rational) -> Self {
        Scalar::from(r.clone())
    }
}
