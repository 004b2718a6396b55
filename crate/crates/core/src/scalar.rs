//! Scalar coefficients: exact arbitrary-precision rationals or approximate f64.
//!
//! Values of the two kinds never mix inside one computation; the public
//! algebra operations check kinds up front and the arithmetic below treats a
//! mixed operation as a bug.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Which coefficient arithmetic a value uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Exact,
    Approx,
}

/// A single coefficient: exact rational or double-precision real.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Approx(f64),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Exact(_) => ScalarKind::Exact,
            Scalar::Approx(_) => ScalarKind::Approx,
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Exact => Scalar::Exact(Rational::zero()),
            ScalarKind::Approx => Scalar::Approx(0.0),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Exact => Scalar::Exact(Rational::one()),
            ScalarKind::Approx => Scalar::Approx(1.0),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::Exact(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Approx(v) => *v == 0.0,
        }
    }

    /// The exact rational payload; panics on the approximate kind.
    pub fn as_rational(&self) -> &Rational {
        match self {
            Scalar::Exact(r) => r,
            Scalar::Approx(_) => panic!("expected exact scalar"),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Approx(v) => *v,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Approx(v) => Scalar::Approx(v.abs()),
        }
    }

    fn same_kind(&self, other: &Scalar) -> bool {
        self.kind() == other.kind()
    }
}

/// Convert a rational to f64 without overflowing on huge numerators:
/// falls back to a quotient of the parts when direct conversion fails.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        return v;
    }
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// Exact rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// k! as an exact rational.
pub fn factorial(k: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert!(self.same_kind(&rhs), "scalar kind mismatch");
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            (Scalar::Approx(a), Scalar::Approx(b)) => Scalar::Approx(a + b),
            _ => unreachable!(),
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        let lhs = std::mem::replace(self, Scalar::Approx(0.0));
        *self = lhs + rhs;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Approx(v) => Scalar::Approx(-v),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert!(self.same_kind(&rhs), "scalar kind mismatch");
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            (Scalar::Approx(a), Scalar::Approx(b)) => Scalar::Approx(a * b),
            _ => unreachable!(),
        }
    }
}

impl Mul<i64> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: i64) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r * rat(rhs)),
            Scalar::Approx(v) => Scalar::Approx(v * rhs as f64),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Approx(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Approx(v) => write!(f, "{v}"),
        }
    }
}
