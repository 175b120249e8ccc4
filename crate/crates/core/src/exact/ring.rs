use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;
/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Commutative ring with rational scalars.
///
/// Elements carry their own shape (truncation order, variable count), so
/// identities are built from an existing element with `zero_like`/`one_like`.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// Multiplicative inverse, if this element is a unit.
    fn try_inverse(&self) -> Option<Self>;
    /// Exact quotient `self / divisor`, if it exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        divisor.try_inverse().map(|inv| self.times(&inv))
    }

    fn is_unity(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r: Rational = s
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    Ok(r)
}

/// Canonical `num/den` text form (`num` alone for integers).
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value if `r` is integral.
pub fn as_integer(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * BigInt::from(k))
}
