//! The commutative-ring abstraction every container in this crate is generic over.
//!
//! Elements are plain immutable values; all operations are pure and exact.
//! `inv` returns `None` for non-units, which is how local rings (truncated
//! polynomial rings, graded quotients) advertise which divisions are legal.

use std::fmt::{Debug, Display};

use num::{BigInt, BigRational};

/// A commutative ring with exact arithmetic and a canonical map from the integers.
pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, or `None` when `self` is not a unit.
    fn inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }

    fn one() -> Self {
        BigInt::from(1)
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if num::Signed::abs(self) == BigInt::from(1) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if num::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    debug_assert!(num::Zero::is_zero(&r));
    q
}

/// Exact integer quotient; the caller guarantees divisibility.
pub fn div_exact(num: &BigInt, den: &BigInt) -> crate::error::Result<BigInt> {
    let (q, r) = num::Integer::div_rem(num, den);
    if num::Zero::is_zero(&r) {
        Ok(q)
    } else {
        Err(crate::error::Error::InexactDivision {
            remainder: format!("{r} (dividing {num} by {den})"),
        })
    }
}

/// True when the rational is an integer, i.e. has denominator 1.
pub fn is_integral(q: &BigRational) -> bool {
    q.is_integer()
}

/// Signed-aware integer extraction for rationals with denominator 1.
pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    if is_integral(q) {
        Some(q.numer().clone())
    } else {
        None
    }
}
