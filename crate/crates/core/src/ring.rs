//! Exact scalars and the coefficient-ring abstraction shared by every
//! polynomial type in the crate.
//!
//! Elements carry whatever context they need (a truncated graded ring carries
//! its base model), so a single value can produce the zero and one of its own
//! ring. Nothing here ever rounds.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative Q-algebra element that knows its own ring.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    /// Zero of the ring `self` lives in.
    fn zero_like(&self) -> Self;
    /// One of the ring `self` lives in.
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
}

/// `p/q` as a rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

/// `1/m!`, with the convention `1/m! = 0` for negative `m`.
pub fn falling_factorial_inverse(m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::one(), BigInt::from(factorial(m as u64)))
}

/// Vandermonde product `∏_{i<j} (a_i - a_j)` of integers.
pub fn vandermonde_of_ints(a: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            acc *= BigInt::from(a[i] - a[j]);
        }
    }
    acc
}

/// Integer value of a rational, if it is one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Small integer value of a rational, if it is one and fits.
pub fn as_small_integer(q: &Rational) -> Option<i64> {
    as_integer(q).and_then(|z| z.to_i64())
}

pub fn is_nonnegative_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_factorials() {
        assert_eq!(falling_factorial_inverse(0), int(1));
        assert_eq!(falling_factorial_inverse(4), rat(1, 24));
        assert_eq!(falling_factorial_inverse(-3), int(0));
        assert_eq!(falling_factorial_inverse(-1), int(0));
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Coeff::pow(&rat(2, 3), 5), rat(32, 243));
        assert_eq!(Coeff::pow(&rat(2, 3), 0), int(1));
    }

    #[test]
    fn vandermonde_ints() {
        assert_eq!(vandermonde_of_ints(&[3, 1, 0]), BigInt::from(6));
        assert_eq!(vandermonde_of_ints(&[1, 1]), BigInt::zero());
        assert_eq!(vandermonde_of_ints(&[5]), BigInt::one());
    }
}
