//! Exact arithmetic foundation.
//!
//! [`Ring`] is the small interface the linear-algebra and continuant code is
//! generic over. It is implemented for [`BigInt`], [`Rational`],
//! [`MultiPoly`] and the univariate polynomials of the `chebyshev` module.

mod multipoly;

pub use multipoly::{Monomial, MultiPoly};
pub use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Exact rational number with positive, reduced denominator.
pub type Rational = BigRational;

/// Commutative ring with exact arithmetic.
///
/// Elements may need a context to build constants (the arity of a
/// multivariate polynomial); numeric rings use `()`.
pub trait Ring: Clone + PartialEq + Debug {
    type Ctx: Clone + PartialEq + Debug;

    /// Set when [`Ring::exact_div`] is implemented; determinants then use
    /// fraction-free elimination instead of Laplace expansion.
    const EXACT_DIVISION: bool = false;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, v: &BigInt) -> Self;

    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, _rhs: &Self) -> Option<Self> {
        None
    }

    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self {
        Self::from_int(ctx, &BigInt::from(v))
    }

    fn square(&self) -> Self {
        self.times(self)
    }
}

impl Ring for BigInt {
    type Ctx = ();
    const EXACT_DIVISION: bool = true;

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_int(_: &(), v: &BigInt) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let q = self / rhs;
        if &(&q * rhs) == self {
            Some(q)
        } else {
            None
        }
    }
}

impl Ring for Rational {
    type Ctx = ();
    const EXACT_DIVISION: bool = true;

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_int(_: &(), v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Parse a comma separated list of decimal integers, e.g. `5,2,2,2,1`.
pub fn parse_int_list(s: &str) -> crate::Result<Vec<BigInt>> {
    if s.is_empty() {
        return Err(crate::Error::InvalidArgument("empty values list".into()));
    }
    s.split(',')
        .map(|part| {
            part.parse::<BigInt>().map_err(|_| {
                crate::Error::InvalidArgument(format!("`{part}` is not a decimal integer"))
            })
        })
        .collect()
}

/// Convenience for tests and callers holding machine integers.
pub fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}
