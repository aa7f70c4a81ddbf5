//! Exact arithmetic layer.

mod combinatorics;
mod poly;

pub use combinatorics::{
    binomial, factorial, falling_product, gcd_list, stirling2, stirling2_oracle,
};
pub use poly::{exp_minus_one, exp_minus_one_pow, trunc_mul, TruncPoly};

use num_bigint::BigInt;
use num_traits::One;

/// Reduced rational with arbitrary-precision numerator and positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> BigRat {
    BigRat::new(numer.into(), denom.into())
}

pub fn rat_int(value: impl Into<BigInt>) -> BigRat {
    BigRat::from_integer(value.into())
}

/// `1 / n!`
pub fn inv_factorial(n: u32) -> BigRat {
    BigRat::new(BigInt::one(), factorial(n))
}
