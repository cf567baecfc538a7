//! Exact rational scalars.
//!
//! Every exact computation in this crate is carried out over arbitrary-precision
//! rationals. [`Rational`] is `num_rational::BigRational`, which keeps values in
//! lowest terms with a positive denominator after every operation; nothing in
//! this crate ever rounds.

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

/// `num / den` as an exact rational.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An integer as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient `C(n, k)` for non-negative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
