//! Holomorphic Euler characteristics of line bundles on a ℂPⁿ-type ring, by
//! four independent routes, and the integer classification of the first
//! Chern class.
//!
//! The routes: the genus route `∫ e^{s·h} · e^{c₁/2} Â`, direct coefficient
//! extraction from `e^{sx} (x/(1-e^{-x}))^{n+1}`, the change-of-variables
//! route through `y = 1 - e^{-z}` realized as exact series composition, and
//! the falling-product closed form `C(n+s, n)`. All four agree exactly, and
//! that agreement is what the test suites pin down.

use crate::cohomology::CohClass;
use crate::genera::{pontryagin_cpn, todd_class, GenusError};
use crate::rational::{factorial, rat_int, Rational};
use crate::series::{SeriesError, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HrrError {
    #[error(
        "c1 multiple {lambda} has the wrong parity for dimension {n}: need lambda ≡ n+1 (mod 2)"
    )]
    ParityViolation { n: usize, lambda: i64 },
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A Riemann–Roch problem: dimension `n`, manifold Chern class `c₁ = λ·h`,
/// and bundle power `s` (the bundle has `c₁ = s·h`).
///
/// The parity `λ ≡ n+1 (mod 2)` is forced by the second Stiefel–Whitney
/// class and is checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HrrProblem {
    n: usize,
    lambda: i64,
    s: i64,
}

impl HrrProblem {
    pub fn new(n: usize, lambda: i64, s: i64) -> Result<Self, HrrError> {
        assert!(n >= 1);
        if (lambda - (n as i64 + 1)).rem_euclid(2) != 0 {
            return Err(HrrError::ParityViolation { n, lambda });
        }
        Ok(HrrProblem { n, lambda, s })
    }

    /// `χ(ℂPⁿ, 𝒪(s))`: the standard manifold `λ = n+1` twisted by `L^s`.
    pub fn fano(n: usize, s: i64) -> Self {
        HrrProblem {
            n,
            lambda: n as i64 + 1,
            s,
        }
    }

    /// `χ(M, 𝒪)` on the manifold with `c₁(M) = (n+1+2s)·h` and trivial
    /// bundle — the form in which the classification of `c₁` is probed.
    pub fn classified(n: usize, s: i64) -> Self {
        HrrProblem {
            n,
            lambda: n as i64 + 1 + 2 * s,
            s: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// The exponent that decides χ: writing the Todd factor as
    /// `e^{(n+1)h/2}·((h/2)/sinh(h/2))^{n+1}`, the integrand collects to
    /// `e^{(s + (λ-n-1)/2)h}` times that, so
    /// `χ = C(n + effective_twist, n)`.
    pub fn effective_twist(&self) -> i64 {
        self.s + (self.lambda - self.n as i64 - 1) / 2
    }
}

/// χ by the genus route: `∫ e^{s·h} · e^{c₁/2} Â(p)` with `p` the ℂPⁿ
/// Pontryagin class.
pub fn chi_genus_route(p: &HrrProblem) -> Result<Rational, HrrError> {
    let n = p.n;
    let c1 = CohClass::h(n).scale(&rat_int(p.lambda));
    let td = todd_class(&c1, &pontryagin_cpn(n))?;
    let twist = CohClass::h(n)
        .scale(&rat_int(p.s))
        .exp()
        .expect("s·h has zero constant term");
    Ok(twist.mul(&td).expect("equal dimensions").integrate())
}

/// χ as the coefficient of `xⁿ` in `e^{sx} (x/(1-e^{-x}))^{n+1}`, extracted
/// from exact truncated series.
pub fn chi_series_route(n: usize, s: i64) -> Rational {
    assert!(n >= 1);
    let todd = crate::series::todd_series(n);
    let twist = TruncatedSeries::x(n)
        .scale(&rat_int(s))
        .exp()
        .expect("s·x has zero constant term");
    let product = twist
        .mul(&todd.pow(n as u32 + 1))
        .expect("equal orders by construction");
    product
        .coefficient(n)
        .expect("coefficient n exists at order n")
        .clone()
}

/// χ by the falling-product closed form
/// `C(n+s, n) = (n+s)(n+s-1)⋯(s+1) / n!`, valid for negative `s`.
pub fn chi_closed_form(n: usize, s: i64) -> Rational {
    assert!(n >= 1);
    let numerator: BigInt = (1..=n as i64).map(|k| BigInt::from(s + k)).product();
    Rational::new(numerator, factorial(n as u64))
}

/// χ by the change of variables `y = 1 - e^{-z}`: the inverse substitution
/// `z = -log(1-y)` is composed into the coefficient extraction as exact
/// series arithmetic, leaving the coefficient of `yⁿ` in `(1-y)^{-s-1}`.
///
/// Concretely this expands the transformed integrand
/// `e^{s·z(y)} (z/(1-e^{-z}))^{n+1}(y) · (y/z(y))^{n+1} · z'(y)`
/// rather than assuming the cancellations that make it equal `(1-y)^{-s-1}`.
pub fn residue_route(n: usize, s: i64) -> Rational {
    assert!(n >= 1);
    let order = n + 1;
    let y = TruncatedSeries::x(order);
    let one = TruncatedSeries::one(order);

    // z(y) = -log(1-y); vanishes to first order, so every piece below exists.
    let zy = one.sub(&y).unwrap().log().unwrap().neg();

    // (z/(1-e^{-z})) composed with z(y)
    let one_minus_exp_neg = one.sub(&zy.neg().exp().unwrap()).unwrap();
    let todd_factor = zy.div_cancel(&one_minus_exp_neg).unwrap();

    // y/z(y) puts the z^{n+1} denominator of the coefficient extraction back
    let y_over_z = y.div_cancel(&zy).unwrap();

    let exp_factor = zy.scale(&rat_int(s)).exp().unwrap().truncated(n);
    let jacobian = zy.derivative();

    let integrand = exp_factor
        .mul(&todd_factor.pow(n as u32 + 1))
        .unwrap()
        .mul(&y_over_z.pow(n as u32 + 1))
        .unwrap()
        .mul(&jacobian)
        .unwrap();
    integrand.coefficient(n).unwrap().clone()
}

/// Result of classifying the possible `c₁(M) = λ·h`: the integer solutions
/// `s` of `(s+1)(s+2)⋯(s+n) = n!` and the corresponding `λ = n+1+2s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub s_values: Vec<i64>,
    pub lambda_values: Vec<i64>,
}

fn window_product(n: usize, s: i64) -> BigInt {
    (1..=n as i64).map(|k| BigInt::from(s + k)).product()
}

/// All integers `s` with `(s+1)⋯(s+n) = n!`: `{0}` for odd `n` and
/// `{0, -n-1}` for even `n`. The search window `[-n-2, 1]` is certified
/// exhaustive by [`certify_search_window`].
pub fn classify_c1(n: usize) -> Classification {
    assert!(n >= 1);
    let target = factorial(n as u64);
    let mut s_values: Vec<i64> = (-(n as i64) - 2..=1)
        .filter(|&s| window_product(n, s) == target)
        .collect();
    // largest (Fano) branch first
    s_values.sort_unstable_by(|a, b| b.cmp(a));
    let lambda_values = s_values.iter().map(|s| n as i64 + 1 + 2 * s).collect();
    Classification {
        s_values,
        lambda_values,
    }
}

/// Certifies that no solution of `(s+1)⋯(s+n) = n!` lies outside the window
/// `[-n-2, 1]`, by explicit inequality checks rather than assumption:
///
/// * at `s = 1` each factor `1+k` exceeds the factor `k` of `n!` and the
///   product is `(n+1)! > n!`; factors only grow as `s` increases;
/// * at `s = -n-2` each factor has `|s+k| = n+2-k ≥ 2` and the absolute
///   product is `(n+1)! > n!`; absolute factors only grow as `s` decreases;
/// * every `s` in `[-n, -1]` contains the zero factor `s + (-s)`.
pub fn certify_search_window(n: usize) -> bool {
    assert!(n >= 1);
    let target = factorial(n as u64);

    let right_factors = (1..=n as i64).all(|k| 1 + k > k);
    let right_product = window_product(n, 1) > target;

    let left_factors = (1..=n as i64).all(|k| (-(n as i64) - 2 + k).abs() >= 2);
    let left_product = window_product(n, -(n as i64) - 2).abs() > target;

    let middle_zeros = (-(n as i64)..=-1).all(|s| window_product(n, s).is_zero());

    right_factors && right_product && left_factors && left_product && middle_zeros
}
