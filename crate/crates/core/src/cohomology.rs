//! The truncated graded ring ℚ[h]/(h^{n+1}).
//!
//! [`CohClass`] models the even cohomology of an n-dimensional manifold whose
//! ring structure matches complex projective space: a single degree-one
//! generator `h` with `∫ h^n = 1`. Products discard everything above degree
//! `n`; integration reads off the top coefficient.

use crate::rational::{rat, Rational};
use crate::series::TruncatedSeries;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("constant term must be zero, found {0}")]
    NonzeroConstantTerm(String),
    #[error("series order {order} is too small for ring dimension {dim}")]
    SeriesOrderTooSmall { order: usize, dim: usize },
}

/// An element of ℚ[h]/(h^{n+1}), stored as the coefficients of `h^0 .. h^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    // invariant: coeffs.len() == dim + 1
    coeffs: Vec<Rational>,
}

impl CohClass {
    pub fn zero(dim: usize) -> Self {
        CohClass {
            coeffs: vec![Rational::zero(); dim + 1],
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, 0, Rational::one())
    }

    /// The generator `h` (zero in dimension 0, where `h^1` is already trivial).
    pub fn h(dim: usize) -> Self {
        Self::monomial(dim, 1, Rational::one())
    }

    /// `c · h^k`, zero when `k` exceeds the dimension.
    pub fn monomial(dim: usize, k: usize, c: Rational) -> Self {
        let mut a = Self::zero(dim);
        if k <= dim {
            a.coeffs[k] = c;
        }
        a
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a class stores at least the h^0 coefficient"
        );
        CohClass { coeffs }
    }

    /// The ring dimension parameter `n`.
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^k`; zero beyond the dimension.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, rhs: &Self) -> Result<(), RingError> {
        if self.dim() != rhs.dim() {
            return Err(RingError::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_dim(rhs)?;
        Ok(CohClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_dim(rhs)?;
        Ok(CohClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        CohClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CohClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cup product; degrees above `n` vanish.
    pub fn mul(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_dim(rhs)?;
        let n = self.dim();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(CohClass { coeffs })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.dim());
        for _ in 0..e {
            result = result.mul(self).expect("equal dimensions by construction");
        }
        result
    }

    /// Integration against the fundamental class: `∫ h^n = 1`, so this is the
    /// `h^n` coefficient.
    pub fn integrate(&self) -> Rational {
        self.coeffs[self.dim()].clone()
    }

    /// `exp(self) = Σ self^k / k!`, a finite sum since the argument is
    /// nilpotent. Requires zero constant term.
    pub fn exp(&self) -> Result<Self, RingError> {
        if !self.coeffs[0].is_zero() {
            return Err(RingError::NonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.dim();
        let mut sum = Self::one(n);
        let mut term = Self::one(n);
        for k in 1..=n as i64 {
            term = term.mul(self).expect("equal dimensions").scale(&rat(1, k));
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term).expect("equal dimensions");
        }
        Ok(sum)
    }
}

/// Substitutes a nilpotent class into a power series: `Σ f_k a^k` as a finite
/// sum in the ring. The series must reach at least the ring dimension.
pub fn apply_series(f: &TruncatedSeries, a: &CohClass) -> Result<CohClass, RingError> {
    if !a.coeffs[0].is_zero() {
        return Err(RingError::NonzeroConstantTerm(a.coeffs[0].to_string()));
    }
    let n = a.dim();
    if f.order() < n {
        return Err(RingError::SeriesOrderTooSmall {
            order: f.order(),
            dim: n,
        });
    }
    let mut sum = CohClass::monomial(n, 0, f.coeffs()[0].clone());
    let mut power = CohClass::one(n);
    for k in 1..=n {
        power = power.mul(a).expect("equal dimensions");
        if power.is_zero() {
            break;
        }
        sum = sum
            .add(&power.scale(&f.coeffs()[k]))
            .expect("equal dimensions");
    }
    Ok(sum)
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*h")?,
                _ => write!(f, "({c})*h^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
