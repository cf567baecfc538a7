//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores a series known modulo `x^{N+1}`: its order `N`
//! and the `N+1` coefficients of `x^0 .. x^N`. All arithmetic is exact; binary
//! operations demand equal orders so that degree bookkeeping mistakes surface
//! as [`SeriesError::OrderMismatch`] instead of silently truncated results.
//! Callers that really want to combine series of different orders re-truncate
//! explicitly with [`TruncatedSeries::truncated`].

use crate::rational::{rat, rat_int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series order mismatch: {left} vs {right}; re-truncate explicitly before combining")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term must be zero, found {0}")]
    NonzeroConstantTerm(String),
    #[error("constant term must be one, found {0}")]
    ConstantTermNotOne(String),
    #[error("divisor has zero constant term; use div_cancel to cancel the common power of x")]
    NonUnitDivisor,
    #[error("division by a series that is zero to its stored order")]
    DivisionByZero,
    #[error("numerator vanishes to order {num_valuation} < divisor valuation {den_valuation}; quotient is not a power series")]
    NotDivisible {
        num_valuation: usize,
        den_valuation: usize,
    },
    #[error("coefficient index {index} exceeds stored order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// A formal power series over [`Rational`], truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    // invariant: coeffs.len() == order + 1
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The variable `x` itself.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// A constant series.
    pub fn constant(c: Rational, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * x^k`, zero when `k` exceeds the order.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the x^0 coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of `x^k`.
    pub fn coefficient(&self, k: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(k).ok_or(SeriesError::IndexOutOfRange {
            index: k,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The same series re-truncated to a smaller (or equal) order.
    ///
    /// Panics if `order` exceeds the stored order: coefficients beyond the
    /// stored order are unknown, not zero.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Coefficient-wise multiplication by a scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let n = self.order();
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
        Ok(TruncatedSeries { coeffs })
    }

    /// `self^e` at the same order, by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("equal orders by construction");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("equal orders by construction");
            }
        }
        result
    }

    /// `exp(self) = Σ self^k / k!`, requiring a zero constant term.
    ///
    /// Computed through the recurrence `m·y_m = Σ_{j=1..m} j·a_j·y_{m-j}`
    /// obtained from `y' = a'·y`, which agrees term-by-term with the
    /// exponential sum and costs O(N²) coefficient operations.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut y = vec![Rational::zero(); n + 1];
        y[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() && !y[m - j].is_zero() {
                    acc += rat_int(j as i64) * &self.coeffs[j] * &y[m - j];
                }
            }
            y[m] = acc / rat_int(m as i64);
        }
        Ok(TruncatedSeries { coeffs: y })
    }

    /// `log(self)`, requiring constant term one; inverse of [`exp`](Self::exp)
    /// on zero-constant-term series. Computed as `∫ self'/self`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne(self.coeffs[0].to_string()));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().div(&self.truncated(self.order() - 1))?;
        Ok(quotient.integral())
    }

    /// Quotient by a series with invertible (nonzero) constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        if rhs.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        let n = self.order();
        let inv_b0 = Rational::one() / &rhs.coeffs[0];
        let mut q = vec![Rational::zero(); n + 1];
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..=m {
                if !rhs.coeffs[k].is_zero() && !q[m - k].is_zero() {
                    acc -= &rhs.coeffs[k] * &q[m - k];
                }
            }
            q[m] = acc * &inv_b0;
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Quotient after cancelling the common power of `x`.
    ///
    /// With `k` the valuation of the divisor, both operands are divided by
    /// `x^k` and the result is exact modulo `x^{order+1-k}`. The numerator
    /// must vanish at least to order `k`.
    pub fn div_cancel(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let k = rhs.valuation().ok_or(SeriesError::DivisionByZero)?;
        if k == 0 {
            return self.div(rhs);
        }
        let num_val = self.valuation().unwrap_or(self.order() + 1);
        if num_val < k {
            return Err(SeriesError::NotDivisible {
                num_valuation: num_val,
                den_valuation: k,
            });
        }
        let shifted = |s: &Self| TruncatedSeries {
            coeffs: s.coeffs[k..].to_vec(),
        };
        shifted(self).div(&shifted(rhs))
    }

    /// Termwise derivative; the order drops by one.
    ///
    /// Panics at order 0, where no derivative coefficient is known.
    pub fn derivative(&self) -> Self {
        assert!(
            self.order() >= 1,
            "derivative of an order-0 series is not stored"
        );
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Termwise antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 2);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int(k as i64 + 1));
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
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
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `sinh(x)` to the given order, from its exponential definition
/// `(e^x - e^{-x}) / 2`.
pub fn sinh(order: usize) -> TruncatedSeries {
    let x = TruncatedSeries::x(order);
    let pos = x.exp().expect("x has zero constant term");
    let neg = x.neg().exp().expect("-x has zero constant term");
    pos.sub(&neg).expect("equal orders").scale(&rat(1, 2))
}

/// `cosh(x)` to the given order, as `(e^x + e^{-x}) / 2`.
pub fn cosh(order: usize) -> TruncatedSeries {
    let x = TruncatedSeries::x(order);
    let pos = x.exp().expect("x has zero constant term");
    let neg = x.neg().exp().expect("-x has zero constant term");
    pos.add(&neg).expect("equal orders").scale(&rat(1, 2))
}

/// The Todd series `x / (1 - e^{-x})` to the given order.
pub fn todd_series(order: usize) -> TruncatedSeries {
    let x = TruncatedSeries::x(order + 1);
    let denom = TruncatedSeries::one(order + 1)
        .sub(&x.neg().exp().expect("-x has zero constant term"))
        .expect("equal orders");
    x.div_cancel(&denom)
        .expect("both sides vanish exactly to first order")
}

/// The Â series `(x/2) / sinh(x/2)` to the given order (in the variable `x`;
/// only even powers are nonzero).
pub fn ahat_series(order: usize) -> TruncatedSeries {
    let half_x = TruncatedSeries::x(order + 1).scale(&rat(1, 2));
    let denom = sinh(order + 1).compose_scale(&rat(1, 2));
    half_x
        .div_cancel(&denom)
        .expect("both sides vanish exactly to first order")
}

/// The L series `x / tanh(x)` to the given order (in the variable `x`; only
/// even powers are nonzero).
pub fn l_series(order: usize) -> TruncatedSeries {
    let x = TruncatedSeries::x(order + 1);
    let num = x.mul(&cosh(order + 1)).expect("equal orders");
    num.div_cancel(&sinh(order + 1))
        .expect("x·cosh x and sinh x both vanish exactly to first order")
}

impl TruncatedSeries {
    /// Substitutes `x -> c*x`: coefficient of `x^k` is scaled by `c^k`.
    fn compose_scale(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power = &power * c;
                out
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Checks `x/(1 - e^{-x}) = e^{x/2} · (x/2)/sinh(x/2)` coefficient by
/// coefficient up to the given order, exactly.
pub fn todd_ahat_identity_check(order: usize) -> bool {
    let lhs = todd_series(order);
    let exp_half = TruncatedSeries::x(order)
        .scale(&rat(1, 2))
        .exp()
        .expect("x/2 has zero constant term");
    let rhs = exp_half.mul(&ahat_series(order)).expect("equal orders");
    lhs == rhs
}
