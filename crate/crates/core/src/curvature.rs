//! Algebraic Kähler curvature tensors at a point, in double precision.
//!
//! A [`KahlerCurvature`] holds the components `R_{ij̄kl̄}` in a unitary frame
//! (metric frozen to the identity), with the Kähler pair symmetries
//! `R_{ij̄kl̄} = R_{kj̄il̄} = R_{il̄kj̄}` and the Hermitian symmetry
//! `conj(R_{ij̄kl̄}) = R_{jīlk̄}`. The lab generates random symmetric tensors,
//! projects them to Einstein ones, and evaluates the curvature identities
//! numerically: the traceless-part norm identity, the contraction identity
//! `Σ(R·R - R·R) = |Ric|² - |Rm|²`, and the pointwise Chern-number gap with
//! its constant-holomorphic-sectional-curvature equality case.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

/// Postcondition bound for the Einstein projection.
pub const EINSTEIN_PROJECTION_TOL: f64 = 1e-10;
/// How Einstein an input must be before the Chern-gap density is meaningful.
pub const EINSTEIN_INPUT_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurvatureError {
    #[error("complex dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("einstein projection postcondition failed: max |Ric - λ·Id| = {deviation:.3e} > {limit:.3e}")]
    ProjectionFailed { deviation: f64, limit: f64 },
    #[error("input is not Einstein: max |Ric - λ·Id| = {deviation:.3e} > {limit:.3e}")]
    NotEinstein { deviation: f64, limit: f64 },
    #[error("holomorphic sectional curvature of the zero vector")]
    ZeroVector,
}

/// `R_{ij̄kl̄}` at a point, metric = identity.
#[derive(Debug, Clone, PartialEq)]
pub struct KahlerCurvature {
    n: usize,
    // row-major over (i, j, k, l)
    r: Vec<Complex64>,
}

impl KahlerCurvature {
    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        self.r[self.idx(i, j, k, l)]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Builds a tensor from a component function, without symmetrizing.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Complex64) -> Self {
        let mut r = Vec::with_capacity(n * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        r.push(f(i, j, k, l));
                    }
                }
            }
        }
        KahlerCurvature { n, r }
    }

    pub fn zero(n: usize) -> Self {
        KahlerCurvature {
            n,
            r: vec![Complex64::ZERO; n * n * n * n],
        }
    }

    /// The constant-holomorphic-sectional-curvature model
    /// `R_{ij̄kl̄} = c(δ_{ij}δ_{kl} + δ_{il}δ_{kj})`.
    pub fn constant_hsc_model(n: usize, c: f64) -> Self {
        Self::from_fn(n, |i, j, k, l| {
            let mut v = 0.0;
            if i == j && k == l {
                v += c;
            }
            if i == l && k == j {
                v += c;
            }
            Complex64::new(v, 0.0)
        })
    }

    /// Independent complex Gaussian entries, then projected onto the
    /// Kähler-symmetric subspace. Deterministic in the seed.
    pub fn random(n: usize, seed: u64) -> Result<Self, CurvatureError> {
        if n < 2 {
            return Err(CurvatureError::DimensionTooSmall(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw = Self::from_fn(n, |_, _, _, _| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        });
        Ok(raw.symmetrized())
    }

    /// Projection onto the Kähler-symmetric subspace: average over the
    /// `i↔k` and `j̄↔l̄` swaps, then Hermitianize against the
    /// conjugate-transposed index pattern.
    pub fn symmetrized(&self) -> Self {
        let n = self.n;
        let paired = Self::from_fn(n, |i, j, k, l| {
            (self.get(i, j, k, l)
                + self.get(k, j, i, l)
                + self.get(i, l, k, j)
                + self.get(k, l, i, j))
                * 0.25
        });
        Self::from_fn(n, |i, j, k, l| {
            (paired.get(i, j, k, l) + paired.get(j, i, l, k).conj()) * 0.5
        })
    }

    /// Worst violation of the pair and Hermitian symmetries.
    pub fn max_symmetry_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    for l in 0..self.n {
                        let v = self.get(i, j, k, l);
                        worst = worst
                            .max((v - self.get(k, j, i, l)).norm())
                            .max((v - self.get(i, l, k, j)).norm())
                            .max((v.conj() - self.get(j, i, l, k)).norm());
                    }
                }
            }
        }
        worst
    }

    /// Ricci tensor `R_{ij̄} = Σ_k R_{ij̄kk̄}` as a row-major n×n matrix.
    pub fn ricci(&self) -> Vec<Complex64> {
        let n = self.n;
        let mut ric = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::ZERO;
                for k in 0..n {
                    acc += self.get(i, j, k, k);
                }
                ric[i * n + j] = acc;
            }
        }
        ric
    }

    /// Scalar curvature `R = Σ_i R_{iī}`.
    pub fn scalar(&self) -> f64 {
        let ric = self.ricci();
        (0..self.n).map(|i| ric[i * self.n + i].re).sum()
    }

    /// `|Rm|² = Σ |R_{ij̄kl̄}|²`.
    pub fn norm_rm_sq(&self) -> f64 {
        self.r.iter().map(|v| v.norm_sqr()).sum()
    }

    /// `|Ric|² = Σ |R_{ij̄}|²`.
    pub fn norm_ric_sq(&self) -> f64 {
        self.ricci().iter().map(|v| v.norm_sqr()).sum()
    }

    /// `max_{ij} |Ric_{ij̄} - λ δ_{ij}|`.
    pub fn ricci_deviation(&self, lambda: f64) -> f64 {
        let n = self.n;
        let ric = self.ricci();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j {
                    Complex64::new(lambda, 0.0)
                } else {
                    Complex64::ZERO
                };
                worst = worst.max((ric[i * n + j] - target).norm());
            }
        }
        worst
    }

    /// Adds the symmetry-preserving correction that makes the output
    /// Einstein with constant `λ`: with deficit `D = λ·Id - Ric` split into
    /// traceless and trace parts, adds `S(D⁰)/(n+2) + (tr D/(2n(n+1)))·S(Id)`
    /// where `S(B)_{ij̄kl̄} = B_{ij̄}δ_{kl} + δ_{ij}B_{kl̄} + B_{il̄}δ_{kj} + δ_{il}B_{kj̄}`,
    /// using `Ric(S(B)) = (n+2)B + (tr B)·Id`.
    ///
    /// The postcondition `max |Ric - λ·Id| ≤ 1e-10` is enforced, not assumed.
    pub fn make_einstein(&self, lambda: f64) -> Result<Self, CurvatureError> {
        let n = self.n;
        let nf = n as f64;
        let ric = self.ricci();
        let mut deficit = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let target = if i == j {
                    Complex64::new(lambda, 0.0)
                } else {
                    Complex64::ZERO
                };
                deficit[i * n + j] = target - ric[i * n + j];
            }
        }
        let trace: Complex64 = (0..n).map(|i| deficit[i * n + i]).sum();
        let mut traceless = deficit;
        for i in 0..n {
            traceless[i * n + i] -= trace / nf;
        }

        let s_coeff = 1.0 / (nf + 2.0);
        let id_coeff = trace / (2.0 * nf * (nf + 1.0));
        let out = Self::from_fn(n, |i, j, k, l| {
            let mut v = self.get(i, j, k, l);
            let b = |p: usize, q: usize| {
                traceless[p * n + q] * s_coeff + if p == q { id_coeff } else { Complex64::ZERO }
            };
            if k == l {
                v += b(i, j);
            }
            if i == j {
                v += b(k, l);
            }
            if k == j {
                v += b(i, l);
            }
            if i == l {
                v += b(k, j);
            }
            v
        });

        let deviation = out.ricci_deviation(lambda);
        if deviation > EINSTEIN_PROJECTION_TOL {
            return Err(CurvatureError::ProjectionFailed {
                deviation,
                limit: EINSTEIN_PROJECTION_TOL,
            });
        }
        Ok(out)
    }

    /// Subtracts the constant-curvature model:
    /// `R⁰ = R - λ/(n+1) · (δ_{ij}δ_{kl} + δ_{il}δ_{kj})`.
    pub fn rm0(&self, lambda: f64) -> Self {
        let c = lambda / (self.n as f64 + 1.0);
        let model = Self::constant_hsc_model(self.n, c);
        Self::from_fn(self.n, |i, j, k, l| {
            self.get(i, j, k, l) - model.get(i, j, k, l)
        })
    }

    /// Residual of the contraction identity
    /// `Σ_{k,i,p,r} (R^k_{ipp̄} R^i_{krr̄} - R^k_{ipr̄} R^i_{krp̄}) = |Ric|² - |Rm|²`,
    /// indices raised with the identity metric (`R^k_{ipq̄} = R_{ik̄pq̄}`).
    /// Holds for any tensor with the Kähler symmetries; Einstein not needed.
    pub fn contraction_identity_residual(&self) -> f64 {
        let n = self.n;
        let ric = self.ricci();
        let mut lhs = Complex64::ZERO;
        for i in 0..n {
            for k in 0..n {
                lhs += ric[i * n + k] * ric[k * n + i];
            }
        }
        for i in 0..n {
            for k in 0..n {
                for p in 0..n {
                    for r in 0..n {
                        lhs -= self.get(i, k, p, r) * self.get(k, i, r, p);
                    }
                }
            }
        }
        let rhs = Complex64::new(self.norm_ric_sq() - self.norm_rm_sq(), 0.0);
        (lhs - rhs).norm()
    }

    /// Pointwise density of the Chern-number gap,
    /// `|Rm⁰|² / (n(n-1)·4π²)`: non-negative, and zero exactly at constant
    /// holomorphic sectional curvature. The input must already be Einstein
    /// with the given `λ` (checked to 1e-8).
    pub fn chern_gap(&self, lambda: f64) -> Result<f64, CurvatureError> {
        let deviation = self.ricci_deviation(lambda);
        if deviation > EINSTEIN_INPUT_TOL {
            return Err(CurvatureError::NotEinstein {
                deviation,
                limit: EINSTEIN_INPUT_TOL,
            });
        }
        let n = self.n as f64;
        Ok(self.rm0(lambda).norm_rm_sq() / (n * (n - 1.0) * 4.0 * std::f64::consts::PI.powi(2)))
    }

    /// `R(v, v̄, v, v̄) / |v|⁴`.
    pub fn holomorphic_sectional_curvature(&self, v: &[Complex64]) -> Result<f64, CurvatureError> {
        assert_eq!(v.len(), self.n);
        let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq == 0.0 {
            return Err(CurvatureError::ZeroVector);
        }
        let mut acc = Complex64::ZERO;
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    for l in 0..self.n {
                        acc += self.get(i, j, k, l) * v[i] * v[j].conj() * v[k] * v[l].conj();
                    }
                }
            }
        }
        Ok(acc.re / (norm_sq * norm_sq))
    }
}
