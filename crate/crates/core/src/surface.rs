//! Surface (n = 2) index arithmetic and the blowup intersection computation.
//!
//! The surface side collects the signature theorem `τ = (1/3)∫p₁`, Noether's
//! formula `χ(𝒪) = (K² + χ_top)/12`, Gauss–Bonnet `∫c₂ = χ_top` and surface
//! Riemann–Roch `χ(L) = χ(𝒪) + (L² - K·L)/2`, each over general integer
//! inputs so their linear structure can be probed, not just the ℂP² values.
//! The blowup side computes `∫ c₁(M̃)ⁿ` for the blowup of a point on a
//! manifold with `c₁ = 0`, `b₂ = 0` by exceptional-divisor bookkeeping.

use crate::cohomology::CohClass;
use crate::rational::{rat, rat_int, Rational};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("blowup bookkeeping needs complex dimension at least 2, got {0}")]
    DimensionTooSmall(usize),
}

/// The four index invariants of a compact complex surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceInvariants {
    /// Topological Euler characteristic `χ_top = ∫ c₂`.
    pub chi_top: i64,
    /// Signature of the intersection form.
    pub tau: i64,
    /// `K² = ∫ c₁²`.
    pub k2: i64,
    /// Holomorphic Euler characteristic `χ(𝒪)`.
    pub chi_o: Rational,
}

impl SurfaceInvariants {
    /// Noether's formula: `χ(𝒪) = (K² + χ_top)/12`, exactly.
    pub fn noether_consistent(&self) -> bool {
        self.chi_o == rat(self.k2 + self.chi_top, 12)
    }

    /// Signature theorem combined with Gauss–Bonnet:
    /// `3τ = ∫(c₁² - 2c₂) = K² - 2χ_top`.
    pub fn signature_consistent(&self) -> bool {
        3 * self.tau == self.k2 - 2 * self.chi_top
    }

    pub fn consistent(&self) -> bool {
        self.noether_consistent() && self.signature_consistent()
    }
}

/// Signature from the first Pontryagin number: `τ = (1/3) ∫ p₁`.
pub fn signature_from_p1(p1_integral: &Rational) -> Rational {
    p1_integral / rat_int(3)
}

/// `K²` from Noether's formula: `K² = 12·χ(𝒪) - χ_top`.
pub fn solve_k2(chi_o: &Rational, chi_top: i64) -> Rational {
    chi_o * rat_int(12) - rat_int(chi_top)
}

/// `∫c₁²` from the signature theorem and Gauss–Bonnet:
/// `∫c₁² = 3τ + 2χ_top`.
pub fn c1sq_from_signature(tau: i64, chi_top: i64) -> i64 {
    3 * tau + 2 * chi_top
}

/// Surface Riemann–Roch: `χ(L) = χ(𝒪) + (L² - K·L)/2`.
pub fn surface_rr(l2: i64, k_dot_l: i64, chi_o: &Rational) -> Rational {
    chi_o + rat(l2 - k_dot_l, 2)
}

/// `∫ c₁(M̃)ⁿ` for the blowup `M̃` of a point on an n-fold `M` with
/// `b₂(M) = 0` (hence `c₁(M) = 0`).
///
/// Bookkeeping rules, not a hard-coded constant: `c₁(M̃) = π*c₁(M) - 2[E]`,
/// cross terms `π*α · [E]` vanish, and `∫[E]ⁿ` is evaluated on the
/// exceptional divisor `E ≅ ℂP^{n-1}` where `[E]|_E = c₁(𝒪(-1)) = -h`.
pub fn blowup_c1_top(n: usize) -> Result<i64, SurfaceError> {
    let c1_downstairs = rat_int(0); // c₁(M) = 0 since b₂(M) = 0
    let value = blowup_top_intersection(n, &c1_downstairs, &rat_int(0), &rat_int(-2))?;
    debug_assert!(value.is_integer());
    Ok(i64::try_from(value.to_integer()).expect("small intersection number"))
}

/// Top self-intersection `∫ (a·π*α + b·[E])ⁿ` on the blowup of a point,
/// where `α ∈ H²(M)` has `∫_M αⁿ = alpha_top`.
///
/// Only the two pure powers survive: `π*` is a ring map killing nothing but
/// integration picks out `π*(αⁿ)`, while `π*α·[E] = 0` because `E` maps to a
/// point. `∫[E]ⁿ` comes from restricting to `E ≅ ℂP^{n-1}`.
pub fn blowup_top_intersection(
    n: usize,
    a: &Rational,
    alpha_top: &Rational,
    b: &Rational,
) -> Result<Rational, SurfaceError> {
    if n < 2 {
        return Err(SurfaceError::DimensionTooSmall(n));
    }
    // ∫_{M̃}[E]ⁿ = ∫_E ([E]|_E)^{n-1} = ∫_{ℂP^{n-1}} (-h)^{n-1}
    let e_top = CohClass::h(n - 1).neg().pow(n as u32 - 1).integrate();
    let mut a_pow = Rational::from_integer(1.into());
    let mut b_pow = a_pow.clone();
    for _ in 0..n {
        a_pow *= a;
        b_pow *= b;
    }
    Ok(a_pow * alpha_top + b_pow * e_top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genera::{chern_cpn, genus_eval, pontryagin_cpn, CharSeries};
    use crate::hrr::{chi_genus_route, HrrProblem};
    use proptest::prelude::*;

    #[test]
    fn signature_examples() {
        assert_eq!(signature_from_p1(&rat_int(3)), rat_int(1));
        assert_eq!(signature_from_p1(&rat_int(0)), rat_int(0));
        // cross-module: ∫ L(p(ℂP²)) = (1/3)∫p₁ = 1
        let l = genus_eval(&CharSeries::l(4), &pontryagin_cpn(2)).unwrap();
        let p1 = pontryagin_cpn(2).component(1);
        assert_eq!(signature_from_p1(&p1.integrate()), l.integrate());
        assert_eq!(l.integrate(), rat_int(1));
    }

    #[test]
    fn signature_matches_l_genus_on_scaled_inputs() {
        // rescaling p1 of the surface rescales both routes identically
        use crate::cohomology::CohClass;
        use crate::genera::{ClassKind, TotalClass};
        for (num, den) in [(1i64, 1i64), (-2, 1), (5, 3), (0, 1), (7, 2)] {
            let t = rat(num, den);
            let p1 = CohClass::monomial(2, 2, rat_int(3) * &t);
            let total =
                TotalClass::new(ClassKind::Pontryagin, 2, vec![CohClass::one(2), p1.clone()])
                    .unwrap();
            let via_l = genus_eval(&CharSeries::l(4), &total).unwrap().integrate();
            assert_eq!(signature_from_p1(&p1.integrate()), via_l, "t = {t}");
        }
    }

    #[test]
    fn noether_examples() {
        assert_eq!(solve_k2(&rat_int(1), 3), rat_int(9));
        assert_eq!(solve_k2(&rat_int(1), 0), rat_int(12));
        // chi_o fed from the Riemann-Roch engine
        let chi_o = chi_genus_route(&HrrProblem::new(2, 3, 0).unwrap()).unwrap();
        assert_eq!(solve_k2(&chi_o, 3), rat_int(9));
    }

    #[test]
    fn c1sq_branches() {
        assert_eq!(c1sq_from_signature(1, 3), 9);
        assert_eq!(c1sq_from_signature(-1, 3), 3);
        assert_eq!(c1sq_from_signature(0, 0), 0);
    }

    #[test]
    fn surface_rr_examples() {
        assert_eq!(surface_rr(1, -3, &rat_int(1)), rat_int(3));
        assert_eq!(surface_rr(0, 0, &rat_int(1)), rat_int(1));
        // equals χ(ℂP², 𝒪(1)) through the genus route
        let chi = chi_genus_route(&HrrProblem::new(2, 3, 1).unwrap()).unwrap();
        assert_eq!(surface_rr(1, -3, &rat_int(1)), chi);
    }

    #[test]
    fn cp2_invariants_pin_down_the_signature() {
        // τ = +1 is the only branch consistent with Noether and Gauss-Bonnet.
        let good = SurfaceInvariants {
            chi_top: 3,
            tau: 1,
            k2: 9,
            chi_o: rat_int(1),
        };
        assert!(good.noether_consistent());
        assert!(good.signature_consistent());
        assert!(good.consistent());

        let bad = SurfaceInvariants { tau: -1, ..good };
        assert!(bad.noether_consistent());
        assert!(!bad.signature_consistent());
        assert!(!bad.consistent());
    }

    #[test]
    fn blowup_values() {
        assert_eq!(blowup_c1_top(3).unwrap(), -8);
        assert_eq!(blowup_c1_top(2).unwrap(), -4);
        assert!(matches!(
            blowup_c1_top(1),
            Err(SurfaceError::DimensionTooSmall(1))
        ));
        // bookkeeping matches the closed form (-2)^n (-1)^{n-1}
        for n in 2..=8usize {
            let expect = (-2i64).pow(n as u32) * (-1i64).pow(n as u32 - 1);
            assert_eq!(blowup_c1_top(n).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn blowup_contrasts_with_projective_space() {
        let blown_up = blowup_c1_top(3).unwrap();
        let cp3 = chern_cpn(3).component(1).pow(3).integrate();
        assert_eq!(blown_up, -8);
        assert_eq!(cp3, rat_int(64));
        assert_ne!(rat_int(blown_up), cp3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // The closed formulas are linear in their integer inputs.
        #[test]
        fn formulas_are_linear(a in -50i64..=50, b in -50i64..=50, t in -3i64..=3, x in -20i64..=20) {
            prop_assert_eq!(
                c1sq_from_signature(t + 1, x) - c1sq_from_signature(t, x),
                3
            );
            prop_assert_eq!(
                surface_rr(a + 2, b, &rat_int(1)) - surface_rr(a, b, &rat_int(1)),
                rat_int(1)
            );
            prop_assert_eq!(solve_k2(&rat_int(a), x) , rat_int(12 * a - x));
            prop_assert_eq!(signature_from_p1(&rat_int(3 * b)), rat_int(b));
        }

        // Noether and the signature relation hold together exactly on the
        // two-parameter family they generate.
        #[test]
        fn consistent_families(k2 in -60i64..=60, chi_top in -60i64..=60) {
            let inv = SurfaceInvariants {
                chi_top,
                tau: 0,
                k2,
                chi_o: rat(k2 + chi_top, 12),
            };
            prop_assert!(inv.noether_consistent());
            let sig_ok = 3 * ((k2 - 2 * chi_top) / 3) == k2 - 2 * chi_top
                && inv.tau == (k2 - 2 * chi_top) / 3;
            prop_assert_eq!(inv.signature_consistent(), sig_ok);
        }
    }
}
