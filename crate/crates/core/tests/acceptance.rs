//! Acceptance suite: one test per headline criterion, each pinned to its
//! stated bound and printing a pass line. Exact criteria compare rationals
//! bit-for-bit; float criteria use the fixed tolerances below.

use hirzebruch::cohomology::{apply_series, CohClass};
use hirzebruch::curvature::KahlerCurvature;
use hirzebruch::genera::{
    c2_from_equality, chern_cpn, genus_eval, pontryagin_cpn, CharSeries, ClassKind, TotalClass,
};
use hirzebruch::hrr::{
    certify_search_window, chi_closed_form, chi_genus_route, chi_series_route, classify_c1,
    residue_route, HrrProblem,
};
use hirzebruch::rational::{rat, rat_int, Rational};
use hirzebruch::series::todd_ahat_identity_check;
use hirzebruch::surface::{
    blowup_c1_top, c1sq_from_signature, signature_from_p1, solve_k2, surface_rr, SurfaceInvariants,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const NMAX: usize = 12;
const SMAX: i64 = 12;
const TRIALS: usize = 200;
const SEED: u64 = 42;
const FLOAT_TOL: f64 = 1e-9;
const EQUALITY_TOL: f64 = 1e-12;
const SERIES_IDENTITY_ORDER: usize = 60;
const CLASSIFY_NMAX: usize = 10;

#[test]
fn criterion_01_four_way_chi_agreement() {
    let mut cases = 0;
    for n in 1..=NMAX {
        for s in -SMAX..=SMAX {
            let closed = chi_closed_form(n, s);
            assert_eq!(chi_series_route(n, s), closed, "series route, n={n} s={s}");
            assert_eq!(residue_route(n, s), closed, "residue route, n={n} s={s}");
            let fano = chi_genus_route(&HrrProblem::fano(n, s)).unwrap();
            assert_eq!(fano, closed, "genus route (lambda = n+1), n={n} s={s}");
            let classified = chi_genus_route(&HrrProblem::classified(n, s)).unwrap();
            assert_eq!(
                classified, closed,
                "genus route (lambda = n+1+2s), n={n} s={s}"
            );
            // the common value is the falling-product binomial
            let product: Rational = (1..=n as i64).map(|k| rat_int(s + k)).product::<Rational>()
                / (1..=n as i64).map(rat_int).product::<Rational>();
            assert_eq!(closed, product, "falling product, n={n} s={s}");
            cases += 1;
        }
    }
    println!("[PASS] criterion 01: four-way chi agreement on {cases} (n, s) pairs");
}

#[test]
fn criterion_02_chi_of_structure_sheaf_is_one() {
    let mut branches = 0;
    for n in 1..=NMAX {
        for &lambda in &classify_c1(n).lambda_values {
            let chi = chi_genus_route(&HrrProblem::new(n, lambda, 0).unwrap()).unwrap();
            assert_eq!(chi, rat_int(1), "n={n}, lambda={lambda}");
            branches += 1;
        }
    }
    println!("[PASS] criterion 02: chi(M, O) = 1 on all {branches} classified branches");
}

#[test]
fn criterion_03_classification_with_certificate() {
    for n in 1..=CLASSIFY_NMAX {
        let c = classify_c1(n);
        let expect: Vec<i64> = if n % 2 == 1 {
            vec![0]
        } else {
            vec![0, -(n as i64) - 1]
        };
        assert_eq!(c.s_values, expect, "n = {n}");
        let lambdas: Vec<i64> = expect.iter().map(|s| n as i64 + 1 + 2 * s).collect();
        assert_eq!(c.lambda_values, lambdas, "n = {n}");
        assert!(certify_search_window(n), "certificate failed at n = {n}");
    }
    println!(
        "[PASS] criterion 03: classification and exhaustiveness certificate, n <= {CLASSIFY_NMAX}"
    );
}

#[test]
fn criterion_04_fano_section_count() {
    for n in 1..=NMAX {
        let chi = chi_genus_route(&HrrProblem::fano(n, 1)).unwrap();
        assert_eq!(chi, rat_int(n as i64 + 1), "n = {n}");
    }
    println!("[PASS] criterion 04: chi(M, L) = n + 1 for lambda = n+1, s = 1, n <= {NMAX}");
}

#[test]
fn criterion_05_series_identity_to_order_60() {
    assert!(todd_ahat_identity_check(SERIES_IDENTITY_ORDER));
    println!(
        "[PASS] criterion 05: x/(1-e^-x) = e^(x/2)·(x/2)/sinh(x/2) to order {SERIES_IDENTITY_ORDER}"
    );
}

#[test]
fn criterion_06_surface_suite() {
    // tau via (1/3) int p1 and via the L genus
    let p = pontryagin_cpn(2);
    assert_eq!(signature_from_p1(&p.component(1).integrate()), rat_int(1));
    let l = genus_eval(&CharSeries::l(4), &p).unwrap();
    assert_eq!(l.integrate(), rat_int(1));

    // K^2 = 9 from Noether with chi_O = 1, chi_top = 3
    assert_eq!(solve_k2(&rat_int(1), 3), rat_int(9));

    // c1^2 = 3(2 ± 1) gives {3, 9}; only 9 is consistent
    assert_eq!(c1sq_from_signature(-1, 3), 3);
    assert_eq!(c1sq_from_signature(1, 3), 9);
    let plus = SurfaceInvariants {
        chi_top: 3,
        tau: 1,
        k2: 9,
        chi_o: rat_int(1),
    };
    let minus = SurfaceInvariants {
        tau: -1,
        ..plus.clone()
    };
    assert!(plus.consistent());
    assert!(!minus.consistent());

    // chi(M, L) = 3 via surface Riemann-Roch and via the genus route
    assert_eq!(surface_rr(1, -3, &rat_int(1)), rat_int(3));
    let chi = chi_genus_route(&HrrProblem::new(2, 3, 1).unwrap()).unwrap();
    assert_eq!(chi, rat_int(3));

    println!(
        "[PASS] criterion 06: surface suite (tau = 1 both routes, K^2 = 9, c1^2 = 9, chi(L) = 3)"
    );
}

#[test]
fn criterion_07_chern_equality_case() {
    for n in (2..=NMAX).step_by(2) {
        let c1 = CohClass::h(n).scale(&rat_int(n as i64 + 1));
        let c2 = c2_from_equality(n);
        let gap = c2
            .scale(&rat(2 * (n as i64 + 1), n as i64))
            .sub(&c1.mul(&c1).unwrap())
            .unwrap();
        assert!(gap.is_zero(), "n = {n}: gap = {gap}");
    }
    println!("[PASS] criterion 07: (2(n+1)/n)c2 - c1^2 = 0 in the ring for even n <= {NMAX}");
}

#[test]
fn criterion_08_blowup_contrast() {
    let blown = blowup_c1_top(3).unwrap();
    assert_eq!(blown, -8);
    let cp3 = chern_cpn(3).component(1).pow(3).integrate();
    assert_eq!(cp3, rat_int(64));
    assert_ne!(rat_int(blown), cp3);
    println!("[PASS] criterion 08: blowup c1^3 = -8, CP^3 c1^3 = 64, and -8 != 64");
}

fn trial_seed(salt: u64, trial: u64) -> u64 {
    SEED.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(salt.wrapping_mul(0x2545_f491_4f6c_dd1d))
        .wrapping_add(trial)
}

#[test]
fn criterion_09_curvature_norm_identity() {
    let mut worst: f64 = 0.0;
    for (ni, n) in (2..=6usize).enumerate() {
        for (li, lambda) in [-1.0, 0.0, 1.0, 2.5].into_iter().enumerate() {
            for t in 0..TRIALS {
                let seed = trial_seed((ni * 10 + li) as u64, t as u64);
                let rm = KahlerCurvature::random(n, seed)
                    .unwrap()
                    .make_einstein(lambda)
                    .unwrap();
                let lhs = rm.rm0(lambda).norm_rm_sq();
                let rhs = rm.norm_rm_sq() - 2.0 * lambda * lambda * n as f64 / (n as f64 + 1.0);
                let scaled = (lhs - rhs).abs() / (1.0 + rm.norm_rm_sq());
                assert!(
                    scaled <= FLOAT_TOL,
                    "n={n} lambda={lambda} trial={t}: scaled residual {scaled:e}"
                );
                worst = worst.max(scaled);
            }
        }
    }
    println!(
        "[PASS] criterion 09: |Rm0|^2 = |Rm|^2 - 2λ²n/(n+1), max scaled residual {worst:.3e} <= {FLOAT_TOL:.0e}"
    );
}

#[test]
fn criterion_10_contraction_identity() {
    let mut worst: f64 = 0.0;
    for (ni, n) in (2..=6usize).enumerate() {
        for t in 0..TRIALS {
            // arbitrary Kähler-symmetric tensors; Einstein not required
            let rm = KahlerCurvature::random(n, trial_seed(100 + ni as u64, t as u64)).unwrap();
            let residual = rm.contraction_identity_residual();
            let bound = FLOAT_TOL * (1.0 + rm.norm_rm_sq());
            assert!(residual <= bound, "n={n} trial={t}: residual {residual:e}");
            worst = worst.max(residual / (1.0 + rm.norm_rm_sq()));
        }
    }
    println!(
        "[PASS] criterion 10: contraction identity on {} tensors, max scaled residual {worst:.3e}",
        5 * TRIALS
    );
}

#[test]
fn criterion_11_chern_gap_equality_case() {
    // zero gap on constant holomorphic sectional curvature models
    for n in 2..=6usize {
        let c = -0.8 + 0.3 * n as f64;
        let model = KahlerCurvature::constant_hsc_model(n, c);
        let gap = model.chern_gap(c * (n as f64 + 1.0)).unwrap();
        assert!(gap.abs() <= EQUALITY_TOL, "n={n}: model gap {gap:e}");
    }
    // strictly positive gap on generic Einstein tensors at n = 4, lambda = -1
    let mut positive = 0;
    for t in 0..TRIALS {
        let rm = KahlerCurvature::random(4, trial_seed(200, t as u64))
            .unwrap()
            .make_einstein(-1.0)
            .unwrap();
        let gap = rm.chern_gap(-1.0).unwrap();
        assert!(gap > 0.0, "trial {t}: gap {gap:e}");
        positive += 1;
    }
    assert_eq!(positive, TRIALS);
    println!(
        "[PASS] criterion 11: chern gap <= {EQUALITY_TOL:.0e} on models, > 0 on {TRIALS}/{TRIALS} generic tensors"
    );
}

#[test]
fn criterion_12_genus_coefficients() {
    // Ahat genus of CP^2
    let ahat = genus_eval(&CharSeries::ahat(4), &pontryagin_cpn(2)).unwrap();
    assert_eq!(ahat.integrate(), rat(-1, 8));

    // Todd genus of CP^n for n <= 12
    for n in 1..=NMAX {
        let td = genus_eval(&CharSeries::todd(n.max(2)), &chern_cpn(n)).unwrap();
        assert_eq!(td.integrate(), rat_int(1), "n = {n}");
    }

    // series coefficients in the root variable
    assert_eq!(
        CharSeries::l(4).series().coefficient(1).unwrap(),
        &rat(1, 3)
    );
    assert_eq!(
        CharSeries::ahat(4).series().coefficient(1).unwrap(),
        &rat(-1, 24)
    );

    // Newton's-identities route vs the brute-force split-product oracle on
    // randomized split classes (the oracle multiplies Q(a_j h^2) literally).
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for round in 0..30 {
        let n = 2 + (round % 7) as usize;
        let m = 1 + (round % 4) as usize;
        let roots: Vec<Rational> = (0..m)
            .map(|_| {
                let num: f64 = StandardNormal.sample(&mut rng);
                rat((num * 6.0) as i64, 1 + (round % 3) as i64)
            })
            .collect();

        // elementary symmetric polynomials -> split total class
        let mut elem = vec![rat_int(1)];
        for a in &roots {
            let mut next = vec![rat_int(0); elem.len() + 1];
            for (i, e) in elem.iter().enumerate() {
                next[i] += e;
                next[i + 1] += e * a;
            }
            elem = next;
        }
        let components = elem
            .iter()
            .enumerate()
            .map(|(i, e)| CohClass::monomial(n, 2 * i, e.clone()))
            .collect();
        let total = TotalClass::new(ClassKind::Pontryagin, n, components).unwrap();

        let q = CharSeries::ahat(n);
        let newton = genus_eval(&q, &total).unwrap();
        let mut product = CohClass::one(n);
        for a in &roots {
            let factor = apply_series(q.series(), &CohClass::monomial(n, 2, a.clone())).unwrap();
            product = product.mul(&factor).unwrap();
        }
        assert_eq!(newton, product, "round {round}: roots {roots:?}");
    }

    println!("[PASS] criterion 12: Ahat(CP^2) = -1/8, Todd(CP^n) = 1, L1 = 1/3, Ahat1 = -1/24, oracle agreement");
}
