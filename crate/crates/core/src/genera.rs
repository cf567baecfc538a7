//! Multiplicative genera: Todd, Â and L series, total Chern/Pontryagin
//! classes, and genus evaluation through Newton's identities.
//!
//! A genus assigns `∏_j Q(γ_j)` to a bundle with formal roots `γ_j`. The
//! roots are never computed here: the elementary symmetric data (the total
//! class components) is converted to power sums `s_k` by Newton's identities,
//! and the product becomes `exp(Σ_k ℓ_k s_k)` with `ℓ_k` the coefficients of
//! `log Q`. Everything happens inside the truncated ring, exactly.

use crate::cohomology::{CohClass, RingError};
use crate::rational::{binomial, rat, rat_int, Rational};
use crate::series::{ahat_series, l_series, todd_series, SeriesError, TruncatedSeries};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("characteristic series must have constant term one, found {0}")]
    ConstantTermNotOne(String),
    #[error("{genus:?} genus expects a {expected:?} total class, got {got:?}")]
    KindMismatch {
        genus: GenusKind,
        expected: ClassKind,
        got: ClassKind,
    },
    #[error("characteristic series order {order} is too small for dimension {dim}")]
    OrderTooSmall { order: usize, dim: usize },
    #[error("total class component 0 must be 1")]
    BadUnitComponent,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusKind {
    Todd,
    AHat,
    L,
    Custom,
}

/// A characteristic power series `Q` in the root variable, with `Q(0) = 1`.
///
/// Todd is a series in a Chern root `x`; Â and L are series in a Pontryagin
/// root `u = x²`, obtained by folding the even part of `(x/2)/sinh(x/2)` and
/// `x/tanh(x)` respectively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries {
    kind: GenusKind,
    q: TruncatedSeries,
}

impl CharSeries {
    /// The Todd series `x/(1-e^{-x})` to the given order in `x`.
    pub fn todd(order: usize) -> Self {
        CharSeries {
            kind: GenusKind::Todd,
            q: todd_series(order),
        }
    }

    /// The Â series `(√u/2)/sinh(√u/2)` to the given order in `u`.
    pub fn ahat(order: usize) -> Self {
        CharSeries {
            kind: GenusKind::AHat,
            q: fold_even(&ahat_series(2 * order)),
        }
    }

    /// The L series `√u/tanh(√u)` to the given order in `u`.
    pub fn l(order: usize) -> Self {
        CharSeries {
            kind: GenusKind::L,
            q: fold_even(&l_series(2 * order)),
        }
    }

    /// A caller-supplied series with `Q(0) = 1`.
    pub fn custom(q: TruncatedSeries) -> Result<Self, GenusError> {
        if !q.coeffs()[0].is_one() {
            return Err(GenusError::ConstantTermNotOne(q.coeffs()[0].to_string()));
        }
        Ok(CharSeries {
            kind: GenusKind::Custom,
            q,
        })
    }

    pub fn kind(&self) -> GenusKind {
        self.kind
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.q
    }

    /// Which total class kind this genus consumes; `None` for custom series,
    /// which accept either.
    pub fn expected_class_kind(&self) -> Option<ClassKind> {
        match self.kind {
            GenusKind::Todd => Some(ClassKind::Chern),
            GenusKind::AHat | GenusKind::L => Some(ClassKind::Pontryagin),
            GenusKind::Custom => None,
        }
    }
}

/// Keeps even coefficients of an x-series as a series in `u = x²`.
///
/// Panics if an odd coefficient is nonzero: the fold would silently drop it.
fn fold_even(s: &TruncatedSeries) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(s.order() / 2 + 1);
    for (k, c) in s.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            coeffs.push(c.clone());
        } else {
            assert!(
                c.is_zero(),
                "odd coefficient {c} at x^{k} in an even series"
            );
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Chern,
    Pontryagin,
}

// Components beyond the stored range are implicitly zero; dropping stored
// trailing zeros gives every total class one canonical representation.
fn trim_zero_components(components: &mut Vec<CohClass>) {
    while components.len() > 1 && components.last().is_some_and(CohClass::is_zero) {
        components.pop();
    }
}

/// A total characteristic class: the list of components `c_i` (or `p_i`),
/// each a [`CohClass`] in the same ring, with component 0 equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalClass {
    kind: ClassKind,
    dim: usize,
    components: Vec<CohClass>,
}

impl TotalClass {
    pub fn new(kind: ClassKind, dim: usize, components: Vec<CohClass>) -> Result<Self, GenusError> {
        let unit = components.first().ok_or(GenusError::BadUnitComponent)?;
        if unit != &CohClass::one(dim) {
            return Err(GenusError::BadUnitComponent);
        }
        for c in &components {
            if c.dim() != dim {
                return Err(RingError::DimensionMismatch {
                    left: dim,
                    right: c.dim(),
                }
                .into());
            }
        }
        let mut components = components;
        trim_zero_components(&mut components);
        Ok(TotalClass {
            kind,
            dim,
            components,
        })
    }

    /// The class of a trivial bundle: component 0 only.
    pub fn trivial(kind: ClassKind, dim: usize) -> Self {
        TotalClass {
            kind,
            dim,
            components: vec![CohClass::one(dim)],
        }
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[CohClass] {
        &self.components
    }

    /// Component `i`, zero beyond the stored range.
    pub fn component(&self, i: usize) -> CohClass {
        self.components
            .get(i)
            .cloned()
            .unwrap_or_else(|| CohClass::zero(self.dim))
    }

    /// Whitney product: `(a·b)_k = Σ_i a_i b_{k-i}`, up to degree `dim`.
    pub fn product(&self, rhs: &Self) -> Result<Self, GenusError> {
        if self.kind != rhs.kind {
            return Err(GenusError::KindMismatch {
                genus: GenusKind::Custom,
                expected: self.kind,
                got: rhs.kind,
            });
        }
        if self.dim != rhs.dim {
            return Err(RingError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            }
            .into());
        }
        let len = (self.components.len() + rhs.components.len() - 1).min(self.dim + 1);
        let mut components = vec![CohClass::zero(self.dim); len];
        for (i, a) in self.components.iter().enumerate() {
            for (j, b) in rhs.components.iter().enumerate() {
                if i + j < len {
                    components[i + j] = components[i + j].add(&a.mul(b)?)?;
                }
            }
        }
        trim_zero_components(&mut components);
        Ok(TotalClass {
            kind: self.kind,
            dim: self.dim,
            components,
        })
    }

    /// Power sums `s_1 .. s_upto` of the formal roots, from the components by
    /// Newton's identities: `s_k = Σ_{i<k} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k`.
    pub fn power_sums(&self, upto: usize) -> Vec<CohClass> {
        let n = self.dim;
        let e = |i: usize| self.component(i);
        let mut sums: Vec<CohClass> = Vec::with_capacity(upto + 1);
        sums.push(CohClass::zero(n)); // placeholder so sums[k] = s_k
        for k in 1..=upto {
            let mut acc = e(k).scale(&rat_int(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
            for i in 1..k {
                let term = e(i).mul(&sums[k - i]).expect("equal dimensions");
                acc = if i % 2 == 1 {
                    acc.add(&term).expect("equal dimensions")
                } else {
                    acc.sub(&term).expect("equal dimensions")
                };
            }
            sums.push(acc);
        }
        sums
    }
}

/// Total Pontryagin class of ℂPⁿ: `p_i = C(n+1, i) h^{2i}` for `2i ≤ n`.
pub fn pontryagin_cpn(n: usize) -> TotalClass {
    assert!(n >= 1);
    let components = (0..=n / 2)
        .map(|i| {
            CohClass::monomial(
                n,
                2 * i,
                Rational::from_integer(binomial(n as u64 + 1, i as u64)),
            )
        })
        .collect();
    TotalClass {
        kind: ClassKind::Pontryagin,
        dim: n,
        components,
    }
}

/// Total Chern class of ℂPⁿ: `c_i = C(n+1, i) h^i` for `i ≤ n`.
pub fn chern_cpn(n: usize) -> TotalClass {
    assert!(n >= 1);
    let components = (0..=n)
        .map(|i| {
            CohClass::monomial(
                n,
                i,
                Rational::from_integer(binomial(n as u64 + 1, i as u64)),
            )
        })
        .collect();
    TotalClass {
        kind: ClassKind::Chern,
        dim: n,
        components,
    }
}

/// `p_1 = c_1² - 2c_2`, the first Pontryagin class of a complex manifold from
/// its Chern classes.
pub fn p1_from_chern(c1: &CohClass, c2: &CohClass) -> Result<CohClass, RingError> {
    c1.mul(c1)?.sub(&c2.scale(&rat_int(2)))
}

/// `c_2 = n(n+1)/2 · h²`, the second Chern class forced by combining
/// `p_1 = (n+1) h²` with `p_1 = c_1² - 2c_2` and `c_1 = (n+1) h`.
pub fn c2_from_equality(n: usize) -> CohClass {
    assert!(n >= 2);
    CohClass::monomial(n, 2, rat_int((n * (n + 1) / 2) as i64))
}

/// Evaluates the genus `∏_j Q(γ_j)` on a total class without factoring it:
/// power sums via Newton's identities, then `exp(Σ_k ℓ_k s_k)` with `ℓ_k`
/// the coefficients of `log Q`.
pub fn genus_eval(q: &CharSeries, p: &TotalClass) -> Result<CohClass, GenusError> {
    if let Some(expected) = q.expected_class_kind() {
        if p.kind() != expected {
            return Err(GenusError::KindMismatch {
                genus: q.kind(),
                expected,
                got: p.kind(),
            });
        }
    }
    if !q.series().coeffs()[0].is_one() {
        return Err(GenusError::ConstantTermNotOne(
            q.series().coeffs()[0].to_string(),
        ));
    }
    let n = p.dim();
    if q.series().order() < n {
        return Err(GenusError::OrderTooSmall {
            order: q.series().order(),
            dim: n,
        });
    }
    let ell = q.series().log()?;
    let sums = p.power_sums(n);
    let mut acc = CohClass::zero(n);
    for (k, s) in sums.iter().enumerate().skip(1) {
        acc = acc.add(&s.scale(ell.coefficient(k)?))?;
    }
    Ok(acc.exp()?)
}

/// The Todd class from Pontryagin data: `e^{c_1/2} · Â(p)`.
pub fn todd_class(c1: &CohClass, p: &TotalClass) -> Result<CohClass, GenusError> {
    if p.kind() != ClassKind::Pontryagin {
        return Err(GenusError::KindMismatch {
            genus: GenusKind::AHat,
            expected: ClassKind::Pontryagin,
            got: p.kind(),
        });
    }
    if c1.dim() != p.dim() {
        return Err(RingError::DimensionMismatch {
            left: c1.dim(),
            right: p.dim(),
        }
        .into());
    }
    let ahat = genus_eval(&CharSeries::ahat(p.dim().max(1)), p)?;
    let half = c1.scale(&rat(1, 2)).exp()?;
    Ok(half.mul(&ahat)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::apply_series;
    use proptest::prelude::*;

    // Brute-force oracle for split total classes: with explicit roots
    // a_1..a_m in degree d, the genus is the literal product ∏_j Q(a_j h^d).
    // Independent of the Newton's-identities path.
    fn split_genus_oracle(q: &CharSeries, n: usize, roots: &[Rational], degree: usize) -> CohClass {
        let mut out = CohClass::one(n);
        for a in roots {
            let root_class = CohClass::monomial(n, degree, a.clone());
            let factor = apply_series(q.series(), &root_class).unwrap();
            out = out.mul(&factor).unwrap();
        }
        out
    }

    // Elementary symmetric polynomials of the roots, placed in degree d:
    // the split total class ∏_j (1 + a_j h^d t).
    fn split_total_class(
        kind: ClassKind,
        n: usize,
        roots: &[Rational],
        degree: usize,
    ) -> TotalClass {
        let mut elem: Vec<Rational> = vec![Rational::one()];
        for a in roots {
            let mut next = vec![Rational::zero(); elem.len() + 1];
            for (i, e) in elem.iter().enumerate() {
                next[i] += e;
                next[i + 1] += e * a;
            }
            elem = next;
        }
        let components = elem
            .into_iter()
            .enumerate()
            .map(|(i, e)| CohClass::monomial(n, degree * i, e))
            .collect();
        TotalClass::new(kind, n, components).unwrap()
    }

    #[test]
    fn cpn_class_tables() {
        // p_i(CP^2): p_1 = 3h^2
        let p = pontryagin_cpn(2);
        assert_eq!(p.component(1), CohClass::monomial(2, 2, rat_int(3)));
        // p_i(CP^4): p_1 = 5h^2, p_2 = 10h^4
        let p = pontryagin_cpn(4);
        assert_eq!(p.component(1), CohClass::monomial(4, 2, rat_int(5)));
        assert_eq!(p.component(2), CohClass::monomial(4, 4, rat_int(10)));
        // CP^1 has no p_i in range
        assert_eq!(pontryagin_cpn(1).components().len(), 1);

        // c_i(CP^3): c_1 = 4h and ∫ c_1^3 = 64
        let c = chern_cpn(3);
        assert_eq!(c.component(1), CohClass::monomial(3, 1, rat_int(4)));
        assert_eq!(c.component(1).pow(3).integrate(), rat_int(64));
        // c_2(CP^2) = 3h^2 integrates to the Euler characteristic 3
        let c = chern_cpn(2);
        assert_eq!(c.component(2).integrate(), rat_int(3));
        // c_1(CP^1) = 2h
        assert_eq!(
            chern_cpn(1).component(1),
            CohClass::monomial(1, 1, rat_int(2))
        );
    }

    #[test]
    fn p1_and_c2_conversions() {
        // n = 2: c1 = 3h, c2 = 3h^2 -> p1 = 9h^2 - 6h^2 = 3h^2
        let c1 = CohClass::h(2).scale(&rat_int(3));
        let c2 = CohClass::monomial(2, 2, rat_int(3));
        let p1 = p1_from_chern(&c1, &c2).unwrap();
        assert_eq!(p1, CohClass::monomial(2, 2, rat_int(3)));
        // signature route: (1/3) ∫ p1 = 1
        assert_eq!(p1.integrate() / rat_int(3), rat_int(1));
        // zero classes
        let z = CohClass::zero(3);
        assert!(p1_from_chern(&z, &z).unwrap().is_zero());
        // mismatch
        assert!(p1_from_chern(&CohClass::h(2), &CohClass::h(3)).is_err());

        assert_eq!(c2_from_equality(2), CohClass::monomial(2, 2, rat_int(3)));
        assert_eq!(c2_from_equality(4), CohClass::monomial(4, 2, rat_int(10)));
        assert_eq!(c2_from_equality(3), CohClass::monomial(3, 2, rat_int(6)));
    }

    #[test]
    fn consistency_of_pontryagin_table_with_chern_table() {
        // p1 from the Chern table equals the Pontryagin table entry for all n.
        for n in 2..=10 {
            let c = chern_cpn(n);
            let p1 = p1_from_chern(&c.component(1), &c.component(2)).unwrap();
            assert_eq!(p1, pontryagin_cpn(n).component(1), "n = {n}");
        }
    }

    #[test]
    fn ahat_of_cp2() {
        let a = genus_eval(&CharSeries::ahat(4), &pontryagin_cpn(2)).unwrap();
        // 1 - p1/24 = 1 - h^2/8
        assert_eq!(
            a,
            CohClass::from_coeffs(vec![rat_int(1), rat_int(0), rat(-1, 8)])
        );
        assert_eq!(a.integrate(), rat(-1, 8));
    }

    #[test]
    fn l_genus_of_cp2_is_signature() {
        let l = genus_eval(&CharSeries::l(4), &pontryagin_cpn(2)).unwrap();
        // 1 + p1/3
        assert_eq!(
            l,
            CohClass::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(1)])
        );
        assert_eq!(l.integrate(), rat_int(1));
    }

    #[test]
    fn todd_genus_of_cpn_is_one() {
        for n in 1..=12 {
            let td = genus_eval(&CharSeries::todd(n.max(2)), &chern_cpn(n)).unwrap();
            assert_eq!(td.integrate(), rat_int(1), "n = {n}");
        }
    }

    #[test]
    fn series_coefficients() {
        // L_1 = 1/3 and Â_1 = -1/24 in the root variable u
        assert_eq!(
            CharSeries::l(4).series().coefficient(1).unwrap(),
            &rat(1, 3)
        );
        assert_eq!(
            CharSeries::ahat(4).series().coefficient(1).unwrap(),
            &rat(-1, 24)
        );
    }

    #[test]
    fn todd_class_examples() {
        // n = 3 Fano branch: c1 = 4h
        let td = todd_class(&CohClass::h(3).scale(&rat_int(4)), &pontryagin_cpn(3)).unwrap();
        assert_eq!(td.integrate(), rat_int(1));
        // trivial input
        let td = todd_class(
            &CohClass::zero(2),
            &TotalClass::trivial(ClassKind::Pontryagin, 2),
        )
        .unwrap();
        assert_eq!(td, CohClass::one(2));
        // n = 2 negative branch: c1 = -3h also yields 1
        let td = todd_class(&CohClass::h(2).scale(&rat_int(-3)), &pontryagin_cpn(2)).unwrap();
        assert_eq!(td.integrate(), rat_int(1));
        // kind check
        assert!(todd_class(&CohClass::h(2), &chern_cpn(2)).is_err());
    }

    #[test]
    fn todd_two_routes_agree_on_cpn() {
        // Chern-root evaluation vs e^{c1/2}·Â on Pontryagin data.
        for n in 1..=10 {
            let direct = genus_eval(&CharSeries::todd(n.max(2)), &chern_cpn(n)).unwrap();
            let c1 = CohClass::h(n).scale(&rat_int(n as i64 + 1));
            let via_ahat = todd_class(&c1, &pontryagin_cpn(n)).unwrap();
            assert_eq!(direct, via_ahat, "n = {n}");
        }
    }

    #[test]
    fn genus_eval_kind_checks() {
        assert!(matches!(
            genus_eval(&CharSeries::todd(4), &pontryagin_cpn(2)),
            Err(GenusError::KindMismatch { .. })
        ));
        assert!(matches!(
            genus_eval(&CharSeries::ahat(4), &chern_cpn(2)),
            Err(GenusError::KindMismatch { .. })
        ));
        assert!(matches!(
            genus_eval(&CharSeries::ahat(1), &pontryagin_cpn(4)),
            Err(GenusError::OrderTooSmall { .. })
        ));
        assert!(CharSeries::custom(TruncatedSeries::x(3)).is_err());
    }

    #[test]
    fn split_class_oracle_agrees_with_newton_route() {
        // (1 + [ω²]x)^{n+1}: all roots equal h², the Â factorization of CP^n.
        for n in [2usize, 3, 4, 6] {
            let q = CharSeries::ahat(n);
            let roots = vec![Rational::one(); n + 1];
            let split = split_total_class(ClassKind::Pontryagin, n, &roots, 2);
            assert_eq!(split, pontryagin_cpn(n), "split class vs table, n = {n}");
            let via_newton = genus_eval(&q, &split).unwrap();
            let via_product = split_genus_oracle(&q, n, &roots, 2);
            assert_eq!(via_newton, via_product, "n = {n}");
        }
    }

    fn rational_roots(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-6i64..=6, 1i64..=3), 1..=max_len)
            .prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // Newton's-identities route equals the brute-force product on split
        // classes with explicit rational roots (m ≤ 4, n ≤ 8).
        #[test]
        fn newton_equals_split_product(roots in rational_roots(4), n in 2usize..=8) {
            let q = CharSeries::ahat(n);
            let split = split_total_class(ClassKind::Pontryagin, n, &roots, 2);
            prop_assert_eq!(
                genus_eval(&q, &split).unwrap(),
                split_genus_oracle(&q, n, &roots, 2)
            );
        }

        #[test]
        fn newton_equals_split_product_chern(roots in rational_roots(4), n in 2usize..=6) {
            let q = CharSeries::todd(n);
            let split = split_total_class(ClassKind::Chern, n, &roots, 1);
            prop_assert_eq!(
                genus_eval(&q, &split).unwrap(),
                split_genus_oracle(&q, n, &roots, 1)
            );
        }

        // Multiplicativity: the genus of a Whitney product is the product of
        // the genera — the defining property of a multiplicative sequence.
        #[test]
        fn multiplicative_under_whitney_product(
            roots_a in rational_roots(3),
            roots_b in rational_roots(3),
            n in 2usize..=6,
        ) {
            let q = CharSeries::ahat(n);
            let a = split_total_class(ClassKind::Pontryagin, n, &roots_a, 2);
            let b = split_total_class(ClassKind::Pontryagin, n, &roots_b, 2);
            let product = a.product(&b).unwrap();
            let lhs = genus_eval(&q, &product).unwrap();
            let rhs = genus_eval(&q, &a).unwrap().mul(&genus_eval(&q, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
