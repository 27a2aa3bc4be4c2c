//! Quantified invariants of the ideal calculus and the series arithmetic,
//! checked on randomized inputs against independent brute-force oracles.

use num_rational::BigRational;
use proptest::prelude::*;
use z2lab::ideal::RelativeIdeal;
use z2lab::semigroup::NumericalSemigroup;
use z2lab::series::LaurentSeries;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn semigroup_strategy() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..16, 1..=4)
        .prop_filter("gcd must be 1", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|g| NumericalSemigroup::new(&g).unwrap())
}

fn ideal_gens_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-10i64..25, 1..=4)
}

/// Brute-force membership: z ∈ ∪ (g + S), with S expanded from its
/// generators by dynamic programming. Independent of the window arithmetic.
fn brute_force_member(s: &NumericalSemigroup, gens: &[i64], z: i64) -> bool {
    gens.iter().any(|&g| {
        let d = z - g;
        if d < 0 {
            return false;
        }
        let d = d as usize;
        let mut reach = vec![false; d + 1];
        reach[0] = true;
        for i in 0..=d {
            if reach[i] {
                for &sg in s.generators() {
                    let t = i + sg as usize;
                    if t <= d {
                        reach[t] = true;
                    }
                }
            }
        }
        reach[d]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn window_membership_matches_generator_expansion(
        s in semigroup_strategy(),
        gens in ideal_gens_strategy(),
        probes in prop::collection::vec(-12i64..60, 8)
    ) {
        let e = RelativeIdeal::from_gens(&s, &gens).unwrap();
        for z in probes {
            prop_assert_eq!(e.contains(z), brute_force_member(&s, &gens, z), "z = {}", z);
        }
    }

    #[test]
    fn canonical_duality(s in semigroup_strategy(), gens in ideal_gens_strategy()) {
        let e = RelativeIdeal::from_gens(&s, &gens).unwrap();
        let k = RelativeIdeal::canonical(&s);
        let dual = k.colon(&e).unwrap();
        let double = k.colon(&dual).unwrap();
        prop_assert_eq!(double, e);
    }

    #[test]
    fn unit_ideal_fixes_m_iff_fixes_b(s in semigroup_strategy(), gens in ideal_gens_strategy()) {
        let m = RelativeIdeal::maximal(&s);
        let b = m.colon(&m).unwrap();
        let e = RelativeIdeal::from_gens(&s, &gens).unwrap();
        let em = e.product(&m).unwrap();
        let eb = e.product(&b).unwrap();
        prop_assert_eq!(em == m, eb == b);
        // and each statement holds for members of B shifted to contain 0
        let f = RelativeIdeal::from_gens(&s, &[0]).unwrap();
        prop_assert!(f.product(&m).unwrap() == m);
    }

    #[test]
    fn trace_of_product_in_intersection(
        s in semigroup_strategy(),
        g1 in ideal_gens_strategy(),
        g2 in ideal_gens_strategy()
    ) {
        let e = RelativeIdeal::from_gens(&s, &g1).unwrap();
        let f = RelativeIdeal::from_gens(&s, &g2).unwrap();
        let tr_ef = e.product(&f).unwrap().trace();
        let cap = e.trace().intersect(&f.trace()).unwrap();
        prop_assert!(tr_ef.is_subset(&cap));
    }

    #[test]
    fn quotient_lengths_are_additive(
        s in semigroup_strategy(),
        g1 in ideal_gens_strategy(),
        extra1 in -10i64..25,
        extra2 in -10i64..25,
    ) {
        // F ⊆ G ⊆ E by enlarging generator sets
        let f = RelativeIdeal::from_gens(&s, &g1).unwrap();
        let mut g2 = g1.clone();
        g2.push(extra1);
        let g = RelativeIdeal::from_gens(&s, &g2).unwrap();
        let mut g3 = g2.clone();
        g3.push(extra2);
        let e = RelativeIdeal::from_gens(&s, &g3).unwrap();
        let total = e.length_quotient(&f).unwrap();
        prop_assert_eq!(
            total,
            e.length_quotient(&g).unwrap() + g.length_quotient(&f).unwrap()
        );
    }

    #[test]
    fn colon_is_division(
        s in semigroup_strategy(),
        g1 in ideal_gens_strategy(),
        g2 in ideal_gens_strategy()
    ) {
        // (E − F) + F ⊆ E, and E − F matches the direct quantifier oracle
        let e = RelativeIdeal::from_gens(&s, &g1).unwrap();
        let f = RelativeIdeal::from_gens(&s, &g2).unwrap();
        let q = e.colon(&f).unwrap();
        prop_assert!(q.product(&f).unwrap().is_subset(&e));
        for z in q.min() - 3..q.conductor() + 3 {
            let direct = (f.min()..f.conductor().max(e.conductor() - z) + 1)
                .filter(|&w| f.contains(w))
                .all(|w| e.contains(z + w));
            prop_assert_eq!(q.contains(z), direct, "z = {}", z);
        }
    }

    #[test]
    fn trace_is_translation_invariant(
        s in semigroup_strategy(),
        gens in ideal_gens_strategy(),
        d in -7i64..8
    ) {
        let e = RelativeIdeal::from_gens(&s, &gens).unwrap();
        prop_assert_eq!(e.trace(), e.shift(d).trace());
        prop_assert!(e.trace().is_subset(&RelativeIdeal::unit(&s)));
    }

    #[test]
    fn generators_regenerate(s in semigroup_strategy(), gens in ideal_gens_strategy()) {
        let e = RelativeIdeal::from_gens(&s, &gens).unwrap();
        let back = RelativeIdeal::from_gens(&s, &e.min_gens()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn series_double_inverse_membership(
        num in -6i64..7,
        den in 1i64..5,
        exp in 0i64..4,
    ) {
        // α = 1 + (num/den)·t^(3+exp) over <4,7,9>; inverse of inverse keeps
        // membership decisions intact where defined
        let s = NumericalSemigroup::new(&[4, 7, 9]).unwrap();
        let m = RelativeIdeal::maximal(&s);
        let b = m.colon(&m).unwrap();
        let alpha = LaurentSeries::new(
            [
                (0, BigRational::from_integer(1.into())),
                (3 + exp, BigRational::new(num.into(), den.into())),
            ],
            60,
        )
        .unwrap();
        let double = alpha.invert(40).unwrap().invert(20).unwrap();
        prop_assert_eq!(
            alpha.member_of(&b).unwrap(),
            double.member_of(&b).unwrap()
        );
    }

    #[test]
    fn inverse_of_non_b_member_stays_outside_b(
        c1 in -5i64..6,
        c3 in -5i64..6,
        c6 in -5i64..6,
        c0 in 1i64..5,
    ) {
        // α ∈ (m:m²) ∖ B over <4,7,9>: unit constant term plus support in
        // {1,3,6}, at least one nonzero; then α⁻¹ ∉ B
        prop_assume!(c1 != 0 || c3 != 0 || c6 != 0);
        let s = NumericalSemigroup::new(&[4, 7, 9]).unwrap();
        let m = RelativeIdeal::maximal(&s);
        let b = m.colon(&m).unwrap();
        let m2 = m.colon(&m.product(&m).unwrap()).unwrap();
        let alpha = LaurentSeries::new(
            [
                (0, BigRational::from_integer(c0.into())),
                (1, BigRational::from_integer(c1.into())),
                (3, BigRational::from_integer(c3.into())),
                (6, BigRational::from_integer(c6.into())),
            ],
            60,
        )
        .unwrap();
        prop_assert!(alpha.member_of(&m2).unwrap());
        prop_assert!(!alpha.member_of(&b).unwrap());
        let inv = alpha.invert(30).unwrap();
        prop_assert!(!inv.member_of(&b).unwrap());
    }

    #[test]
    fn multiplication_into_module_matches_colon_support(
        s in semigroup_strategy(),
        g1 in ideal_gens_strategy(),
        g2 in ideal_gens_strategy(),
        terms in prop::collection::vec((-4i64..10, -4i64..5), 1..4),
    ) {
        let e = RelativeIdeal::from_gens(&s, &g1).unwrap();
        let f = RelativeIdeal::from_gens(&s, &g2).unwrap();
        let q = e.colon(&f).unwrap();
        let prec = e.conductor().max(q.conductor()) + 16;
        let alpha = LaurentSeries::new(
            terms
                .iter()
                .map(|&(ex, c)| (ex, BigRational::from_integer(c.into()))),
            prec,
        )
        .unwrap();
        // α·(module of F) ⊆ module of E ⟺ support(α) ⊆ E − F,
        // tested on the module generators t^g of F
        let lhs = f.min_gens().iter().all(|&g| {
            let shifted = alpha
                .mul(&LaurentSeries::monomial(g, prec + g.abs() + 1).unwrap());
            shifted.member_of(&e).unwrap()
        });
        prop_assert_eq!(lhs, alpha.member_of(&q).unwrap());
    }
}

#[test]
fn two_generated_square_has_monomial_reduction() {
    // whenever μ(E) = μ(E+E) = 2, E+E = a+E for some minimal generator a
    let mut checked = 0usize;
    for gens in [&[3, 4, 5][..], &[4, 7, 9], &[2, 5], &[5, 6, 7, 8, 9]] {
        let s = NumericalSemigroup::new(gens).unwrap();
        for g1 in -4i64..8 {
            for g2 in g1 + 1..8 {
                let e = RelativeIdeal::from_gens(&s, &[g1, g2]).unwrap();
                if e.mu() != 2 {
                    continue;
                }
                let ee = e.product(&e).unwrap();
                if ee.mu() != 2 {
                    continue;
                }
                checked += 1;
                let found = e.min_gens().iter().any(|&a| ee == e.shift(a));
                assert!(found, "{s} with E = <{g1},{g2}>");
            }
        }
    }
    assert!(checked > 20, "only {checked} instances exercised");
}

#[test]
fn maximal_ideal_trace_detects_dvr() {
    for s in z2lab::semigroup::enumerate_family(12, 3) {
        let m = RelativeIdeal::maximal(&s);
        assert_eq!(m.trace() == m, !s.is_dvr(), "{s}");
    }
    let dvr = NumericalSemigroup::new(&[1]).unwrap();
    let m = RelativeIdeal::maximal(&dvr);
    assert_eq!(m.trace(), RelativeIdeal::unit(&dvr));
}

#[test]
fn m_times_canonical_colon_m_matches(
) {
    // m·(K−m) = m·K for every non-DVR member of the family
    for s in z2lab::semigroup::enumerate_family(12, 3) {
        let m = RelativeIdeal::maximal(&s);
        let k = RelativeIdeal::canonical(&s);
        let km = k.colon(&m).unwrap();
        assert_eq!(
            m.product(&km).unwrap(),
            m.product(&k).unwrap(),
            "{s}"
        );
    }
}

#[test]
fn type_via_colon_length() {
    // r(I) = ℓ((I−m)/I) against the constructor's pseudo-Frobenius count
    for s in z2lab::semigroup::enumerate_family(10, 3) {
        assert_eq!(RelativeIdeal::unit(&s).type_of_ideal(), s.type_t(), "{s}");
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.mu(), s.type_t(), "mu(K) = type at {s}");
    }
}
