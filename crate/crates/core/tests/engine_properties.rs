mod common;

use common::{alg, alg_f2, all_f2_modules, brute_force_hom_count, engine, fixture_algebras, sample_modules, sum_of};
use std::sync::OnceLock;

use proptest::prelude::*;
use quiverhom::fixtures;
use quiverhom::homological::{is_injective, is_projective, Engine};
use quiverhom::module::{direct_sum, dualize, hom_basis, regular, simple, Named, Rep};

fn random_sum(fixture: usize, picks: &[usize]) -> (quiverhom::algebra::Algebra, Rep) {
    let algs = fixture_algebras();
    let (_, a) = &algs[fixture % algs.len()];
    let pool = sample_modules(a);
    let m = sum_of(a, &pool, picks);
    (a.clone(), m)
}

fn pair(fixture: usize, left: &[usize], right: &[usize]) -> (quiverhom::algebra::Algebra, Rep, Rep) {
    let algs = fixture_algebras();
    let (_, a) = &algs[fixture % algs.len()];
    let pool = sample_modules(a);
    (a.clone(), sum_of(a, &pool, left), sum_of(a, &pool, right))
}

fn f2_modules(which: usize) -> &'static [Rep] {
    static MODS: OnceLock<Vec<Vec<Rep>>> = OnceLock::new();
    let all = MODS.get_or_init(|| {
        [fixtures::HEREDITARY_A2, fixtures::DUAL_NUMBERS].iter().map(|t| all_f2_modules(&alg_f2(t), 4)).collect()
    });
    &all[which]
}

fn differentials_in_radical(e: &Engine, m: &Rep, length: usize) -> bool {
    let res = e.resolution(m, length);
    (1..res.differentials.len()).all(|k| {
        let (_, to_top) = res.terms[k - 1].rep.top();
        to_top.compose(&res.differentials[k]).is_zero()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ext_balance(f in 0usize..7, l in prop::collection::vec(0usize..16, 1..3), r in prop::collection::vec(0usize..16, 1..3)) {
        let (_, m, n) = pair(f, &l, &r);
        let e = engine();
        prop_assert_eq!(e.ext_dims(&m, &n, 3).values, e.ext_via_injective(&m, &n, 3).values);
    }

    #[test]
    fn resolutions_are_minimal(f in 0usize..7, picks in prop::collection::vec(0usize..16, 1..4)) {
        let (a, m) = random_sum(f, &picks);
        let e = engine();
        prop_assert!(differentials_in_radical(&e, &m, 5));
        let res = e.resolution(&m, 3);
        for v in 0..a.num_vertices() {
            let inj = e.ext_via_injective(&m, &simple(&a, v), 3);
            for k in 0..res.terms.len().min(4) {
                prop_assert_eq!(res.multiplicities(k)[v], inj.get(k));
            }
        }
    }

    #[test]
    fn duality_transports_hom_ext_and_dimensions(f in 0usize..7, l in prop::collection::vec(0usize..16, 1..3), r in prop::collection::vec(0usize..16, 1..3)) {
        let (_, m, n) = pair(f, &l, &r);
        let e = engine();
        let (dm, dn) = (dualize(&m), dualize(&n));
        prop_assert_eq!(hom_basis(&m, &n).len(), hom_basis(&dn, &dm).len());
        prop_assert_eq!(e.ext(&m, &n, 1), e.ext(&dn, &dm, 1));
        prop_assert_eq!(e.pd(&m), e.id(&dm));
        prop_assert_eq!(e.id(&m), e.pd(&dm));
        prop_assert_eq!(is_projective(&m), is_injective(&dm));
        let back = dualize(&dm);
        prop_assert_eq!(back.dims(), m.dims());
        prop_assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn hom_and_ext_are_additive(f in 0usize..7, l in prop::collection::vec(0usize..16, 2..4), r in 0usize..16) {
        let algs = fixture_algebras();
        let (_, a) = &algs[f % algs.len()];
        let pool = sample_modules(a);
        let n = &pool[r % pool.len()].rep;
        let parts: Vec<Rep> = l.iter().map(|&i| pool[i % pool.len()].rep.clone()).collect();
        let sum = direct_sum(a, &parts).module;
        let e = engine();
        let hom: usize = parts.iter().map(|p| hom_basis(p, n).len()).sum();
        prop_assert_eq!(hom_basis(&sum, n).len(), hom);
        let ext: usize = parts.iter().map(|p| e.ext(p, n, 1)).sum();
        prop_assert_eq!(e.ext(&sum, n, 1), ext);
        let pd = parts.iter().map(|p| e.pd(p)).reduce(|x, y| x.max(y)).unwrap();
        prop_assert_eq!(e.pd(&sum), pd);
    }

    #[test]
    fn top_ext_against_regular_nonvanishing(f in 0usize..7, picks in prop::collection::vec(0usize..16, 1..3)) {
        let (a, m) = random_sum(f, &picks);
        let e = engine();
        if let Some(n) = e.pd(&m).finite() {
            prop_assert!(e.ext(&m, &regular(&a), n) != 0);
        }
    }

    #[test]
    fn decomposition_counts_summands(f in 0usize..7, picks in prop::collection::vec(0usize..16, 1..4)) {
        let (a, m) = random_sum(f, &picks);
        let e = engine();
        let d = e.decompose(&m).unwrap();
        prop_assert_eq!(d.count(), picks.len());
        let mut reversed = picks.clone();
        reversed.reverse();
        let pool = sample_modules(&a);
        prop_assert!(e.is_isomorphic(&m, &sum_of(&a, &pool, &reversed)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn f2_hom_matches_brute_force(which in 0usize..2, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let mods = f2_modules(which);
        let (m, n) = (i.get(mods), j.get(mods));
        prop_assert_eq!(brute_force_hom_count(m, n), 1u64 << hom_basis(m, n).len());
    }
}

#[test]
fn f2_hom_exhaustive_for_small_pairs() {
    for text in [fixtures::HEREDITARY_A2, fixtures::DUAL_NUMBERS] {
        let a = alg_f2(text);
        let mods = all_f2_modules(&a, 3);
        for m in &mods {
            for n in mods.iter().filter(|n| n.total_dim() + m.total_dim() <= 4) {
                assert_eq!(brute_force_hom_count(m, n), 1u64 << hom_basis(m, n).len(), "{m:?} -> {n:?}");
            }
        }
    }
}

#[test]
fn f2_enumeration_sizes() {
    // counted by hand: 1x1 square-zero matrices (1), 2x2 (4), 3x3 (22)
    let d = alg_f2(fixtures::DUAL_NUMBERS);
    let by_dim = |k: usize| all_f2_modules(&d, 3).iter().filter(|m| m.total_dim() == k).count();
    assert_eq!((by_dim(1), by_dim(2), by_dim(3)), (1, 4, 22));
    let h = alg_f2(fixtures::HEREDITARY_A2);
    // dimension vectors (1,0), (0,1), (2,0), (0,2) once each, (1,1) with either map
    assert_eq!(all_f2_modules(&h, 2).len(), 6);
}

#[test]
fn engine_conditions_on_fixtures() {
    let e = engine();
    for (name, a) in fixture_algebras() {
        assert!(!e.no_common_summand_check(&a).failed(), "{name}");
        assert!(!e.check_simple_socle_placement(&a).failed(), "{name}");
    }
    for n in 2..=4 {
        let a = alg(&fixtures::linear_radical_square_zero(n));
        assert!(e.check_injective_simple_band(&a, n).passed(), "n = {n}");
    }
    let a = alg(fixtures::LINEAR_N2);
    let c = [Named::regular(&a), Named::dual_regular(&a)];
    for x in sample_modules(&a) {
        assert!(e.check_approximation_cokernel(&x, &c).unwrap().passed(), "{}", x.name);
    }
}
