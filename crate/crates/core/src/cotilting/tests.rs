use super::*;
use crate::algebra::parse_algebra;
use crate::fixtures;
use crate::homological::EngineConfig;
use crate::module::{injective, simple};

fn alg(text: &str) -> Algebra {
    parse_algebra(text).unwrap()
}

fn engine() -> Engine {
    Engine::new(EngineConfig::default())
}

#[test]
fn perpendicular_membership() {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    assert!(in_perp_t(&e, &dual_regular(&a), &dual_regular(&a)).unwrap());
    assert!(in_perp_t(&e, &regular(&a), &regular(&a)).unwrap());
    let d = alg(fixtures::DUAL_NUMBERS);
    assert!(in_perp_t(&e, &simple(&d, 0), &regular(&d)).unwrap());
}

#[test]
fn cotilting_reports_over_a3() {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    for t in [Named::dual_regular(&a), Named::regular(&a)] {
        let r = check_cotilting(&e, &t);
        assert_eq!(r.status, CotiltingStatus::Cotilting, "{r:?}");
    }
    let r = check_cotilting(&e, &Named::simple(&a, 1));
    assert_eq!(r.status, CotiltingStatus::NotCotilting);
    assert_eq!(r.cogenerates, Some(false));
    for text in [fixtures::DUAL_NUMBERS, fixtures::HEREDITARY_A2, fixtures::COMMUTATIVE_SQUARE] {
        let b = alg(text);
        assert_eq!(check_cotilting(&e, &Named::dual_regular(&b)).status, CotiltingStatus::Cotilting);
    }
}

#[test]
fn coresolutions_by_cotilting_modules() {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    let dl = Named::dual_regular(&a);
    let c = cotilting_coresolution(&e, &dl.rep, &dl).unwrap();
    assert_eq!(c.length(), 0);
    let lam = Named::regular(&a);
    let c = cotilting_coresolution(&e, &lam.rep, &lam).unwrap();
    assert_eq!(c.length(), 0);
    assert!(e.is_isomorphic(&c.terms[0], &lam.rep).unwrap());
    let c = cotilting_coresolution(&e, &simple(&a, 1), &dl).unwrap();
    assert_eq!(c.length(), 1);
    assert!(e.is_isomorphic(&c.terms[0], &injective(&a, 1)).unwrap());
    assert!(e.is_isomorphic(&c.terms[1], &injective(&a, 2)).unwrap());
    assert!(c.maps[1].compose(&c.maps[0]).is_zero());
    assert!(c.maps[0].is_injective() && c.maps[1].is_surjective());
}

#[test]
fn symmetry_over_a3() {
    let e = engine();
    let a = alg(fixtures::LINEAR_N2);
    let v = check_cotilting_symmetry(&e, &a, &Named::regular(&a)).unwrap();
    assert_eq!(v.outcome, Outcome::Pass, "{v}");
    assert_eq!(v.value("id Lambda over the opposite algebra"), Some(&HomDim::Finite(2).into()));
    let v = check_cotilting_symmetry(&e, &a, &Named::dual_regular(&a)).unwrap();
    assert_eq!(v.outcome, Outcome::PremiseNotMet);
    let d = alg(fixtures::DUAL_NUMBERS);
    assert_eq!(check_cotilting_symmetry(&e, &d, &Named::regular(&d)).unwrap().outcome, Outcome::Pass);
}

#[test]
fn duality_identity_over_dual_numbers() {
    let e = engine();
    let d = alg(fixtures::DUAL_NUMBERS);
    let mods = [Named::simple(&d, 0), Named::regular(&d)];
    for m in &mods {
        for n in &mods {
            for i in 1..=3 {
                let v = ext_tau_duality_identity(&e, &d, m, n, i).unwrap();
                assert_eq!(v.outcome, Outcome::Pass, "{v}");
            }
        }
    }
}

#[test]
fn orbits_over_dual_numbers() {
    let e = engine();
    let d = alg(fixtures::DUAL_NUMBERS);
    for n in 1..=2 {
        let o = omega_n_tau_orbit(&e, &simple(&d, 0), n, 8).unwrap();
        assert_eq!(o.period, Some(1));
    }
    let o = omega_n_tau_orbit(&e, &regular(&d), 1, 8).unwrap();
    assert!(o.degenerate && o.period.is_none());
    let v = check_orbit_closure(&e, &[Named::simple(&d, 0), Named::regular(&d)], 1).unwrap();
    assert_eq!(v.outcome, Outcome::Pass);
}
