use super::*;
use crate::algebra::parse_algebra;
use crate::fixtures;
use crate::homological::EngineConfig;
use crate::module::{projective, simple};

fn alg(text: &str) -> Algebra {
    parse_algebra(text).unwrap()
}

fn engine() -> Engine {
    Engine::new(EngineConfig::default())
}

fn label_set(list: &[Named]) -> Vec<&str> {
    list.iter().map(|x| x.name.as_str()).collect()
}

fn witness_names(v: &Verdict) -> Vec<&str> {
    v.witnesses.iter().map(|w| w.name.as_str()).collect()
}

#[test]
fn nakayama_ambient_over_a3() {
    let a = alg(fixtures::LINEAR_N2);
    let amb = nakayama_ambient(&a).unwrap();
    let mut names = label_set(&amb);
    names.sort();
    assert_eq!(names, vec!["P(1)", "P(2)", "P(3)", "S(2)", "S(3)"]);
}

#[test]
fn perp_of_regular_over_a3() {
    let a = alg(fixtures::LINEAR_N2);
    let e = engine();
    let subcat = SubcategorySpec::nakayama("add Lambda", &a, vec![Named::regular(&a)]).unwrap();
    let left = perp_filter(&e, &subcat, 1, Side::Left);
    let mut names = label_set(&left);
    names.sort();
    assert_eq!(names, vec!["P(1)", "P(2)", "P(3)", "S(3)"]);
}

#[test]
fn perp_over_hereditary_a2() {
    let a = alg(fixtures::HEREDITARY_A2);
    let e = engine();
    let ambient = vec![Named::projective(&a, 0), Named::projective(&a, 1), Named::simple(&a, 1)];
    let subcat = SubcategorySpec::new("add Lambda", vec![Named::regular(&a)], ambient, Provenance::UserSupplied);
    assert_eq!(label_set(&perp_filter(&e, &subcat, 1, Side::Left)), vec!["P(1)", "P(2)"]);
}

#[test]
fn maximal_orthogonal_over_a3() {
    let a = alg(fixtures::LINEAR_N2);
    let e = engine();
    let gens = vec![
        Named::projective(&a, 0),
        Named::projective(&a, 1),
        Named::projective(&a, 2),
        Named::simple(&a, 2),
    ];
    let subcat = SubcategorySpec::nakayama("C", &a, gens.clone()).unwrap();
    assert_eq!(check_maximal_orthogonal(&e, &subcat, 1).unwrap().outcome, Outcome::Pass);
    let short = SubcategorySpec::nakayama("C'", &a, gens[..3].to_vec()).unwrap();
    let v = check_maximal_orthogonal(&e, &short, 1).unwrap();
    assert!(v.failed() && !v.witnesses.is_empty());
}

#[test]
fn regular_over_dual_numbers_is_not_maximal() {
    let a = alg(fixtures::DUAL_NUMBERS);
    let e = engine();
    let ambient = vec![Named::regular(&a), Named::simple(&a, 0)];
    let subcat = SubcategorySpec::new("add Lambda", vec![Named::regular(&a)], ambient, Provenance::UserSupplied);
    let v = check_maximal_orthogonal(&e, &subcat, 1).unwrap();
    assert!(v.failed());
    assert_eq!(witness_names(&v), vec!["S(1)"]);
}

#[test]
fn semisimple_simples_are_maximal() {
    let a = alg(fixtures::SEMISIMPLE);
    let e = engine();
    let simples: Vec<Named> = (0..a.num_vertices()).map(|v| Named::simple(&a, v)).collect();
    let subcat = SubcategorySpec::new("simples", simples.clone(), simples, Provenance::UserSupplied);
    for n in 1..3 {
        assert_eq!(check_maximal_orthogonal(&e, &subcat, n).unwrap().outcome, Outcome::AmbientLimited);
    }
    assert_eq!(perp_filter(&e, &subcat, 2, Side::Right).len(), a.num_vertices());
}

#[test]
fn classification_over_radical_square_zero_family() {
    let e = engine();
    for n in 2..=4 {
        let a = alg(&fixtures::linear_radical_square_zero(n));
        let v = classify_simples(&e, &a, n, None).unwrap();
        assert_eq!(v.outcome, Outcome::Pass, "{v}");
        assert_eq!(e.pd(&simple(&a, n - 1)), HomDim::Finite(n - 1));
        assert_eq!(e.id(&simple(&a, n - 1)), HomDim::Finite(1));
        assert_eq!(e.id(&projective(&a, 0)), HomDim::Finite(n));
        let t = check_trivial_maximal(&e, &a, n).unwrap();
        assert_eq!(t.outcome, Outcome::Pass, "{t}");
    }
}

#[test]
fn classification_with_certified_subcategory() {
    let a = alg(fixtures::LINEAR_N2);
    let e = engine();
    let subcat = SubcategorySpec::trivial(&a, nakayama_ambient(&a).unwrap(), Provenance::NakayamaEnumerated);
    let v = classify_simples(&e, &a, 2, Some(&subcat)).unwrap();
    assert_eq!(v.outcome, Outcome::Pass, "{v}");
    let eq = check_auslander_equivalences(&e, &a, 2, &subcat).unwrap();
    assert_eq!(eq.outcome, Outcome::Pass, "{eq}");
    let ah = check_almost_hereditary_criterion(&e, &a, &subcat.ambient, Provenance::NakayamaEnumerated).unwrap();
    assert_eq!(ah.outcome, Outcome::Pass, "{ah}");
}

#[test]
fn envelope_approximation_over_a3() {
    let a = alg(fixtures::LINEAR_N2);
    let e = engine();
    let subcat = SubcategorySpec::trivial(&a, nakayama_ambient(&a).unwrap(), Provenance::NakayamaEnumerated);
    for x in [Named::simple(&a, 1), Named::simple(&a, 2), Named::injective(&a, 0), Named::simple(&a, 0)] {
        let v = check_injective_envelope_approximation(&e, &a, &subcat, &x).unwrap();
        assert_eq!(v.outcome, Outcome::Pass, "{v}");
    }
}

#[test]
fn square_with_tail_has_no_maximal_subcategory() {
    let a = alg(fixtures::COMMUTATIVE_SQUARE);
    let e = engine();
    let ambient = standard_ambient(&a);
    let v = check_almost_hereditary_criterion(&e, &a, &ambient, Provenance::UserSupplied).unwrap();
    assert!(v.failed(), "{v}");
    let w = witness_names(&v);
    assert!(w.contains(&"S(4)") || w.contains(&"S(5)"), "{v}");
    let t = check_trivial_maximal(&e, &a, 2).unwrap();
    assert!(t.failed(), "{t}");
    assert_eq!(t.value("trivial route"), Some(&false.into()));
    assert_eq!(t.value("nontrivial route"), Some(&false.into()));
}

#[test]
fn premises_are_reported() {
    let e = engine();
    let ss = alg(fixtures::SEMISIMPLE);
    assert_eq!(classify_simples(&e, &ss, 2, None).unwrap().outcome, Outcome::PremiseNotMet);
    assert_eq!(check_trivial_maximal(&e, &ss, 2).unwrap().outcome, Outcome::PremiseNotMet);
    let h = alg(fixtures::HEREDITARY_A2);
    let amb = standard_ambient(&h);
    let v = check_almost_hereditary_criterion(&e, &h, &amb, Provenance::UserSupplied).unwrap();
    assert_eq!(v.outcome, Outcome::PremiseNotMet);
}
