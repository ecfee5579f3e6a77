use super::*;
use crate::algebra::parse_algebra;
use crate::fixtures;

fn a3() -> Algebra {
    parse_algebra(fixtures::LINEAR_N2).unwrap()
}

fn cfg() -> SplitConfig {
    SplitConfig::default()
}

#[test]
fn standard_module_dimensions() {
    let a = a3();
    assert_eq!(projective(&a, 1).dims(), &[1, 1, 0]);
    assert_eq!(projective(&a, 0).dims(), &[1, 0, 0]);
    assert_eq!(injective(&a, 0).dims(), &[1, 1, 0]);
    assert_eq!(injective(&a, 2).dims(), &[0, 0, 1]);
    for v in 0..3 {
        let s = simple(&a, v);
        assert_eq!(s.total_dim(), 1);
        assert_eq!(s.dim(v), 1);
    }
    assert!(is_isomorphic(&injective(&a, 2), &simple(&a, 2), &cfg()).unwrap());
}

#[test]
fn hom_dimensions() {
    let a = a3();
    assert_eq!(hom_basis(&projective(&a, 1), &projective(&a, 2)).len(), 1);
    assert_eq!(hom_basis(&projective(&a, 2), &projective(&a, 1)).len(), 0);
    for v in 0..3 {
        assert_eq!(hom_basis(&simple(&a, v), &simple(&a, v)).len(), 1);
    }
    assert!(hom_basis(&simple(&a, 1), &projective(&a, 0)).is_empty());
    for f in hom_basis(&regular(&a), &dual_regular(&a)) {
        assert!(f.commutes());
    }
}

#[test]
fn projectives_represent_vertices() {
    let a = parse_algebra(fixtures::COMMUTATIVE_SQUARE).unwrap();
    let m = dual_regular(&a);
    for v in 0..a.num_vertices() {
        assert_eq!(hom_basis(&projective(&a, v), &m).len(), m.dim(v));
    }
}

#[test]
fn duality_is_involutive() {
    let a = a3();
    let m = direct_sum(&a, &[projective(&a, 1), simple(&a, 2)]).module;
    let dd = dualize(&dualize(&m));
    assert_eq!(dd, m);
    let ds = dualize(&simple(&a, 0));
    assert_eq!(ds, simple(&a.opposite(), 0));
    let m2 = injective(&a, 1);
    assert_eq!(hom_basis(&m, &m2).len(), hom_basis(&dualize(&m2), &dualize(&m)).len());
}

#[test]
fn regular_module_decomposes_by_vertex() {
    let a = a3();
    let d = decompose(&regular(&a), &cfg()).unwrap();
    assert_eq!(d.summands.len(), 3);
    assert!(d.summands.iter().all(|(_, k)| *k == 1));
    for v in 0..3 {
        let p = projective(&a, v);
        assert!(d.summands.iter().any(|(r, _)| indecomposables_isomorphic(r, &p)));
    }
}

#[test]
fn repeated_and_mixed_summands() {
    let a = a3();
    let s1 = simple(&a, 0);
    let d = decompose(&direct_sum(&a, &[s1.clone(), s1.clone()]).module, &cfg()).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!(d.summands[0].1, 2);
    assert!(indecomposables_isomorphic(&d.summands[0].0, &s1));
    let d = decompose(&direct_sum(&a, &[projective(&a, 1), simple(&a, 2)]).module, &cfg()).unwrap();
    assert_eq!(d.count(), 2);
}

#[test]
fn decomposition_is_idempotent() {
    let a = parse_algebra(fixtures::COMMUTATIVE_SQUARE).unwrap();
    let d = decompose(&dual_regular(&a), &cfg()).unwrap();
    assert_eq!(d.count(), 6);
    for (r, _) in &d.summands {
        let again = decompose(r, &cfg()).unwrap();
        assert_eq!(again.count(), 1);
    }
}

#[test]
fn isomorphism_tests() {
    let a = a3();
    let p3 = projective(&a, 2);
    assert!(is_isomorphic(&p3, &p3, &cfg()).unwrap());
    assert!(!is_isomorphic(&simple(&a, 0), &simple(&a, 1), &cfg()).unwrap());
    assert!(is_isomorphic(&p3, &injective(&a, 1), &cfg()).unwrap());
}

#[test]
fn add_and_basic() {
    let a = a3();
    let p1 = projective(&a, 0);
    let lambda = regular(&a);
    let two = direct_sum(&a, &[p1.clone(), p1.clone()]).module;
    assert!(add_member(&two, std::slice::from_ref(&lambda), &cfg()).unwrap());
    assert!(!add_member(&simple(&a, 2), &[lambda], &cfg()).unwrap());
    let m = direct_sum(&a, &[p1.clone(), p1.clone(), simple(&a, 2)]).module;
    let b = basic(&m, &cfg()).unwrap();
    let expect = direct_sum(&a, &[p1, simple(&a, 2)]).module;
    assert!(is_isomorphic(&b, &expect, &cfg()).unwrap());
}

#[test]
fn nakayama_enumeration() {
    assert_eq!(nakayama_indecomposables(&a3()).unwrap().len(), 5);
    let ss = parse_algebra(fixtures::SEMISIMPLE).unwrap();
    assert_eq!(nakayama_indecomposables(&ss).unwrap().len(), 2);
    let a4 = parse_algebra(&fixtures::linear_radical_square_zero(3)).unwrap();
    assert_eq!(nakayama_indecomposables(&a4).unwrap().len(), 7);
    let sq = parse_algebra(fixtures::COMMUTATIVE_SQUARE).unwrap();
    assert!(matches!(nakayama_indecomposables(&sq), Err(ModuleError::NotNakayama(_))));
}

#[test]
fn rejects_relation_violations() {
    let a = a3();
    let f = a.field();
    let one = Matrix::identity(f, 1);
    let err = Rep::new(&a, vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
    assert_eq!(err, ModuleError::RelationViolated { index: 0 });
}

#[test]
fn prime_field_decomposition_is_certified() {
    let a = crate::algebra::parse_algebra_with_field(fixtures::DUAL_NUMBERS, Some(FieldSpec::prime(2).unwrap())).unwrap();
    let s = simple(&a, 0);
    let lam = regular(&a);
    let m = direct_sum(&a, &[s.clone(), lam.clone(), s]).module;
    let d = decompose(&m, &cfg()).unwrap();
    assert_eq!(d.count(), 3);
    assert_eq!(d.summands.len(), 2);
}
