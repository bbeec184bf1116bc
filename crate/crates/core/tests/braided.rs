use skewverify_core::bialg::{
    bicharacter_cobraiding, cyclic_group_algebra, s3_group_algebra, sweedler, sweedler_cobraiding, trivial_bialgebra,
};
use skewverify_core::exactla::{Field, Space};
use skewverify_core::probes::Probes;
use skewverify_core::report::LawStatus;
use skewverify_core::skewcheck::{
    check_braiding_axioms, check_derived_properties, check_naturality, classical_braiding_from_s, SkewMonCat,
};
use skewverify_core::warpcomonad::{braided_vect, y_from_cobraiding, MonoidalComonad};
use skewverify_core::Error;

fn q() -> Field {
    Field::Rational
}

fn z2_sign() -> SkewMonCat {
    let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
    let g = MonoidalComonad::from_bialgebra(b).unwrap();
    braided_vect(&y_from_cobraiding(&g, &cb).unwrap())
}

fn s3_flip() -> SkewMonCat {
    let b = s3_group_algebra(q());
    let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
    braided_vect(&y_from_cobraiding(&g, &b.trivial_cobraiding()).unwrap())
}

fn trivial_flip() -> SkewMonCat {
    let b = trivial_bialgebra(q());
    let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
    braided_vect(&y_from_cobraiding(&g, &b.trivial_cobraiding()).unwrap())
}

/// Number of probe factors in a space (the algebra factors are named `B`).
fn probe_factors(s: &Space) -> usize {
    s.factors().iter().filter(|f| f.to_string().starts_with('P')).count()
}

#[test]
fn sign_braiding_satisfies_everything() {
    let c = z2_sign();
    let probes = Probes::from_dims(&[1, 2], 5);
    let rep = check_braiding_axioms(&c, &probes).unwrap();
    assert!(rep.all_pass(), "{rep}");
    let der = check_derived_properties(&c, &probes, &rep).unwrap();
    assert!(der.all_pass(), "{der}");
    let nat = check_naturality(&c, &Probes::from_dims(&[1], 5)).unwrap();
    assert!(nat.all_pass(), "{nat}");
}

#[test]
fn sweedler_braiding_satisfies_everything() {
    let b = sweedler(q());
    let c = sweedler_cobraiding(&b, &q().from_i64(2)).unwrap();
    let g = MonoidalComonad::from_bialgebra(b).unwrap();
    let cat = braided_vect(&y_from_cobraiding(&g, &c).unwrap());
    let probes = Probes::from_dims(&[1], 0);
    let rep = check_braiding_axioms(&cat, &probes).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert!(check_derived_properties(&cat, &probes, &rep).unwrap().all_pass());
}

#[test]
fn flip_on_s3_fails_only_sstar() {
    let rep = check_braiding_axioms(&s3_flip(), &Probes::from_dims(&[1], 0)).unwrap();
    assert_eq!(rep.failing(), vec!["Sstar"]);
    let w = rep.get("Sstar").unwrap().witness.clone().unwrap();
    // the witness input must involve two group elements that do not commute
    let named: Vec<&str> = ["(12)", "(13)", "(23)", "(123)", "(132)"]
        .into_iter()
        .filter(|e| w.input.contains(e))
        .collect();
    assert!(!named.is_empty(), "{}", w.input);
}

#[test]
fn negating_one_component_breaks_both_s3_laws() {
    let c = z2_sign();
    let probes = Probes::from_dims(&[1], 0);
    let target = probes.spaces()[0].clone();
    let m = c
        .with_negated_components(move |x, a, b| *x == target && *a == target && *b == target)
        .unwrap();
    let rep = check_braiding_axioms(&m, &probes).unwrap();
    assert_eq!(rep.status("S3a"), Some(LawStatus::Fail));
    assert_eq!(rep.status("S3b"), Some(LawStatus::Fail));
    let inv = check_braiding_axioms(&m.inverse_braided().unwrap(), &probes).unwrap();
    for id in ["S2", "Sstar", "S1"] {
        assert_eq!(rep.status(id), inv.status(id), "{id}");
    }
    assert_eq!(rep.status("S3a"), inv.status("S3b"));
    assert_eq!(rep.status("S3b"), inv.status("S3a"));
}

#[test]
fn inverse_braiding_swaps_s3a_and_s3b() {
    let c = z2_sign()
        .with_negated_components(|_, a, _| probe_factors(a) % 2 == 1)
        .unwrap();
    let probes = Probes::from_dims(&[1], 0);
    let rep = check_braiding_axioms(&c, &probes).unwrap();
    assert_eq!(rep.status("S3a"), Some(LawStatus::Fail), "{rep}");
    assert_eq!(rep.status("S3b"), Some(LawStatus::Pass), "{rep}");
    let inv = check_braiding_axioms(&c.inverse_braided().unwrap(), &probes).unwrap();
    assert_eq!(inv.status("S3a"), Some(LawStatus::Pass), "{inv}");
    assert_eq!(inv.status("S3b"), Some(LawStatus::Fail), "{inv}");
    for id in ["S2", "Sstar", "S1"] {
        assert_eq!(rep.status(id), inv.status(id), "{id}");
    }
}

#[test]
fn inverse_of_good_braiding_is_good() {
    let c = z2_sign().inverse_braided().unwrap();
    let rep = check_braiding_axioms(&c, &Probes::from_dims(&[1, 2], 0)).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn derived_laws_not_inconsistent_when_premise_fails() {
    let c = z2_sign()
        .with_negated_components(|_, a, _| probe_factors(a) % 2 == 1)
        .unwrap();
    let probes = Probes::from_dims(&[1], 0);
    let rep = check_braiding_axioms(&c, &probes).unwrap();
    let der = check_derived_properties(&c, &probes, &rep).unwrap();
    assert_eq!(der.ids(), vec!["Lsr", "Psr", "Pslr", "Psar1", "Psr1a", "Psr1b"]);
    assert!(!der.has_inconsistency(), "{der}");
}

#[test]
fn derived_failure_with_passing_premise_is_inconsistent() {
    let c = z2_sign()
        .with_negated_components(|_, a, _| probe_factors(a) % 2 == 1)
        .unwrap();
    let probes = Probes::from_dims(&[1], 0);
    let mut premises = check_braiding_axioms(&c, &probes).unwrap();
    for l in &mut premises.laws {
        l.status = LawStatus::Pass;
    }
    let der = check_derived_properties(&c, &probes, &premises).unwrap();
    assert_eq!(der.status("Psr"), Some(LawStatus::Inconsistent), "{der}");
    assert!(der.has_inconsistency());
}

#[test]
fn classical_braiding_on_trivial_algebra() {
    let probes = Probes::from_dims(&[1, 2], 0);
    let c = trivial_flip();
    let cb = classical_braiding_from_s(&c, &probes).unwrap();
    assert!(cb.report.all_pass(), "{}", cb.report);
    assert_eq!(cb.components.len(), 4);

    // negating every component keeps s ∘ s = 1 but breaks both hexagons
    let neg = c.with_negated_components(|_, _, _| true).unwrap();
    let cb = classical_braiding_from_s(&neg, &probes).unwrap();
    assert_eq!(cb.report.failing(), vec!["H1", "H2"]);
    let rep = check_braiding_axioms(&neg, &probes).unwrap();
    assert!(rep.passed("S1"));
}

#[test]
fn classical_braiding_needs_left_normal() {
    let c = z2_sign();
    let err = classical_braiding_from_s(&c, &Probes::from_dims(&[1], 0)).unwrap_err();
    assert!(matches!(err, Error::NotLeftNormal(_)));
}

#[test]
fn unbraided_category_rejects_braiding_checks() {
    let g = MonoidalComonad::from_bialgebra(cyclic_group_algebra(2, q())).unwrap();
    let c = skewverify_core::warpcomonad::skewmon_from_cowarp(&g);
    assert!(check_braiding_axioms(&c, &Probes::from_dims(&[1], 0)).is_err());
}

#[test]
fn flip_on_s3_satisfies_derived_laws() {
    let c = s3_flip();
    let probes = Probes::from_dims(&[1], 0);
    let rep = check_braiding_axioms(&c, &probes).unwrap();
    let der = check_derived_properties(&c, &probes, &rep).unwrap();
    assert!(der.all_pass(), "{der}");
}

#[test]
fn symmetric_braiding_is_self_inverse() {
    let probes = Probes::from_dims(&[1, 2], 0);
    for c in [z2_sign(), s3_flip()] {
        let rep = check_braiding_axioms(&c, &Probes::from_dims(&[1], 0)).unwrap();
        assert!(rep.passed("S1"));
        let a = check_braiding_axioms(&c, &probes).unwrap();
        let b = check_braiding_axioms(&c.inverse_braided().unwrap(), &probes).unwrap();
        assert_eq!(a, b);
    }
}
