use proptest::prelude::*;

use super::*;
use crate::testing::{homogeneous, poly_deg, qring};

fn pres(ring: &Arc<PolyRing>, gens: &[&str]) -> SubalgebraPresentation {
    SubalgebraPresentation::new(ring, gens.iter().map(|g| ring.parse(g).unwrap()).collect()).unwrap()
}

#[test]
fn generator_is_member() {
    let r = qring(&["x1", "x2"]);
    let a = pres(&r, &["x1^2 + x2"]);
    let v = decide_membership(&a, &a.generators()[0]).unwrap();
    assert!(v.member);
    assert_eq!(v.certificate.unwrap().polynomial().to_string(), "t1");
}

#[test]
fn odd_power_is_not_member() {
    let r = qring(&["x1"]);
    let a = pres(&r, &["x1^2"]);
    let v = decide_membership(&a, &r.parse("x1^3").unwrap()).unwrap();
    assert!(!v.member);
    let w = v.witness.unwrap();
    assert!(w.involves_any(0..1));
    assert_eq!(w.to_string(), "x1*t1");
}

#[test]
fn example_with_infinite_initial_algebra() {
    let r = qring(&["x1", "x2"]);
    let a = pres(&r, &["x1", "x1*x2 - x2^2", "x1*x2^2"]);
    let v = decide_membership(&a, &r.parse("x2^3").unwrap()).unwrap();
    assert!(!v.member);
    // x1^2 x2 - x1 x2^2 = x1 (x1 x2 - x2^2)
    let v = decide_membership(&a, &r.parse("x1^2*x2 - x1*x2^2").unwrap()).unwrap();
    assert!(v.member);
    assert_eq!(v.certificate.unwrap().polynomial().to_string(), "t1*t2");
}

#[test]
fn polynomial_ring_in_disguise() {
    let r = qring(&["x1", "x2"]);
    let a = pres(&r, &["x1", "x2"]);
    let g = r.parse("x1*x2").unwrap();
    for v in [decide_membership(&a, &g).unwrap(), decide_membership_homogeneous(&a, &g).unwrap()] {
        assert!(v.member);
        assert_eq!(v.certificate.unwrap().polynomial().to_string(), "t1*t2");
    }
}

#[test]
fn empty_presentation_is_the_field() {
    let r = qring(&["x1"]);
    let a = pres(&r, &[]);
    let v = decide_membership(&a, &r.int(3)).unwrap();
    assert!(v.member);
    assert_eq!(v.certificate.unwrap().polynomial().to_string(), "3");
    assert!(!decide_membership(&a, &r.var(0)).unwrap().member);
}

#[test]
fn tag_names_avoid_clashes() {
    let r = qring(&["t1", "x"]);
    let a = pres(&r, &["t1*x"]);
    assert_eq!(a.tag_ring().names(), ["u1"]);
    let v = decide_membership(&a, &r.parse("t1^2*x^2").unwrap()).unwrap();
    assert_eq!(v.certificate.unwrap().polynomial().to_string(), "u1^2");
}

#[test]
fn verify_certificate_examples() {
    let r = qring(&["x1"]);
    let a = pres(&r, &["x1", "x1^2"]);
    let t = a.tag_ring();
    assert_eq!(verify_certificate(&t.parse("t1").unwrap(), &a, &r.var(0)).unwrap(), (true, 1, 1));
    assert_eq!(verify_certificate(&t.parse("t1^2 - t2").unwrap(), &a, &r.zero()).unwrap(), (true, 2, 2));
    assert!(!verify_certificate(&t.parse("t2").unwrap(), &a, &r.var(0)).unwrap().0);
    let short = qring(&["t1"]);
    assert!(verify_certificate(&short.var(0), &a, &r.var(0)).is_err());
}

#[test]
fn record_format() {
    let r = qring(&["x1"]);
    let a = pres(&r, &["x1^2"]);
    let v = decide_membership(&a, &r.parse("x1^4 - 1").unwrap()).unwrap();
    assert_eq!(v.to_string(), "member: yes\ncertificate: t1^2 - 1\ncertificate_degree: 2\ncertificate_terms: 2\n");
}

#[test]
fn homogeneous_path_rejects_inhomogeneous_input() {
    let r = qring(&["x1"]);
    let a = pres(&r, &["x1^2 + x1"]);
    assert!(matches!(decide_membership_homogeneous(&a, &r.var(0)), Err(AlgMemError::InhomogeneousGenerator(0))));
    let b = pres(&r, &["x1^2"]);
    assert!(matches!(decide_membership_homogeneous(&b, &r.parse("x1 + 1").unwrap()), Err(AlgMemError::InhomogeneousTarget)));
}

#[test]
fn flags_are_computed() {
    let r = qring(&["x1", "x2"]);
    let a = pres(&r, &["x1*x2", "x1^2 - x2^2"]);
    assert!(a.is_homogeneous() && a.is_binomial() && !a.is_monomial());
    assert_eq!(a.max_degree(), 2);
}

fn small_pres() -> impl Strategy<Value = (SubalgebraPresentation, Polynomial)> {
    let r = qring(&["x1", "x2"]);
    let gens = prop::collection::vec(poly_deg(&r, 2, 2), 1..3);
    let coeffs = prop::collection::vec(-2i64..3, 6);
    (gens, coeffs, poly_deg(&r, 2, 2)).prop_map(move |(gens, cs, noise)| {
        let a = SubalgebraPresentation::new(&r, gens).unwrap();
        // a random element of A, sometimes perturbed
        let t = a.tag_ring();
        let f = t.field();
        let mut p = t.zero();
        let monos = [t.one(), t.var(0), t.var(0).pow(2).unwrap()];
        for (m, c) in monos.iter().zip(&cs) {
            p = &p + &m.scale(&f.from_int(*c));
        }
        if a.len() > 1 {
            p = &p + &(&t.var(0) * &t.var(1)).scale(&f.from_int(cs[4]));
        }
        let mut g = evaluate_in(&p, &a).unwrap();
        if cs[5] > 0 {
            g = &g + &noise;
        }
        (a, g)
    })
}

fn homogeneous_pres() -> impl Strategy<Value = (SubalgebraPresentation, Polynomial)> {
    let r = qring(&["x1", "x2"]);
    let gens = prop::collection::vec((1u32..3).prop_flat_map(move |d| homogeneous(&qring(&["x1", "x2"]), 2, d)), 1..3);
    (gens, 1u32..5, prop::collection::vec(-2i64..3, 3)).prop_flat_map(move |(gens, d, cs)| {
        let r = r.clone();
        homogeneous(&r, 3, d).prop_map(move |noise| {
            let a = SubalgebraPresentation::new(&r, gens.clone()).unwrap();
            let mut g = noise;
            if cs[0] > 0 {
                // products of generators keep the target homogeneous
                let f = &a.generators()[0];
                g = f.pow(cs[1].unsigned_abs() as u32 + 1).unwrap();
            }
            (a, g)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn verdicts_are_sound((a, g) in small_pres()) {
        let v = decide_membership(&a, &g).unwrap();
        if v.member {
            let c = v.certificate.as_ref().unwrap();
            prop_assert!(verify_certificate(c.polynomial(), &a, &g).unwrap().0);
        } else {
            let n = a.ring().nvars();
            prop_assert!(v.witness.as_ref().unwrap().involves_any(0..n));
        }
    }

    #[test]
    fn homogeneous_path_agrees((a, g) in homogeneous_pres()) {
        let full = decide_membership(&a, &g).unwrap();
        let trunc = decide_membership_homogeneous(&a, &g).unwrap();
        prop_assert_eq!(full.member, trunc.member);
    }
}
