use proptest::prelude::*;

use super::*;
use crate::poly::{BaseOrder, Field};
use crate::testing::{poly_deg, qring, ring};

fn block_xt(nx: usize, nt: usize) -> MonomialOrder {
    MonomialOrder::Block(vec![(nx, BaseOrder::Lex), (nt, BaseOrder::Lex)])
}

fn texts(gb: &GroebnerBasis) -> Vec<String> {
    gb.elements().iter().map(|p| p.display_with(gb.order())).collect()
}

#[test]
fn divide_by_nothing() {
    let r = qring(&["x1", "x2"]);
    let f = r.parse("x1^2 + x2").unwrap();
    let d = divide(&f, &[], &MonomialOrder::lex()).unwrap();
    assert!(d.quotients.is_empty());
    assert_eq!(d.remainder, f);
}

#[test]
fn divide_exactly() {
    let r = qring(&["x1"]);
    let d = divide(&r.parse("x1^2").unwrap(), &[r.var(0)], &MonomialOrder::lex()).unwrap();
    assert_eq!(d.quotients, vec![r.var(0)]);
    assert!(d.remainder.is_zero());
}

#[test]
fn divide_with_remainder() {
    let r = qring(&["x1", "x2"]);
    let f = r.parse("x1^2*x2 + x2").unwrap();
    let g = r.parse("x1*x2 - 1").unwrap();
    let d = divide(&f, std::slice::from_ref(&g), &MonomialOrder::lex()).unwrap();
    assert_eq!(d.quotients[0], r.parse("x1").unwrap());
    assert_eq!(d.remainder, r.parse("x1 + x2").unwrap());
    assert_eq!(&(&d.quotients[0] * &g) + &d.remainder, f);
}

#[test]
fn divide_rejects_zero_divisor() {
    let r = qring(&["x1"]);
    assert!(matches!(divide(&r.var(0), &[r.zero()], &MonomialOrder::lex()), Err(GroebnerError::ZeroDivisor(0))));
}

#[test]
fn single_monomial_generator() {
    let r = qring(&["x1", "x2"]);
    let gb = buchberger(&r, &[r.var(0)], &MonomialOrder::lex()).unwrap();
    assert_eq!(texts(&gb), ["x1"]);
}

#[test]
fn empty_ideal() {
    let r = qring(&["x1"]);
    let gb = buchberger(&r, &[], &MonomialOrder::lex()).unwrap();
    assert!(gb.is_empty());
    assert_eq!(gb.normal_form(&r.parse("x1 + 2").unwrap()).unwrap(), r.parse("x1 + 2").unwrap());
}

#[test]
fn veronese_relation_is_eliminated() {
    let r = qring(&["x1", "t1", "t2"]);
    let gens = [r.parse("t1 - x1").unwrap(), r.parse("t2 - x1^2").unwrap()];
    let gb = buchberger(&r, &gens, &block_xt(1, 2)).unwrap();
    assert!(texts(&gb).contains(&"t1^2 - t2".to_string()));
    assert!(gb.verify_spolys());
}

#[test]
fn inter_reduction() {
    let r = qring(&["x1", "x2"]);
    let gb = buchberger(&r, &[r.parse("x1").unwrap(), r.parse("x1 + x2").unwrap()], &MonomialOrder::lex()).unwrap();
    assert_eq!(texts(&gb), ["x2", "x1"]);
    let again = reduce_basis(&gb);
    assert_eq!(texts(&again), texts(&gb));
    let loose = assume_groebner(&r, &[r.parse("x1 + x2").unwrap(), r.parse("2*x2").unwrap()], &MonomialOrder::lex()).unwrap();
    assert!(!loose.is_reduced());
    assert_eq!(texts(&reduce_basis(&loose)), ["x2", "x1"]);
}

#[test]
fn normal_form_examples() {
    let r = qring(&["x1", "t1"]);
    let o = block_xt(1, 1);
    let gb = buchberger(&r, &[r.parse("t1 - x1").unwrap()], &o).unwrap();
    assert_eq!(gb.normal_form(&r.parse("x1^2").unwrap()).unwrap(), r.parse("t1^2").unwrap());
    assert_eq!(gb.normal_form(&r.int(5)).unwrap(), r.int(5));
    assert!(gb.normal_form(&r.parse("t1 - x1").unwrap()).unwrap().is_zero());
}

#[test]
fn truncation_below_generators_is_empty() {
    let r = qring(&["x1", "x2"]);
    let t = truncated_groebner(&r, &[r.parse("x1^2 - x2^2").unwrap()], &MonomialOrder::grevlex(), 1, &[1, 1]).unwrap();
    assert!(t.basis.is_empty());
    assert!(!t.complete);
}

#[test]
fn truncation_rejects_inhomogeneous() {
    let r = qring(&["x1", "x2"]);
    let err = truncated_groebner(&r, &[r.parse("x1^2 - x2").unwrap()], &MonomialOrder::lex(), 4, &[1, 1]);
    assert!(matches!(err, Err(GroebnerError::NotHomogeneous { index: 0 })));
    assert!(truncated_groebner(&r, &[r.parse("x1^2 - x2").unwrap()], &MonomialOrder::lex(), 4, &[1, 2]).is_ok());
}

#[test]
fn truncated_tag_system_matches_full() {
    let r = qring(&["x1", "t1"]);
    let o = block_xt(1, 1);
    let gens = [r.parse("t1 - x1").unwrap()];
    let full = buchberger(&r, &gens, &o).unwrap();
    let t = truncated_groebner(&r, &gens, &o, 3, &[1, 1]).unwrap();
    for g in ["x1^3", "x1^2", "x1*t1", "t1^3 - x1"] {
        let g = r.parse(g).unwrap();
        assert_eq!(t.normal_form(&g).unwrap(), full.normal_form(&g).unwrap());
    }
}

#[test]
fn truncation_with_large_cap_is_the_full_basis() {
    let r = qring(&["x", "y", "z"]);
    let gens = [r.parse("x^2 - y*z").unwrap(), r.parse("x*y - z^2").unwrap()];
    let o = MonomialOrder::grevlex();
    let full = buchberger(&r, &gens, &o).unwrap();
    // Dubé bound for n = 3, d = 2 is 512.
    let t = truncated_groebner(&r, &gens, &o, 512, &[1, 1, 1]).unwrap();
    assert!(t.complete);
    assert_eq!(texts(&t.basis), texts(&full));
}

#[test]
fn prime_field_basis() {
    let r = ring(Field::prime(7).unwrap(), &["x", "y"]);
    let gens = [r.parse("x^2 + 3*y").unwrap(), r.parse("x*y - 1").unwrap()];
    let gb = buchberger(&r, &gens, &MonomialOrder::grlex()).unwrap();
    assert!(gb.verify_spolys());
    for g in &gens {
        assert!(gb.contains(g).unwrap());
    }
}

#[test]
fn serialization_has_order_line() {
    let r = qring(&["x1", "x2"]);
    let gb = buchberger(&r, &[r.parse("x1 - x2^2").unwrap()], &MonomialOrder::lex()).unwrap();
    assert_eq!(gb.to_text(), "order: lex x1 > x2\nx1 - x2^2\n");
}

fn system() -> impl Strategy<Value = Vec<Polynomial>> {
    let r = qring(&["x1", "x2", "x3"]);
    prop::collection::vec(poly_deg(&r, 3, 3), 1..4)
}

fn binomial_system() -> impl Strategy<Value = Vec<Polynomial>> {
    let r = qring(&["x1", "x2", "x3"]);
    let mono = prop::collection::vec(0u32..3, 3).prop_map(Monomial::new);
    prop::collection::vec((mono.clone(), mono), 1..4).prop_map(move |pairs| {
        pairs
            .into_iter()
            .map(|(a, b)| &Polynomial::monomial(&r, a) - &Polynomial::monomial(&r, b))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_identity(f in poly_deg(&qring(&["x1", "x2", "x3"]), 5, 4), ds in system()) {
        let ds: Vec<_> = ds.into_iter().filter(|d| !d.is_zero()).collect();
        let o = MonomialOrder::grlex();
        let res = divide(&f, &ds, &o).unwrap();
        let mut sum = res.remainder.clone();
        for (q, d) in res.quotients.iter().zip(&ds) {
            sum = &sum + &(q * d);
            if !q.is_zero() {
                let top = o.cmp(&(q.leading_monomial(&o).unwrap() * d.leading_monomial(&o).unwrap()), f.leading_monomial(&o).unwrap());
                prop_assert_ne!(top, std::cmp::Ordering::Greater);
            }
        }
        prop_assert_eq!(sum, f);
        for m in res.remainder.monomials() {
            prop_assert!(ds.iter().all(|d| !d.leading_monomial(&o).unwrap().divides(m)));
        }
    }

    #[test]
    fn basis_is_certified_and_canonical(gens in system(), seed in 0usize..6, scale in 1i64..5) {
        let r = gens[0].ring().clone();
        for o in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let gb = buchberger(&r, &gens, &o).unwrap();
            prop_assert!(gb.verify_spolys());
            prop_assert!(gb.elements().iter().all(|g| g.leading_coefficient(&o).unwrap().is_one()));
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
            let mut permuted = gens.clone();
            permuted.rotate_left(seed % gens.len());
            permuted.reverse();
            let c = r.field().from_int(scale);
            let permuted: Vec<_> = permuted.iter().map(|p| p.scale(&c)).collect();
            let other = buchberger(&r, &permuted, &o).unwrap();
            prop_assert_eq!(gb.elements(), other.elements());
        }
    }

    #[test]
    fn normal_form_is_linear(
        gens in system(),
        f in poly_deg(&qring(&["x1", "x2", "x3"]), 4, 3),
        g in poly_deg(&qring(&["x1", "x2", "x3"]), 4, 3),
        a in -3i64..4, b in -3i64..4,
    ) {
        let r = f.ring().clone();
        let gb = buchberger(&r, &gens, &MonomialOrder::grlex()).unwrap();
        let (a, b) = (r.field().from_int(a), r.field().from_int(b));
        let lhs = gb.normal_form(&(&f.scale(&a) + &g.scale(&b))).unwrap();
        let rhs = &gb.normal_form(&f).unwrap().scale(&a) + &gb.normal_form(&g).unwrap().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_ideals_have_binomial_bases(gens in binomial_system()) {
        let r = gens[0].ring().clone();
        let gb = buchberger(&r, &gens, &MonomialOrder::grevlex()).unwrap();
        for g in gb.elements() {
            prop_assert!(g.num_terms() <= 2);
        }
    }
}
