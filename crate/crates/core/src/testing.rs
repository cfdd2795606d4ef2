//! Proptest strategies shared by the unit tests.

use std::sync::Arc;

use proptest::prelude::*;

use crate::poly::{Field, Monomial, PolyRing, Polynomial};

pub(crate) fn ring(field: Field, names: &[&str]) -> Arc<PolyRing> {
    PolyRing::with_names(field, names.iter().copied()).unwrap()
}

pub(crate) fn qring(names: &[&str]) -> Arc<PolyRing> {
    ring(Field::Rational, names)
}

/// Polynomials with up to `terms` terms, exponents below `max_exp`, small integer coefficients.
pub(crate) fn poly(r: &Arc<PolyRing>, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let r = r.clone();
    let n = r.nvars();
    prop::collection::vec((prop::collection::vec(0..max_exp, n), -3i64..4), 0..=terms).prop_map(move |ts| {
        let f = r.field();
        Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), f.from_int(c)))).unwrap()
    })
}

/// Polynomials of total degree at most `deg`.
pub(crate) fn poly_deg(r: &Arc<PolyRing>, terms: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    poly(r, terms, deg + 1).prop_map(move |p| {
        let keep = p.terms().filter(|(m, _)| m.degree() <= deg as u64).map(|(m, c)| (m.clone(), c.clone()));
        Polynomial::from_terms(p.ring(), keep.collect::<Vec<_>>()).unwrap()
    })
}

/// Homogeneous polynomials of degree exactly `deg` (possibly zero).
pub(crate) fn homogeneous(r: &Arc<PolyRing>, terms: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    poly(r, terms, deg + 1).prop_map(move |p| p.graded_component(deg as u64, &vec![1; p.ring().nvars()]).unwrap())
}
