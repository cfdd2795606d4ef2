use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Coefficient, Monomial, MonomialOrder, PolyError, PolyRing};

/// A sparse polynomial: nonzero coefficients keyed by exponent vector.
///
/// Terms are stored in lexicographic exponent order; the zero polynomial has
/// no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coefficient>,
}

fn accumulate(map: &mut BTreeMap<Monomial, Coefficient>, m: Monomial, c: Coefficient) {
    match map.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial) -> Polynomial {
        Polynomial::term(ring, ring.field().one(), m)
    }

    pub fn term(ring: &Arc<PolyRing>, c: Coefficient, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), ring.nvars(), "monomial does not fit ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from terms, combining repeated monomials.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Coefficient)>,
    ) -> Result<Polynomial, PolyError> {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() || !ring.field().contains(&c) {
                return Err(PolyError::ContextMismatch);
            }
            accumulate(&mut map, m, c);
        }
        Ok(Polynomial { ring: ring.clone(), terms: map })
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: BTreeMap<Monomial, Coefficient>) -> Polynomial {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn terms_by(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> Option<u64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    /// The initial term under `order`; `None` stands for `ini(0) = 0`.
    pub fn initial_term(&self, order: &MonomialOrder) -> Option<(&Coefficient, &Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (c, m))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.initial_term(order).map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&Coefficient> {
        self.initial_term(order).map(|(c, _)| c)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let (big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplication by a single term `c * m`.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Result<Polynomial, PolyError> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, a)| Ok((k.checked_mul(m)?, a * c)))
            .collect::<Result<BTreeMap<_, _>, PolyError>>()?;
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial, PolyError> {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Substitutes `args[i]` for variable `i` and expands in `target`.
    pub fn evaluate(&self, target: &Arc<PolyRing>, args: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if args.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), found: args.len() });
        }
        if target.field() != self.ring.field() || args.iter().any(|a| !a.ring.same_as(target)) {
            return Err(PolyError::ContextMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = args.iter().map(|a| vec![target.one(), a.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().checked_mul(&args[i])?;
                    cache.push(next);
                }
                term = term.checked_mul(&cache[e as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            for (k, v) in term.terms {
                accumulate(&mut acc.terms, k, v);
            }
        }
        Ok(acc)
    }

    /// Sum of the terms whose weighted degree is exactly `d`.
    pub fn graded_component(&self, d: u64, weights: &[u64]) -> Result<Polynomial, PolyError> {
        if weights.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), found: weights.len() });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weighted_degree(weights) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// All terms share one weighted degree (true for zero).
    pub fn is_homogeneous_with(&self, weights: &[u64]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True when some term has a positive exponent on a variable in `vars`.
    pub fn involves_any(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.keys().any(|m| m.exponents()[vars.clone()].iter().any(|&e| e > 0))
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    ///
    /// Fails if a variable mapped to `None` actually occurs.
    pub fn transport(&self, target: &Arc<PolyRing>, map: &[Option<usize>]) -> Result<Polynomial, PolyError> {
        if map.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.ring.nvars(), found: map.len() });
        }
        if target.field() != self.ring.field() {
            return Err(PolyError::ContextMismatch);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| PolyError::UnknownVariable(self.ring.names()[i].clone()))?;
                exps[j] = exps[j].checked_add(e).ok_or(PolyError::ExponentOverflow)?;
            }
            accumulate(&mut terms, Monomial::new(exps), c.clone());
        }
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Text form with terms listed from largest to smallest under `order`.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        format_terms(&self.ring, self.terms_by(order).into_iter())
    }
}

fn format_terms<'a>(ring: &PolyRing, terms: impl Iterator<Item = (&'a Monomial, &'a Coefficient)>) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&ring.format_monomial(m));
        } else {
            out.push_str(&format!("{abs}*{}", ring.format_monomial(m)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Lexicographic display, largest term first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.ring, self.terms.iter().rev()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::with_names(Field::Rational, names.iter().copied()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x1"]);
        let a = r.parse("x1 + 1").unwrap();
        let b = r.parse("x1 - 1").unwrap();
        assert_eq!(&a * &b, r.parse("x1^2 - 1").unwrap());
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring(&["x1", "x2"]);
        let f = r.parse("3*x1*x2 - 1/2*x2^3 + 7").unwrap();
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = PolyRing::with_names(Field::prime(2).unwrap(), ["x1", "x2"]).unwrap();
        let f = r.parse("x1 + x2").unwrap();
        assert_eq!(f.pow(2).unwrap(), r.parse("x1^2 + x2^2").unwrap());
    }

    #[test]
    fn initial_terms() {
        let r = ring(&["x1", "x2"]);
        let lex = MonomialOrder::lex();
        let f = r.parse("x1*x2 - x2^2").unwrap();
        let (c, m) = f.initial_term(&lex).unwrap();
        assert!(c.is_one());
        assert_eq!(r.format_monomial(m), "x1*x2");
        assert!(r.zero().initial_term(&lex).is_none());
        let g = r.parse("x2^3 + x1").unwrap();
        assert_eq!(r.format_monomial(g.leading_monomial(&lex).unwrap()), "x1");
    }

    #[test]
    fn evaluate_examples() {
        let t = ring(&["t1", "t2"]);
        let x = ring(&["x1"]);
        let x1 = x.var(0);
        let p = t.parse("t1*t2").unwrap();
        let args = [x1.clone(), x.parse("x1 + 1").unwrap()];
        assert_eq!(p.evaluate(&x, &args).unwrap(), x.parse("x1^2 + x1").unwrap());
        let rel = t.parse("t1^2 - t2").unwrap();
        let vero = [x1.clone(), x.parse("x1^2").unwrap()];
        assert!(rel.evaluate(&x, &vero).unwrap().is_zero());
        let ident = ring(&["t1"]).var(0);
        assert_eq!(ident.evaluate(&x, std::slice::from_ref(&x1)).unwrap(), x1);
        assert!(matches!(p.evaluate(&x, &[x1]), Err(PolyError::ArityMismatch { .. })));
    }

    #[test]
    fn graded_components() {
        let r = ring(&["u1", "u2", "x1"]);
        let p = r.parse("u1*x1 + u1*u2").unwrap();
        let w = [1, 1, 0];
        assert_eq!(p.graded_component(1, &w).unwrap(), r.parse("u1*x1").unwrap());
        assert!(p.graded_component(5, &w).unwrap().is_zero());
        let s = ring(&["x1", "x2"]);
        let q = s.parse("x1^2 + x2").unwrap();
        assert_eq!(q.graded_component(2, &[1, 1]).unwrap(), s.parse("x1^2").unwrap());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = ring(&["x"]).var(0);
        let b = ring(&["y"]).var(0);
        assert!(matches!(a.checked_add(&b), Err(PolyError::ContextMismatch)));
        assert!(matches!(a.checked_mul(&b), Err(PolyError::ContextMismatch)));
    }

    #[test]
    fn display_is_lex_descending() {
        let r = ring(&["t1", "t2"]);
        assert_eq!(r.parse("-t2 + t1^2").unwrap().to_string(), "t1^2 - t2");
        assert_eq!(r.parse("-1/2*t2").unwrap().to_string(), "-1/2*t2");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.parse("-3 + t1").unwrap().to_string(), "t1 - 3");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(r: &Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
            let r = r.clone();
            let n = r.nvars();
            prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 0..5).prop_map(move |ts| {
                let f = r.field();
                Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), f.from_int(c)))).unwrap()
            })
        }

        fn q3() -> Arc<PolyRing> {
            PolyRing::with_names(Field::Rational, ["x1", "x2", "x3"]).unwrap()
        }

        fn t2() -> Arc<PolyRing> {
            PolyRing::with_names(Field::Rational, ["t1", "t2"]).unwrap()
        }

        proptest! {
            #[test]
            fn ring_axioms(a in poly(&q3()), b in poly(&q3()), c in poly(&q3())) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
            }

            #[test]
            fn evaluate_is_a_homomorphism(
                p in poly(&t2()), q in poly(&t2()),
                f1 in poly(&q3()), f2 in poly(&q3()),
            ) {
                let x = q3();
                let args = [f1, f2];
                let ev = |h: &Polynomial| h.evaluate(&x, &args).unwrap();
                prop_assert_eq!(ev(&(&p * &q)), &ev(&p) * &ev(&q));
                prop_assert_eq!(ev(&(&p + &q)), &ev(&p) + &ev(&q));
            }

            #[test]
            fn graded_components_sum_to_whole(p in poly(&q3()), w in prop::collection::vec(0u64..2, 3)) {
                let top = p.weighted_degree(&w).unwrap_or(0);
                let mut sum = p.ring().zero();
                for d in 0..=top {
                    let c = p.graded_component(d, &w).unwrap();
                    prop_assert!(c.is_homogeneous_with(&w));
                    sum = &sum + &c;
                }
                prop_assert_eq!(sum, p);
            }
        }
    }
}
