use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Coefficient, Monomial, MonomialOrder, PolyRing, Polynomial};

/// Working form of a polynomial during reduction: terms sorted ascending under
/// a fixed order, so the leading term is the last element.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub(crate) terms: Vec<(Monomial, Coefficient)>,
}

impl Sorted {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Sorted {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_sorted_terms(ring, self.terms.iter().cloned().collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub(crate) fn lc(&self) -> &Coefficient {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero coefficient");
                for (_, c) in &mut self.terms {
                    *c = &*c * &inv;
                }
            }
        }
    }

    pub(crate) fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Sorted {
        Sorted {
            terms: self.terms.iter().map(|(k, a)| (k * m, a * c)).collect(),
        }
    }

    /// `self - c * m * g`, merging the two sorted term lists.
    pub(crate) fn sub_mul(&self, c: &Coefficient, m: &Monomial, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(k, v)| (k * m, -&(v * c))).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + &y;
                    if !s.is_zero() {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        Sorted { terms: out }
    }

    /// S-polynomial of two monic polynomials.
    pub(crate) fn spoly(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let l = f.lm().lcm(g.lm());
        let one = f.lc().field().one();
        let a = f.mul_term(&one, &l.div(f.lm()).unwrap());
        a.sub_mul(&one, &l.div(g.lm()).unwrap(), g, order)
    }
}

/// Index of the first divisor whose leading monomial divides `m`.
pub(crate) fn find_divisor<'a>(m: &Monomial, divisors: impl IntoIterator<Item = &'a Sorted>) -> Option<&'a Sorted> {
    divisors.into_iter().find(|g| g.lm().divides(m))
}

/// Full reduction of `p` by `basis`; divisors tried in slice order.
pub(crate) fn reduce(p: Sorted, basis: &[&Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = p;
    let mut rem = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        match find_divisor(m, basis.iter().copied()) {
            Some(g) => {
                let q = m.div(g.lm()).unwrap();
                let coef = c * &g.lc().inv().unwrap();
                p = p.sub_mul(&coef, &q, g, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}
