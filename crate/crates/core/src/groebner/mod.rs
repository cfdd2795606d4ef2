//! Division with remainder, Buchberger's algorithm, reduced bases, normal forms.

mod buchberger;
pub(crate) mod sorted;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::poly::{Coefficient, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial};

use buchberger::{interreduce, minimalize, Engine};
use sorted::{reduce, Sorted};

#[derive(Debug, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generator {index} is not homogeneous for the given weights")]
    NotHomogeneous { index: usize },
    #[error("zero divisor at position {0}")]
    ZeroDivisor(usize),
}

/// A Gröbner basis of the ideal it was computed from, under a fixed order.
///
/// Elements are monic and sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sorted: Vec<Sorted>,
    reduced: bool,
}

impl GroebnerBasis {
    fn from_sorted(ring: &Arc<PolyRing>, order: &MonomialOrder, sorted: Vec<Sorted>, reduced: bool) -> GroebnerBasis {
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements: sorted.iter().map(|s| s.to_poly(ring)).collect(),
            sorted,
            reduced,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Largest total degree of an element; 0 for the empty basis.
    pub fn degree(&self) -> u64 {
        self.elements.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(Sorted::lm)
    }

    /// `NF(f)`: the remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if !f.ring().same_as(&self.ring) {
            return Err(PolyError::ContextMismatch);
        }
        let divisors: Vec<&Sorted> = self.sorted.iter().collect();
        Ok(reduce(Sorted::from_poly(f, &self.order), &divisors, &self.order).to_poly(&self.ring))
    }

    /// Ideal membership: `f ∈ I` iff `NF(f) = 0`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of element pairs reduces to zero.
    pub fn verify_spolys(&self) -> bool {
        let divisors: Vec<&Sorted> = self.sorted.iter().collect();
        for (i, f) in self.sorted.iter().enumerate() {
            for g in &self.sorted[i + 1..] {
                if f.lm().is_coprime(g.lm()) {
                    // Buchberger's first criterion.
                    continue;
                }
                let s = Sorted::spoly(f, g, &self.order);
                if !reduce(s, &divisors, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Order descriptor line followed by one element per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("order: {}\n", self.ring.order_descriptor(&self.order));
        for p in &self.elements {
            out.push_str(&p.display_with(&self.order));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.elements {
            writeln!(f, "{}", p.display_with(&self.order))?;
        }
        Ok(())
    }
}

fn prepare(ring: &Arc<PolyRing>, gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Sorted>, PolyError> {
    order.check_nvars(ring.nvars())?;
    gens.iter()
        .map(|g| {
            if g.ring().same_as(ring) {
                Ok(Sorted::from_poly(g, order))
            } else {
                Err(PolyError::ContextMismatch)
            }
        })
        .collect()
}

/// A Gröbner basis of `⟨gens⟩`.
///
/// Uses the normal pair-selection strategy with the Gebauer–Möller criteria.
/// The result is already minimal and inter-reduced, so it is flagged reduced.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    let input = prepare(ring, gens, order)?;
    let mut engine = Engine::new(order, vec![1; ring.nvars()], None);
    for p in input {
        engine.add(p);
    }
    engine.run();
    Ok(GroebnerBasis::from_sorted(ring, order, engine.into_reduced(), true))
}

/// The reduced basis of the same ideal: minimal, monic, inter-reduced.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    if gb.reduced {
        return gb.clone();
    }
    let min = minimalize(gb.sorted.clone(), &gb.order);
    GroebnerBasis::from_sorted(&gb.ring, &gb.order, interreduce(min, &gb.order), true)
}

/// Wraps polynomials already known to form a Gröbner basis.
///
/// Nothing is checked beyond ring compatibility; call
/// [`GroebnerBasis::verify_spolys`] to certify.
pub fn assume_groebner(ring: &Arc<PolyRing>, elements: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    let mut sorted = prepare(ring, elements, order)?;
    sorted.retain(|s| !s.is_zero());
    for s in &mut sorted {
        s.make_monic();
    }
    sorted.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(GroebnerBasis::from_sorted(ring, order, sorted, false))
}

/// Gröbner basis of a weighted-homogeneous ideal truncated at weighted degree `cap`.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    pub basis: GroebnerBasis,
    pub cap: u64,
    pub weights: Vec<u64>,
    /// True when nothing above the cap was dropped, so `basis` is the full reduced basis.
    pub complete: bool,
}

impl TruncatedBasis {
    /// Normal form; exact for polynomials whose terms have weighted degree at most `cap`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        self.basis.normal_form(f)
    }
}

/// Buchberger restricted to S-pairs of weighted degree at most `cap`.
///
/// Only sound for input homogeneous under `weights`, which is enforced.
pub fn truncated_groebner(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    cap: u64,
    weights: &[u64],
) -> Result<TruncatedBasis, GroebnerError> {
    if weights.len() != ring.nvars() {
        return Err(PolyError::ArityMismatch { expected: ring.nvars(), found: weights.len() }.into());
    }
    if let Some(index) = gens.iter().position(|g| !g.is_homogeneous_with(weights)) {
        return Err(GroebnerError::NotHomogeneous { index });
    }
    let input = prepare(ring, gens, order)?;
    let mut engine = Engine::new(order, weights.to_vec(), Some(cap));
    for p in input {
        engine.add(p);
    }
    engine.run();
    let complete = !engine.discarded;
    let basis = GroebnerBasis::from_sorted(ring, order, engine.into_reduced(), true);
    Ok(TruncatedBasis { basis, cap, weights: weights.to_vec(), complete })
}

/// Quotients and remainder of a division.
#[derive(Clone, Debug)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by `divisors`; at each step the first divisor
/// (in list order) whose leading monomial divides the current leading term is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<DivisionResult, GroebnerError> {
    let ring = f.ring();
    let ds = prepare(ring, divisors, order)?;
    if let Some(i) = ds.iter().position(Sorted::is_zero) {
        return Err(GroebnerError::ZeroDivisor(i));
    }
    let mut quotients: Vec<BTreeMap<Monomial, Coefficient>> = vec![BTreeMap::new(); ds.len()];
    let mut p = Sorted::from_poly(f, order);
    let mut rem = BTreeMap::new();
    while let Some((m, c)) = p.terms.last() {
        match ds.iter().position(|g| g.lm().divides(m)) {
            Some(i) => {
                let q = m.div(ds[i].lm()).unwrap();
                let coef = c * &ds[i].lc().inv().unwrap();
                p = p.sub_mul(&coef, &q, &ds[i], order);
                quotients[i].insert(q, coef);
            }
            None => {
                let (m, c) = p.terms.pop().unwrap();
                rem.insert(m, c);
            }
        }
    }
    Ok(DivisionResult {
        quotients: quotients.into_iter().map(|q| Polynomial::from_sorted_terms(ring, q)).collect(),
        remainder: Polynomial::from_sorted_terms(ring, rem),
    })
}

#[cfg(test)]
mod tests;
