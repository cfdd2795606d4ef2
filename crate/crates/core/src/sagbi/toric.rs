use std::sync::Arc;

use crate::groebner::{buchberger, truncated_groebner, GroebnerError};
use crate::poly::{BaseOrder, Field, Monomial, MonomialOrder, PolyRing, Polynomial, VariableContext};

/// A binomial `u^lead - u^trail` in the kernel of `ui ↦ x^αi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricRelation {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
    /// Weighted degree with `ui ↦ |αi|`, equal on both sides.
    pub degree: u64,
}

impl ToricRelation {
    /// The binomial in a ring whose variables match the relation's length.
    pub fn to_polynomial(&self, ring: &Arc<PolyRing>) -> Polynomial {
        &Polynomial::monomial(ring, Monomial::new(self.lead.clone()))
            - &Polynomial::monomial(ring, Monomial::new(self.trail.clone()))
    }
}

/// Kernel generators, possibly truncated at a weighted degree.
#[derive(Clone, Debug)]
pub struct ToricKernel {
    pub relations: Vec<ToricRelation>,
    /// False when relations above the cap may be missing.
    pub complete: bool,
}

fn kernel(exponents: &[Vec<u32>], cap: Option<u64>) -> Result<ToricKernel, GroebnerError> {
    let s = exponents.len();
    let n = exponents.first().map_or(0, Vec::len);
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=s).map(|i| format!("u{i}")));
    let vars = VariableContext::with_blocks(names, vec![("x".into(), n), ("u".into(), s)])?;
    let ring = PolyRing::new(Field::Rational, vars);
    let order = MonomialOrder::Block(vec![(n, BaseOrder::GrevLex), (s, BaseOrder::GrevLex)]);
    let gens: Vec<Polynomial> = exponents
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut e = a.clone();
            e.resize(n + s, 0);
            &ring.var(n + i) - &Polynomial::monomial(&ring, Monomial::new(e))
        })
        .collect();
    let weights: Vec<u64> = std::iter::repeat_n(1, n)
        .chain(exponents.iter().map(|a| a.iter().map(|&e| e as u64).sum()))
        .collect();
    let (basis, complete) = match cap {
        None => (buchberger(&ring, &gens, &order)?, true),
        Some(c) => {
            let t = truncated_groebner(&ring, &gens, &order, c, &weights)?;
            (t.basis, t.complete)
        }
    };
    let mut relations: Vec<ToricRelation> = basis
        .elements()
        .iter()
        .filter(|p| !p.involves_any(0..n))
        .map(|p| {
            let terms = p.terms_by(&order);
            debug_assert_eq!(terms.len(), 2, "toric ideals are generated by binomials");
            let lead = terms[0].0.exponents()[n..].to_vec();
            let trail = terms[1].0.exponents()[n..].to_vec();
            let degree = terms[0].0.weighted_degree(&weights);
            ToricRelation { lead, trail, degree }
        })
        .collect();
    relations.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.lead.cmp(&b.lead)).then_with(|| a.trail.cmp(&b.trail)));
    Ok(ToricKernel { relations, complete })
}

/// Binomial generators of the kernel of `K[u] → K[x]`, `ui ↦ x^αi`.
///
/// Computed by eliminating `x` from `⟨ui - x^αi⟩`; sorted by degree, then lex.
pub fn toric_kernel(exponents: &[Vec<u32>]) -> Result<Vec<ToricRelation>, GroebnerError> {
    Ok(kernel(exponents, None)?.relations)
}

/// Kernel relations of weighted degree at most `cap` (weights `ui ↦ |αi|`).
pub fn toric_kernel_truncated(exponents: &[Vec<u32>], cap: u64) -> Result<ToricKernel, GroebnerError> {
    kernel(exponents, Some(cap))
}
