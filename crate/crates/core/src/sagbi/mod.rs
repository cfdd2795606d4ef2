//! Subduction, SAGBI tests and capped SAGBI completion.
//!
//! Completion only semi-decides whether a finite SAGBI basis exists, so every
//! procedure here takes explicit caps and reports `Unknown` or `CapReached`
//! instead of guessing.

mod toric;

use std::collections::HashMap;
use std::sync::Arc;

use crate::algmem::{fresh_prefix, AlgMemError, Certificate, SubalgebraPresentation};
use crate::groebner::GroebnerError;
use crate::monalg::{monomial_membership, MonomialAlgebra};
use crate::poly::{Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, VariableContext};

pub use toric::{toric_kernel, toric_kernel_truncated, ToricKernel, ToricRelation};

#[derive(Debug, thiserror::Error)]
pub enum SagbiError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    AlgMem(#[from] AlgMemError),
    #[error("basis element {0} is zero")]
    ZeroElement(usize),
    #[error("caps must be positive")]
    ZeroCap,
}

/// Nonzero monic polynomials with their initial exponents under `order`.
#[derive(Clone, Debug)]
pub struct SagbiCandidate {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    initial: Vec<Monomial>,
    semigroup: MonomialAlgebra,
}

impl SagbiCandidate {
    /// Elements are made monic; zero elements are rejected.
    pub fn new(ring: &Arc<PolyRing>, order: &MonomialOrder, basis: Vec<Polynomial>) -> Result<SagbiCandidate, SagbiError> {
        order.check_nvars(ring.nvars())?;
        let mut monic = Vec::with_capacity(basis.len());
        for (i, b) in basis.iter().enumerate() {
            if !b.ring().same_as(ring) {
                return Err(PolyError::ContextMismatch.into());
            }
            if b.is_zero() {
                return Err(SagbiError::ZeroElement(i));
            }
            monic.push(b.monic(order));
        }
        let initial: Vec<Monomial> = monic.iter().map(|b| b.leading_monomial(order).unwrap().clone()).collect();
        let semigroup = MonomialAlgebra::from_monomials(ring.nvars(), &initial).expect("same dimension");
        Ok(SagbiCandidate { ring: ring.clone(), order: order.clone(), basis: monic, initial, semigroup })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn initial_monomials(&self) -> &[Monomial] {
        &self.initial
    }

    pub fn initial_exponents(&self) -> Vec<Vec<u32>> {
        self.semigroup.generators().to_vec()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `K[t1, ..., tk]`, one tag per basis element.
    pub fn tag_ring(&self) -> Arc<PolyRing> {
        let prefix = fresh_prefix(self.ring.names(), self.len());
        let names = (1..=self.len()).map(|i| format!("{prefix}{i}"));
        PolyRing::new(self.ring.field(), VariableContext::new(names).expect("generated names are valid"))
    }

    /// `∏ si^ai`, with a cache of powers shared across calls.
    fn product(&self, a: &[u64], cache: &mut HashMap<(usize, u64), Polynomial>) -> Result<Polynomial, PolyError> {
        let mut acc = self.ring.one();
        for (i, &e) in a.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = match cache.get(&(i, e)) {
                Some(p) => p.clone(),
                None => {
                    let p = self.basis[i].pow(u32::try_from(e).map_err(|_| PolyError::ExponentOverflow)?)?;
                    cache.insert((i, e), p.clone());
                    p
                }
            };
            acc = acc.checked_mul(&p)?;
        }
        Ok(acc)
    }
}

/// `f = certificate(s1, ..., sk) + remainder`.
#[derive(Clone, Debug)]
pub struct SubductionResult {
    pub remainder: Polynomial,
    /// Polynomial in the candidate's tag ring.
    pub certificate: Polynomial,
}

/// Full subduction of `f` by the candidate.
///
/// While the initial monomial of what is left is a product `∏ ini(si)^ai`,
/// the matching multiple of `∏ si^ai` is subtracted; otherwise the initial term
/// moves to the remainder. Each step strictly lowers the initial monomial.
pub fn subduct(f: &Polynomial, s: &SagbiCandidate) -> Result<SubductionResult, SagbiError> {
    if !f.ring().same_as(&s.ring) {
        return Err(PolyError::ContextMismatch.into());
    }
    let tags = s.tag_ring();
    let mut cache = HashMap::new();
    let mut h = f.clone();
    let mut rem_terms = Vec::new();
    let mut cert_terms = Vec::new();
    let mut last: Option<Monomial> = None;
    while let Some((c, m)) = h.initial_term(&s.order) {
        let (c, m) = (c.clone(), m.clone());
        debug_assert!(last.as_ref().is_none_or(|l| s.order.cmp(&m, l).is_lt()));
        last = Some(m.clone());
        if m.is_one() {
            cert_terms.push((Monomial::one(s.len()), c.clone()));
            h = &h - &s.ring.constant(c);
            continue;
        }
        match monomial_membership(&s.semigroup, m.exponents()).expect("dimension matches") {
            Some(a) => {
                let prod = s.product(&a, &mut cache)?;
                h = h.checked_sub(&prod.scale(&c))?;
                let e: Vec<u32> = a.iter().map(|&x| x as u32).collect();
                cert_terms.push((Monomial::new(e), c));
            }
            None => {
                rem_terms.push((m.clone(), c.clone()));
                h = &h - &Polynomial::term(&s.ring, c, m);
            }
        }
    }
    Ok(SubductionResult {
        remainder: Polynomial::from_terms(&s.ring, rem_terms)?,
        certificate: Polynomial::from_terms(&tags, cert_terms)?,
    })
}

/// A candidate that passed [`is_sagbi`].
#[derive(Clone, Debug)]
pub struct VerifiedSagbi(SagbiCandidate);

impl VerifiedSagbi {
    pub fn candidate(&self) -> &SagbiCandidate {
        &self.0
    }

    /// Membership in the subalgebra: subduction leaves no remainder.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, SagbiError> {
        Ok(subduct(f, &self.0)?.remainder.is_zero())
    }
}

/// A lifted toric relation whose subduction does not vanish.
#[derive(Clone, Debug)]
pub struct SagbiWitness {
    pub relation: ToricRelation,
    /// `∏ si^lead - ∏ si^trail`.
    pub lifted: Polynomial,
    pub remainder: Polynomial,
}

#[derive(Clone, Debug)]
pub enum SagbiVerdict {
    Yes(VerifiedSagbi),
    No(Box<SagbiWitness>),
    Unknown,
}

impl SagbiVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SagbiVerdict::Yes(_) => "yes",
            SagbiVerdict::No(_) => "no",
            SagbiVerdict::Unknown => "unknown",
        }
    }
}

fn lift(s: &SagbiCandidate, r: &ToricRelation, cache: &mut HashMap<(usize, u64), Polynomial>) -> Result<Polynomial, PolyError> {
    let a: Vec<u64> = r.lead.iter().map(|&e| e as u64).collect();
    let b: Vec<u64> = r.trail.iter().map(|&e| e as u64).collect();
    s.product(&a, cache)?.checked_sub(&s.product(&b, cache)?)
}

/// Tests whether the candidate is a SAGBI basis of the algebra it generates.
///
/// Lifts every toric relation among the initial monomials of weighted
/// degree at most `cap` and subducts it. A nonzero remainder is a witness
/// against; if some relation may lie above the cap the answer is `Unknown`.
/// Monomial candidates are SAGBI bases outright, since their lifted
/// relations vanish identically.
pub fn is_sagbi(s: &SagbiCandidate, cap: u64) -> Result<SagbiVerdict, SagbiError> {
    if s.basis.iter().all(|b| b.num_terms() == 1) {
        return Ok(SagbiVerdict::Yes(VerifiedSagbi(s.clone())));
    }
    let kernel = toric_kernel_truncated(&s.initial_exponents(), cap)?;
    let mut cache = HashMap::new();
    for r in kernel.relations {
        let lifted = lift(s, &r, &mut cache)?;
        let sub = subduct(&lifted, s)?;
        if !sub.remainder.is_zero() {
            return Ok(SagbiVerdict::No(Box::new(SagbiWitness { relation: r, lifted, remainder: sub.remainder })));
        }
    }
    if kernel.complete {
        Ok(SagbiVerdict::Yes(VerifiedSagbi(s.clone())))
    } else {
        Ok(SagbiVerdict::Unknown)
    }
}

/// Is `m` in the initial algebra? Decided against a verified SAGBI basis.
pub fn initial_algebra_membership(m: &Monomial, s: &VerifiedSagbi) -> Result<bool, SagbiError> {
    if m.nvars() != s.0.ring.nvars() {
        return Err(PolyError::ContextMismatch.into());
    }
    Ok(monomial_membership(&s.0.semigroup, m.exponents()).expect("dimension matches").is_some())
}

/// A basis element together with its expression in the original generators.
#[derive(Clone, Debug)]
pub struct CompletionElement {
    pub polynomial: Polynomial,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Finished,
    CapReached,
}

#[derive(Clone, Debug)]
pub struct CompletionReport {
    pub status: CompletionStatus,
    pub basis: Vec<CompletionElement>,
    /// Initial monomials of the elements appended during completion.
    pub new_initials: Vec<Monomial>,
    /// One line per appended element.
    pub log: Vec<String>,
    pub rounds: usize,
}

impl CompletionReport {
    pub fn candidate(&self, order: &MonomialOrder) -> Result<SagbiCandidate, SagbiError> {
        let ring = self.basis.first().map(|e| e.polynomial.ring().clone());
        match ring {
            Some(r) => SagbiCandidate::new(&r, order, self.basis.iter().map(|e| e.polynomial.clone()).collect()),
            None => Err(SagbiError::ZeroCap),
        }
    }
}

pub const DEFAULT_DEGREE_CAP: u64 = 20;
pub const DEFAULT_ROUND_CAP: usize = 50;

/// Robbiano–Sweedler completion with explicit caps.
///
/// Each round lifts the toric relations (up to `degree_cap`) of the current
/// initial monomials, subducts them, and appends the nonzero remainders.
/// Every appended element carries a certificate over the tags of `gens`,
/// re-verified by evaluation. Constant generators are skipped.
pub fn sagbi_completion(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    degree_cap: u64,
    round_cap: usize,
) -> Result<CompletionReport, SagbiError> {
    if degree_cap == 0 || round_cap == 0 {
        return Err(SagbiError::ZeroCap);
    }
    let pres = SubalgebraPresentation::new(ring, gens.to_vec())?;
    let tags = pres.tag_ring();
    let mut elements: Vec<CompletionElement> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_constant() {
            continue;
        }
        let lc = g.leading_coefficient(order).unwrap().inv().unwrap();
        let p = tags.var(i).scale(&lc);
        let monic = g.scale(&lc);
        let certificate = Certificate::new(p, &pres, &monic)?;
        elements.push(CompletionElement { polynomial: monic, certificate });
    }
    let mut log = Vec::new();
    let mut new_initials = Vec::new();
    let mut rounds = 0;
    loop {
        if rounds == round_cap {
            return Ok(CompletionReport { status: CompletionStatus::CapReached, basis: elements, new_initials, log, rounds });
        }
        rounds += 1;
        let cand = SagbiCandidate::new(ring, order, elements.iter().map(|e| e.polynomial.clone()).collect())?;
        let kernel = toric_kernel_truncated(&cand.initial_exponents(), degree_cap)?;
        let mut added = 0;
        let mut cache = HashMap::new();
        let mut current = cand.clone();
        for r in &kernel.relations {
            let lifted = lift(&cand, r, &mut cache)?;
            let sub = subduct(&lifted, &current)?;
            if sub.remainder.is_zero() {
                continue;
            }
            // remainder = lifted - sub.certificate(current basis)
            let lifted_cert = {
                let a = cert_product(&elements[..cand.len()], &r.lead, &tags)?;
                let b = cert_product(&elements[..cand.len()], &r.trail, &tags)?;
                &a - &b
            };
            let args: Vec<Polynomial> = elements.iter().map(|e| e.certificate.polynomial().clone()).collect();
            let sub_cert = sub.certificate.evaluate(&tags, &args)?;
            let lc = sub.remainder.leading_coefficient(order).unwrap().inv().unwrap();
            let monic = sub.remainder.scale(&lc);
            let p = (&lifted_cert - &sub_cert).scale(&lc);
            let certificate = Certificate::new(p, &pres, &monic)?;
            let ini = monic.leading_monomial(order).unwrap().clone();
            log.push(format!(
                "round {rounds}: added {} (ini = {})",
                monic.display_with(order),
                ring.format_monomial(&ini)
            ));
            new_initials.push(ini);
            elements.push(CompletionElement { polynomial: monic, certificate });
            added += 1;
            current = SagbiCandidate::new(ring, order, elements.iter().map(|e| e.polynomial.clone()).collect())?;
        }
        if added == 0 {
            let status = if kernel.complete { CompletionStatus::Finished } else { CompletionStatus::CapReached };
            return Ok(CompletionReport { status, basis: elements, new_initials, log, rounds });
        }
    }
}

/// `∏ Pi^ei` for the certificates `Pi` of the first elements.
fn cert_product(elements: &[CompletionElement], e: &[u32], tags: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
    let mut acc = tags.one();
    for (el, &k) in elements.iter().zip(e) {
        if k > 0 {
            acc = acc.checked_mul(&el.certificate.polynomial().pow(k)?)?;
        }
    }
    Ok(acc)
}
