//! Reductions and worst-case instance families.
//!
//! - [`ideal_to_algebra`] turns ideal membership into subalgebra membership.
//! - [`CsgSystem`] is the word problem for commutative semigroups, solved by
//!   breadth-first search over rewriting steps.
//! - [`Lba`] simulates linear bounded automata.
//! - [`BinaryCounterInstance`] is the homogeneous subalgebra whose
//!   certificates need exponentially many terms.

mod counter;
mod csg;
mod lba;


use std::sync::Arc;

use crate::algmem::{evaluate_in, AlgMemError, SubalgebraPresentation};
use crate::poly::{PolyError, PolyRing, Polynomial, VariableContext};

pub use counter::{derive_certificate_from_path, BinaryCounterInstance};
pub use csg::{csg_decide_bfs, csg_to_ideal, BfsLimits, CsgOutcome, CsgSystem, RewritePath, RewriteStep};
pub use lba::{lba_simulate, Configuration, Lba, LbaOutcome, LbaTrace, Move, Symbol, Transition};

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    AlgMem(#[from] AlgMemError),
    #[error("certificate does not evaluate to the reduced target")]
    CertificateMismatch,
    #[error("representation does not sum to the target")]
    RepresentationMismatch,
    #[error("step {0} of the path is not a single rule application")]
    InvalidStep(usize),
    #[error("invalid input word: {0}")]
    InvalidWord(String),
    #[error("invalid transition: {0}")]
    InvalidTransition(String),
    #[error("parameter must be at least 1")]
    NeedPositive,
}

/// The image of `(f1, ..., fs; g)` under `(fi; g) ↦ (t·fi, x1, ..., xn; t·g)`.
///
/// `t` is a fresh variable placed in front of the `x` variables.
#[derive(Clone, Debug)]
pub struct IdealToAlgebra {
    source: Arc<PolyRing>,
    ideal: Vec<Polynomial>,
    target_ideal: Polynomial,
    ring: Arc<PolyRing>,
    algebra: SubalgebraPresentation,
    target: Polynomial,
}

impl IdealToAlgebra {
    /// The ring `K[x]` of the ideal instance.
    pub fn source_ring(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn ideal_generators(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn ideal_target(&self) -> &Polynomial {
        &self.target_ideal
    }

    /// `K[t, x]`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Generators `t·f1, ..., t·fs, x1, ..., xn`.
    pub fn algebra(&self) -> &SubalgebraPresentation {
        &self.algebra
    }

    /// `t·g`.
    pub fn target(&self) -> &Polynomial {
        &self.target
    }

    /// Name chosen for `t`.
    pub fn t_name(&self) -> &str {
        &self.ring.names()[0]
    }

    fn s(&self) -> usize {
        self.ideal.len()
    }
}

fn fresh_name(names: &[String], base: &str) -> String {
    std::iter::once(base.to_string())
        .chain((0..).map(|k| format!("{base}_{k}")))
        .find(|c| !names.contains(c))
        .unwrap()
}

/// Builds the subalgebra instance equivalent to `g ∈ ⟨f1, ..., fs⟩`.
pub fn ideal_to_algebra(f: &[Polynomial], g: &Polynomial) -> Result<IdealToAlgebra, PolyError> {
    let source = g.ring().clone();
    if f.iter().any(|p| !p.ring().same_as(&source)) {
        return Err(PolyError::ContextMismatch);
    }
    let n = source.nvars();
    let mut names = vec![fresh_name(source.names(), "t")];
    names.extend(source.names().iter().cloned());
    let ring = PolyRing::new(source.field(), VariableContext::new(names)?);
    let shift: Vec<Option<usize>> = (1..=n).map(Some).collect();
    let t = ring.var(0);
    let mut gens = Vec::with_capacity(f.len() + n);
    for p in f {
        gens.push(&t * &p.transport(&ring, &shift)?);
    }
    gens.extend((1..=n).map(|i| ring.var(i)));
    let target = &t * &g.transport(&ring, &shift)?;
    Ok(IdealToAlgebra {
        algebra: SubalgebraPresentation::new(&ring, gens)?,
        source,
        ideal: f.to_vec(),
        target_ideal: g.clone(),
        ring,
        target,
    })
}

/// Cofactors `h1, ..., hs` with `g = Σ hi·fi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub cofactors: Vec<Polynomial>,
}

impl Representation {
    /// `max deg hi` over the nonzero cofactors.
    pub fn degree(&self) -> Option<u64> {
        self.cofactors.iter().filter_map(Polynomial::degree).max()
    }

    pub fn num_terms(&self) -> usize {
        self.cofactors.iter().map(Polynomial::num_terms).sum()
    }

    /// `Σ hi·fi`.
    pub fn evaluate(&self, f: &[Polynomial], ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let mut acc = ring.zero();
        for (h, fi) in self.cofactors.iter().zip(f) {
            acc = acc.checked_add(&h.checked_mul(fi)?)?;
        }
        Ok(acc)
    }
}

/// Reads a representation off a certificate for `t·g`.
///
/// Keeps the component of degree 1 in the tags of `t·fj` (the `x` tags get
/// degree 0), sets `t = 1` and collects the coefficient of each such tag.
pub fn certificate_to_representation(p: &Polynomial, red: &IdealToAlgebra) -> Result<Representation, InstanceError> {
    if evaluate_in(p, &red.algebra)? != red.target {
        return Err(InstanceError::CertificateMismatch);
    }
    let s = red.s();
    let n = red.source.nvars();
    let weights: Vec<u64> = (0..s + n).map(|j| u64::from(j < s)).collect();
    let p1 = p.graded_component(1, &weights)?;
    let mut cofactors = vec![red.source.zero(); s];
    for (m, c) in p1.terms() {
        let e = m.exponents();
        let j = (0..s).find(|&j| e[j] == 1).expect("degree-1 terms carry exactly one tag");
        let mut rest = vec![0u32; n];
        rest.copy_from_slice(&e[s..]);
        let term = Polynomial::term(&red.source, c.clone(), crate::poly::Monomial::new(rest));
        cofactors[j] = &cofactors[j] + &term;
    }
    let rep = Representation { cofactors };
    if rep.evaluate(&red.ideal, &red.source)? != red.target_ideal {
        return Err(InstanceError::RepresentationMismatch);
    }
    Ok(rep)
}

/// The certificate `Σ uj·hj(x-tags)` for `t·g` built from a representation.
pub fn representation_to_certificate(
    rep: &Representation,
    red: &IdealToAlgebra,
    tag_ring: &Arc<PolyRing>,
) -> Result<Polynomial, InstanceError> {
    let s = red.s();
    if rep.cofactors.len() != s {
        return Err(PolyError::ArityMismatch { expected: s, found: rep.cofactors.len() }.into());
    }
    let n = red.source.nvars();
    let map: Vec<Option<usize>> = (0..n).map(|i| Some(s + i)).collect();
    let mut p = tag_ring.zero();
    for (j, h) in rep.cofactors.iter().enumerate() {
        p = p.checked_add(&tag_ring.var(j).checked_mul(&h.transport(tag_ring, &map)?)?)?;
    }
    Ok(p)
}
