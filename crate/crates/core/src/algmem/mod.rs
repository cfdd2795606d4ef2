//! Subalgebra membership through tag variables.
//!
//! For `A = K[f1, ..., fs]` put `J = ⟨f1 - t1, ..., fs - ts⟩` in `K[x, t]` and
//! fix an order eliminating `x`. Then `g ∈ A` exactly when `NF(g, J)` uses
//! only the `t` variables, and that normal form is a certificate `p` with
//! `g = p(f1, ..., fs)`.
//!
//! Normal forms come from exact Buchberger bases. Verdicts therefore agree
//! with any space-efficient normal-form algorithm; only resource use differs.

pub mod bounds;

use std::fmt;
use std::sync::Arc;

use crate::groebner::{buchberger, truncated_groebner, GroebnerBasis, GroebnerError};
use crate::poly::{BaseOrder, MonomialOrder, PolyError, PolyRing, Polynomial, VariableContext};

pub use bounds::{
    bound_certification, bound_ci, bound_dube, bound_hermann, bound_mayr_ritscher, BoundError,
};

#[derive(Debug, thiserror::Error)]
pub enum AlgMemError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("generator {0} is not homogeneous")]
    InhomogeneousGenerator(usize),
    #[error("target is not homogeneous")]
    InhomogeneousTarget,
    #[error("certificate does not evaluate to the target")]
    CertificateMismatch,
}

/// Generators `f1, ..., fs` of a subalgebra of `K[x]`.
///
/// The shape flags are always recomputed from the generators.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    monomial: bool,
    binomial: bool,
}

impl SubalgebraPresentation {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        if generators.iter().any(|g| !g.ring().same_as(ring)) {
            return Err(PolyError::ContextMismatch);
        }
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        let monomial = generators.iter().all(|g| g.num_terms() <= 1);
        let binomial = generators.iter().all(|g| g.num_terms() <= 2);
        Ok(SubalgebraPresentation { ring: ring.clone(), generators, homogeneous, monomial, binomial })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    pub fn is_binomial(&self) -> bool {
        self.binomial
    }

    /// Largest generator degree, 0 when there are none.
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// The ring `K[t1, ..., ts]` with tag names that avoid the `x` names.
    pub fn tag_ring(&self) -> Arc<PolyRing> {
        let prefix = fresh_prefix(self.ring.names(), self.len());
        let names: Vec<String> = (1..=self.len()).map(|i| format!("{prefix}{i}")).collect();
        PolyRing::new(self.ring.field(), VariableContext::new(names).expect("generated names are valid"))
    }
}

/// A prefix `p` such that `p1, ..., ps` clash with none of `names`.
pub(crate) fn fresh_prefix(names: &[String], s: usize) -> String {
    let clashes = |p: &str| (1..=s).any(|i| names.iter().any(|n| *n == format!("{p}{i}")));
    for p in ["t", "u", "v", "w", "s"] {
        if !clashes(p) {
            return p.to_string();
        }
    }
    (0..).map(|k| format!("tag{k}_")).find(|p| !clashes(p)).unwrap()
}

/// `p(f1, ..., fs)` for `p` in the tag ring.
pub fn evaluate_in(p: &Polynomial, pres: &SubalgebraPresentation) -> Result<Polynomial, PolyError> {
    p.evaluate(&pres.ring, &pres.generators)
}

/// A polynomial `p` in the tag variables with `p(f1, ..., fs) = g`.
///
/// The identity is checked when the certificate is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    p: Polynomial,
}

impl Certificate {
    pub fn new(p: Polynomial, pres: &SubalgebraPresentation, g: &Polynomial) -> Result<Certificate, AlgMemError> {
        if &evaluate_in(&p, pres)? != g {
            return Err(AlgMemError::CertificateMismatch);
        }
        Ok(Certificate { p })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.p
    }

    /// Total degree of `p`; 0 for `p = 0`.
    pub fn degree(&self) -> u64 {
        self.p.degree().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.p.num_terms()
    }
}

/// Evaluates `p` at the generators and compares with `g`.
///
/// Returns the verdict together with `deg p` and the number of terms of `p`.
pub fn verify_certificate(
    p: &Polynomial,
    pres: &SubalgebraPresentation,
    g: &Polynomial,
) -> Result<(bool, u64, usize), PolyError> {
    let ok = &evaluate_in(p, pres)? == g;
    Ok((ok, p.degree().unwrap_or(0), p.num_terms()))
}

/// Outcome of a membership query.
#[derive(Clone, Debug)]
pub struct MembershipVerdict {
    pub member: bool,
    pub certificate: Option<Certificate>,
    /// `NF(g, J)` in `K[x, t]` when `g` is not a member.
    pub witness: Option<Polynomial>,
}

impl MembershipVerdict {
    /// Key-value record, one `key: value` pair per line.
    pub fn record(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("member", if self.member { "yes" } else { "no" }.to_string())];
        if let Some(c) = &self.certificate {
            out.push(("certificate", c.polynomial().to_string()));
            out.push(("certificate_degree", c.degree().to_string()));
            out.push(("certificate_terms", c.num_terms().to_string()));
        }
        if let Some(w) = &self.witness {
            out.push(("witness", w.to_string()));
        }
        out
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.record() {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// The ideal `J = ⟨fi - ti⟩` in `K[x, t]` with an order eliminating `x`.
#[derive(Clone, Debug)]
pub struct TagSystem {
    pres: SubalgebraPresentation,
    joint: Arc<PolyRing>,
    tags: Arc<PolyRing>,
    order: MonomialOrder,
    ideal: Vec<Polynomial>,
}

impl TagSystem {
    /// `x_order` orders the `x` block; the `t` block always uses graded lex.
    pub fn new(pres: &SubalgebraPresentation, x_order: &MonomialOrder) -> Result<TagSystem, PolyError> {
        let n = pres.ring.nvars();
        let s = pres.len();
        x_order.check_nvars(n)?;
        let tags = pres.tag_ring();
        let mut names: Vec<String> = pres.ring.names().to_vec();
        names.extend(tags.names().iter().cloned());
        let vars = VariableContext::with_blocks(names, vec![("x".into(), n), ("t".into(), s)])?;
        let joint = PolyRing::new(pres.ring.field(), vars);
        let mut blocks = x_order.blocks(n);
        blocks.push((s, BaseOrder::GrLex));
        let order = MonomialOrder::Block(blocks);
        let x_map: Vec<Option<usize>> = (0..n).map(Some).collect();
        let ideal = pres
            .generators
            .iter()
            .enumerate()
            .map(|(i, f)| Ok(&f.transport(&joint, &x_map)? - &joint.var(n + i)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(TagSystem { pres: pres.clone(), joint, tags, order, ideal })
    }

    pub fn joint_ring(&self) -> &Arc<PolyRing> {
        &self.joint
    }

    pub fn tag_ring(&self) -> &Arc<PolyRing> {
        &self.tags
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The generators `fi - ti` of `J`.
    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    /// Weights making every `fi - ti` homogeneous: `xj ↦ 1`, `ti ↦ deg fi`.
    pub fn homogeneous_weights(&self) -> Vec<u64> {
        let mut w = vec![1; self.pres.ring.nvars()];
        w.extend(self.pres.generators.iter().map(|f| f.degree().unwrap_or(0)));
        w
    }

    fn lift(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        if !g.ring().same_as(&self.pres.ring) {
            return Err(PolyError::ContextMismatch);
        }
        let map: Vec<Option<usize>> = (0..self.pres.ring.nvars()).map(Some).collect();
        g.transport(&self.joint, &map)
    }

    fn verdict(&self, g: &Polynomial, nf: Polynomial) -> Result<MembershipVerdict, AlgMemError> {
        let n = self.pres.ring.nvars();
        if nf.involves_any(0..n) {
            return Ok(MembershipVerdict { member: false, certificate: None, witness: Some(nf) });
        }
        let map: Vec<Option<usize>> = (0..n).map(|_| None).chain((0..self.pres.len()).map(Some)).collect();
        let p = nf.transport(&self.tags, &map)?;
        let cert = Certificate::new(p, &self.pres, g)?;
        Ok(MembershipVerdict { member: true, certificate: Some(cert), witness: None })
    }
}

/// A tag system with its Gröbner basis, reusable across many targets.
#[derive(Clone, Debug)]
pub struct MembershipOracle {
    system: TagSystem,
    gb: GroebnerBasis,
}

impl MembershipOracle {
    pub fn new(pres: &SubalgebraPresentation, x_order: &MonomialOrder) -> Result<MembershipOracle, AlgMemError> {
        let system = TagSystem::new(pres, x_order)?;
        let gb = buchberger(&system.joint, &system.ideal, &system.order)?;
        Ok(MembershipOracle { system, gb })
    }

    pub fn system(&self) -> &TagSystem {
        &self.system
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn decide(&self, g: &Polynomial) -> Result<MembershipVerdict, AlgMemError> {
        let nf = self.gb.normal_form(&self.system.lift(g)?)?;
        self.system.verdict(g, nf)
    }
}

/// Decides `g ∈ K[f1, ..., fs]`, with lex on the `x` block.
pub fn decide_membership(pres: &SubalgebraPresentation, g: &Polynomial) -> Result<MembershipVerdict, AlgMemError> {
    decide_membership_with(pres, g, &MonomialOrder::lex())
}

pub fn decide_membership_with(
    pres: &SubalgebraPresentation,
    g: &Polynomial,
    x_order: &MonomialOrder,
) -> Result<MembershipVerdict, AlgMemError> {
    MembershipOracle::new(pres, x_order)?.decide(g)
}

/// Membership for homogeneous generators and target.
///
/// A lowest-degree certificate has weighted degree at most `deg g`, so the
/// basis of `J` is only computed up to that degree.
pub fn decide_membership_homogeneous(
    pres: &SubalgebraPresentation,
    g: &Polynomial,
) -> Result<MembershipVerdict, AlgMemError> {
    decide_membership_homogeneous_with(pres, g, &MonomialOrder::lex())
}

pub fn decide_membership_homogeneous_with(
    pres: &SubalgebraPresentation,
    g: &Polynomial,
    x_order: &MonomialOrder,
) -> Result<MembershipVerdict, AlgMemError> {
    if let Some(i) = pres.generators.iter().position(|f| !f.is_homogeneous()) {
        return Err(AlgMemError::InhomogeneousGenerator(i));
    }
    if !g.is_homogeneous() {
        return Err(AlgMemError::InhomogeneousTarget);
    }
    let system = TagSystem::new(pres, x_order)?;
    let weights = system.homogeneous_weights();
    let cap = g.degree().unwrap_or(0);
    let tb = truncated_groebner(&system.joint, &system.ideal, &system.order, cap, &weights)?;
    let nf = tb.normal_form(&system.lift(g)?)?;
    system.verdict(g, nf)
}

#[cfg(test)]
mod tests;
