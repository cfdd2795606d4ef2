use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::InstanceError;
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial};

/// Replacement rules `x^αi ≡ x^βi` generating a congruence on monomials.
#[derive(Clone, Debug)]
pub struct CsgSystem {
    ring: Arc<PolyRing>,
    rules: Vec<(Monomial, Monomial)>,
}

impl CsgSystem {
    pub fn new(ring: &Arc<PolyRing>, rules: Vec<(Monomial, Monomial)>) -> Result<CsgSystem, InstanceError> {
        for (a, b) in &rules {
            if a.nvars() != ring.nvars() || b.nvars() != ring.nvars() {
                return Err(PolyError::ContextMismatch.into());
            }
        }
        Ok(CsgSystem { ring: ring.clone(), rules })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rules(&self) -> &[(Monomial, Monomial)] {
        &self.rules
    }

    /// True when every rule has equal degree on both sides.
    pub fn is_homogeneous(&self) -> bool {
        self.rules.iter().all(|(a, b)| a.degree() == b.degree())
    }

    /// The binomials `x^αi - x^βi`.
    pub fn binomials(&self) -> Vec<Polynomial> {
        self.rules
            .iter()
            .map(|(a, b)| &Polynomial::monomial(&self.ring, a.clone()) - &Polynomial::monomial(&self.ring, b.clone()))
            .collect()
    }
}

/// `(R, m, m') ↦ (x^α1 - x^β1, ..., x^αs - x^βs; m - m')`.
pub fn csg_to_ideal(c: &CsgSystem, m: &Monomial, m2: &Monomial) -> (Vec<Polynomial>, Polynomial) {
    let g = &Polynomial::monomial(&c.ring, m.clone()) - &Polynomial::monomial(&c.ring, m2.clone());
    (c.binomials(), g)
}

/// One replacement `γ·lhs → γ·rhs`.
///
/// `forward` means rule `(α, β)` was applied as `α → β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: usize,
    pub forward: bool,
    pub cofactor: Monomial,
    pub to: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritePath {
    pub start: Monomial,
    pub steps: Vec<RewriteStep>,
}

impl RewritePath {
    /// Number of replacement steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every monomial on the path, starting point included.
    pub fn monomials(&self) -> Vec<&Monomial> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.to)).collect()
    }

    pub fn end(&self) -> &Monomial {
        self.steps.last().map_or(&self.start, |s| &s.to)
    }

    /// Checks that each step really is one rule application.
    pub fn validate(&self, c: &CsgSystem) -> Result<(), InstanceError> {
        let mut cur = &self.start;
        for (k, st) in self.steps.iter().enumerate() {
            let (a, b) = c.rules.get(st.rule).ok_or(InstanceError::InvalidStep(k))?;
            let (from, to) = if st.forward { (a, b) } else { (b, a) };
            let ok = st.cofactor.checked_mul(from)? == *cur && st.cofactor.checked_mul(to)? == st.to;
            if !ok {
                return Err(InstanceError::InvalidStep(k));
            }
            cur = &st.to;
        }
        Ok(())
    }
}

/// Search budget for [`csg_decide_bfs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsLimits {
    pub max_visited: usize,
    /// Monomials above this degree are not explored.
    pub max_degree: Option<u64>,
}

impl Default for BfsLimits {
    fn default() -> Self {
        BfsLimits { max_visited: 100_000, max_degree: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CsgOutcome {
    /// A shortest rewriting path from `m` to `m'`.
    Equivalent(RewritePath),
    /// The whole class of `m` was explored without meeting `m'`.
    NotEquivalent { visited: usize },
    /// The search stopped at a limit.
    Unknown { visited: usize },
}

/// Breadth-first search over single replacements, in both directions.
pub fn csg_decide_bfs(c: &CsgSystem, m: &Monomial, target: &Monomial, limits: BfsLimits) -> Result<CsgOutcome, InstanceError> {
    if m.nvars() != c.ring.nvars() || target.nvars() != c.ring.nvars() {
        return Err(PolyError::ContextMismatch.into());
    }
    let mut parent: HashMap<Monomial, Option<(Monomial, RewriteStep)>> = HashMap::new();
    parent.insert(m.clone(), None);
    let mut queue = VecDeque::from([m.clone()]);
    let mut truncated = false;
    while let Some(cur) = queue.pop_front() {
        if cur == *target {
            let mut steps = Vec::new();
            let mut at = cur;
            while let Some(Some((prev, step))) = parent.get(&at) {
                steps.push(step.clone());
                at = prev.clone();
            }
            steps.reverse();
            return Ok(CsgOutcome::Equivalent(RewritePath { start: m.clone(), steps }));
        }
        for (rule, (a, b)) in c.rules.iter().enumerate() {
            for (forward, from, to) in [(true, a, b), (false, b, a)] {
                let Some(cofactor) = cur.div(from) else { continue };
                let next = cofactor.checked_mul(to)?;
                if parent.contains_key(&next) {
                    continue;
                }
                if limits.max_degree.is_some_and(|d| next.degree() > d) || parent.len() >= limits.max_visited {
                    truncated = true;
                    continue;
                }
                let step = RewriteStep { rule, forward, cofactor, to: next.clone() };
                parent.insert(next.clone(), Some((cur.clone(), step)));
                queue.push_back(next);
            }
        }
    }
    let visited = parent.len();
    Ok(if truncated { CsgOutcome::Unknown { visited } } else { CsgOutcome::NotEquivalent { visited } })
}
