use std::sync::Arc;

use super::csg::{CsgSystem, RewritePath};
use super::InstanceError;
use crate::algmem::{Certificate, SubalgebraPresentation};
use crate::poly::{Field, Monomial, PolyRing, Polynomial, VariableContext};

/// The homogeneous subalgebra generated by the binary counter's rules.
///
/// Variables are `q0, q1, h0, ..., hn, x1_0, x1_1, ..., xn_0, xn_1`; a
/// configuration `(q, i, ▷b1...bn◁)` is the monomial `q·hi·x1_b1···xn_bn`.
/// Generators are the `3n` rule binomials followed by the `2n` variables
/// `xi_b`.
#[derive(Clone, Debug)]
pub struct BinaryCounterInstance {
    n: usize,
    ring: Arc<PolyRing>,
    labels: Vec<String>,
    algebra: SubalgebraPresentation,
    rules: CsgSystem,
    start: Monomial,
    end: Monomial,
    target: Polynomial,
}

impl BinaryCounterInstance {
    pub fn new(n: usize, field: Field) -> Result<BinaryCounterInstance, InstanceError> {
        if n == 0 {
            return Err(InstanceError::NeedPositive);
        }
        let mut names = vec!["q0".to_string(), "q1".to_string()];
        names.extend((0..=n).map(|i| format!("h{i}")));
        for i in 1..=n {
            names.push(format!("x{i}_0"));
            names.push(format!("x{i}_1"));
        }
        let nv = names.len();
        let ring = PolyRing::new(field, VariableContext::new(names.clone())?);
        let (q0, q1) = (0, 1);
        let h = |i: usize| 2 + i;
        let x = |i: usize, b: usize| n + 3 + 2 * (i - 1) + b;
        let mono = |vars: &[usize]| {
            let mut e = vec![0u32; nv];
            for &v in vars {
                e[v] += 1;
            }
            Monomial::new(e)
        };

        let mut labels = Vec::new();
        let mut rules = Vec::new();
        for i in 1..=n {
            labels.push(format!("R1_{i}"));
            rules.push((mono(&[q0, h(i), x(i, 0)]), mono(&[q1, h(i - 1), x(i, 1)])));
        }
        for i in 1..n {
            labels.push(format!("R2_{i}"));
            rules.push((mono(&[q0, h(i), x(i, 1)]), mono(&[q0, h(i + 1), x(i, 0)])));
        }
        for i in 1..=n {
            labels.push(format!("R3_{i}"));
            rules.push((mono(&[q1, h(i), x(i, 0)]), mono(&[q1, h(i - 1), x(i, 0)])));
        }
        labels.push("R4".to_string());
        rules.push((mono(&[q1, h(0)]), mono(&[q0, h(1)])));
        let rules = CsgSystem::new(&ring, rules)?;

        let mut gens = rules.binomials();
        for (v, name) in names.iter().enumerate().skip(n + 3) {
            labels.push(name.clone());
            gens.push(ring.var(v));
        }
        let zeros: Vec<usize> = (1..=n).map(|i| x(i, 0)).collect();
        let start = mono(&[&[q0, h(1)], zeros.as_slice()].concat());
        let mut last = zeros.clone();
        last[n - 1] = x(n, 1);
        let end = mono(&[&[q0, h(n)], last.as_slice()].concat());
        let target = &Polynomial::monomial(&ring, start.clone()) - &Polynomial::monomial(&ring, end.clone());
        Ok(BinaryCounterInstance {
            n,
            algebra: SubalgebraPresentation::new(&ring, gens)?,
            ring,
            labels,
            rules,
            start,
            end,
            target,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `R1_i`, `R2_i`, `R3_i`, `R4`, then the variable names.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn algebra(&self) -> &SubalgebraPresentation {
        &self.algebra
    }

    /// The rules behind the first `3n` generators, in the same order.
    pub fn rules(&self) -> &CsgSystem {
        &self.rules
    }

    /// `q0·h1·x1_0···xn_0`.
    pub fn start(&self) -> &Monomial {
        &self.start
    }

    /// `q0·hn·x1_0···x(n-1)_0·xn_1`.
    pub fn end(&self) -> &Monomial {
        &self.end
    }

    /// `g = start - end`, homogeneous of degree `n + 2`.
    pub fn target(&self) -> &Polynomial {
        &self.target
    }
}

/// Telescopes a rewriting path into a certificate for `start - end`.
///
/// A step `γ·α → γ·β` by rule `r` contributes `γ·(α - β) = γ·fr`, i.e. the
/// term `ur·∏ u_{xi_b}^{γ}`; backward steps contribute its negative.
pub fn derive_certificate_from_path(path: &RewritePath, inst: &BinaryCounterInstance) -> Result<Certificate, InstanceError> {
    path.validate(&inst.rules)?;
    let tags = inst.algebra.tag_ring();
    let field = inst.ring.field();
    let nr = inst.rules.rules().len();
    let first_x = inst.n + 3;
    let mut p = tags.zero();
    for (k, st) in path.steps.iter().enumerate() {
        let mut e = vec![0u32; tags.nvars()];
        e[st.rule] = 1;
        for (v, &a) in st.cofactor.exponents().iter().enumerate() {
            if a == 0 {
                continue;
            }
            if v < first_x {
                return Err(InstanceError::InvalidStep(k));
            }
            e[nr + v - first_x] += a;
        }
        let c = field.from_int(if st.forward { 1 } else { -1 });
        p = &p + &Polynomial::term(&tags, c, Monomial::new(e));
    }
    let g = &Polynomial::monomial(&inst.ring, path.start.clone()) - &Polynomial::monomial(&inst.ring, path.end().clone());
    Ok(Certificate::new(p, &inst.algebra, &g)?)
}
