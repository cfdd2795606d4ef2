use std::collections::BTreeSet;
use std::fmt;

use super::{MonAlgError, MonomialAlgebra};

/// Sets `S1, ..., Sn` of positive integers, each of size at most 3.
///
/// The question is whether some `T` meets every `Sj` in exactly one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatInstance {
    sets: Vec<Vec<u64>>,
}

impl SatInstance {
    pub fn new(sets: Vec<Vec<u64>>) -> Result<SatInstance, MonAlgError> {
        let mut out = Vec::with_capacity(sets.len());
        for (j, set) in sets.into_iter().enumerate() {
            let set: BTreeSet<u64> = set.into_iter().collect();
            if set.len() > 3 {
                return Err(MonAlgError::Parse { line: j + 1, message: "more than 3 elements".into() });
            }
            if set.contains(&0) {
                return Err(MonAlgError::Parse { line: j + 1, message: "elements must be positive".into() });
            }
            out.push(set.into_iter().collect());
        }
        Ok(SatInstance { sets: out })
    }

    pub fn sets(&self) -> &[Vec<u64>] {
        &self.sets
    }

    /// Every element occurring in some set, ascending.
    pub fn universe(&self) -> Vec<u64> {
        let all: BTreeSet<u64> = self.sets.iter().flatten().copied().collect();
        all.into_iter().collect()
    }

    pub fn is_solution(&self, t: &[u64]) -> bool {
        self.sets.iter().all(|s| s.iter().filter(|x| t.contains(x)).count() == 1)
    }

    /// Lines `S1: 1 2 5`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<SatInstance, MonAlgError> {
        let mut sets = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| MonAlgError::Parse { line: k + 1, message };
            let (label, rest) = line.split_once(':').ok_or_else(|| err("expected 'Sj: ...'".into()))?;
            let expected = format!("S{}", sets.len() + 1);
            if label.trim() != expected {
                return Err(err(format!("expected label {expected}")));
            }
            let set = rest
                .split_whitespace()
                .map(|x| x.parse::<u64>().map_err(|e| err(format!("bad element '{x}': {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if set.len() > 3 {
                return Err(err("more than 3 elements".into()));
            }
            if set.contains(&0) {
                return Err(err("elements must be positive".into()));
            }
            sets.push(set);
        }
        SatInstance::new(sets)
    }
}

impl fmt::Display for SatInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, s) in self.sets.iter().enumerate() {
            write!(f, "S{}:", j + 1)?;
            for x in s {
                write!(f, " {x}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A monomial membership instance equivalent to a [`SatInstance`].
#[derive(Clone, Debug)]
pub struct EncodedSat {
    pub algebra: MonomialAlgebra,
    pub beta: Vec<u32>,
    /// `elements[i]` is the set element behind generator `i`.
    pub elements: Vec<u64>,
}

impl EncodedSat {
    /// The set `T` selected by a membership witness.
    pub fn decode(&self, c: &[u64]) -> Vec<u64> {
        self.elements.iter().zip(c).filter(|(_, &ci)| ci > 0).map(|(&e, _)| e).collect()
    }
}

/// One square-free generator per element `i`, with `(αi)_j = 1` iff `i ∈ Sj`,
/// and target `β = (1, ..., 1)`.
pub fn encode_1in3sat(inst: &SatInstance) -> EncodedSat {
    let elements = inst.universe();
    let n = inst.sets.len();
    let gens = elements
        .iter()
        .map(|e| inst.sets.iter().map(|s| s.contains(e) as u32).collect())
        .collect();
    EncodedSat {
        algebra: MonomialAlgebra::new(n, gens).expect("vectors have one entry per set"),
        beta: vec![1; n],
        elements,
    }
}
