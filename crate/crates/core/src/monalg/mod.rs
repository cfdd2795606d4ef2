//! Monomial subalgebras: membership is integer feasibility.
//!
//! `x^β ∈ K[x^α1, ..., x^αs]` iff `β = Σ ci αi` for some `c ∈ ℕ^s`, and a
//! polynomial lies in such an algebra iff each monomial of its support does.

mod sat;

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::poly::{Monomial, Polynomial};

pub use sat::{encode_1in3sat, EncodedSat, SatInstance};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MonAlgError {
    #[error("expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("target {0} is too large for the table solver")]
    TooLarge(u64),
}

/// The algebra generated by the monomials `x^αi`, given by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAlgebra {
    dim: usize,
    gens: Vec<Vec<u32>>,
}

impl MonomialAlgebra {
    pub fn new(dim: usize, gens: Vec<Vec<u32>>) -> Result<MonomialAlgebra, MonAlgError> {
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(MonAlgError::DimensionMismatch { expected: dim, found: g.len() });
        }
        Ok(MonomialAlgebra { dim, gens })
    }

    /// Generators taken from monomials of a polynomial generating set.
    pub fn from_monomials(dim: usize, gens: &[Monomial]) -> Result<MonomialAlgebra, MonAlgError> {
        MonomialAlgebra::new(dim, gens.iter().map(|m| m.exponents().to_vec()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn check(&self, beta: &[u32]) -> Result<(), MonAlgError> {
        if beta.len() != self.dim {
            return Err(MonAlgError::DimensionMismatch { expected: self.dim, found: beta.len() });
        }
        Ok(())
    }

    /// `Σ ci αi`.
    pub fn combine(&self, c: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (ci, a) in c.iter().zip(&self.gens) {
            for (o, &e) in out.iter_mut().zip(a) {
                *o += ci * e as u64;
            }
        }
        out
    }
}

struct Dfs<'a> {
    gens: &'a [Vec<u32>],
    /// `reach[i][k]`: some generator with index `>= i` has a positive `k`-th entry.
    reach: Vec<Vec<bool>>,
    failed: HashSet<(usize, Vec<u32>)>,
    c: Vec<u64>,
}

impl Dfs<'_> {
    fn search(&mut self, i: usize, residual: &mut Vec<u32>) -> bool {
        if residual.iter().all(|&r| r == 0) {
            self.c[i..].iter_mut().for_each(|x| *x = 0);
            return true;
        }
        if i == self.gens.len() || residual.iter().zip(&self.reach[i]).any(|(&r, &ok)| r > 0 && !ok) {
            return false;
        }
        if self.failed.contains(&(i, residual.clone())) {
            return false;
        }
        let a = &self.gens[i];
        // Largest multiple of a fitting in the residual; zero vectors never help.
        let max = a
            .iter()
            .zip(residual.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| (r / e) as u64)
            .min()
            .unwrap_or(0);
        let mut used = 0u64;
        loop {
            self.c[i] = used;
            if self.search(i + 1, residual) {
                // undo the subtraction
                for (r, &e) in residual.iter_mut().zip(a) {
                    *r += e * used as u32;
                }
                return true;
            }
            if used == max {
                break;
            }
            for (r, &e) in residual.iter_mut().zip(a) {
                *r -= e;
            }
            used += 1;
        }
        for (r, &e) in residual.iter_mut().zip(a) {
            *r += e * used as u32;
        }
        self.failed.insert((i, residual.clone()));
        false
    }
}

/// A vector `c` with `Σ ci αi = β`, or `None`.
///
/// Depth-first over the generators in order, trying `c_i = 0, 1, ...`, so the
/// witness is the lexicographically smallest solution. Each `c_i` is bounded
/// by the residual, which stays inside the box `c_i <= max β`.
pub fn monomial_membership(a: &MonomialAlgebra, beta: &[u32]) -> Result<Option<Vec<u64>>, MonAlgError> {
    a.check(beta)?;
    let s = a.gens.len();
    let mut reach = vec![vec![false; a.dim]; s + 1];
    for i in (0..s).rev() {
        reach[i] = reach[i + 1].clone();
        for (k, &e) in a.gens[i].iter().enumerate() {
            reach[i][k] |= e > 0;
        }
    }
    let mut dfs = Dfs { gens: &a.gens, reach, failed: HashSet::new(), c: vec![0; s] };
    let mut residual = beta.to_vec();
    Ok(dfs.search(0, &mut residual).then_some(dfs.c))
}

/// Same question answered by memoized recursion on residual vectors.
///
/// Meant for unary-scale inputs: the table can hold every vector below `β`.
pub fn monomial_membership_dp(a: &MonomialAlgebra, beta: &[u32]) -> Result<Option<Vec<u64>>, MonAlgError> {
    a.check(beta)?;
    // memo[r] = index of a generator leading to a solution, or None if infeasible
    let mut memo: HashMap<Vec<u32>, Option<usize>> = HashMap::new();
    fn solve(a: &MonomialAlgebra, r: &[u32], memo: &mut HashMap<Vec<u32>, Option<usize>>) -> bool {
        if r.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(hit) = memo.get(r) {
            return hit.is_some();
        }
        let mut found = None;
        for (j, g) in a.gens.iter().enumerate() {
            if g.iter().all(|&e| e == 0) || g.iter().zip(r).any(|(e, x)| e > x) {
                continue;
            }
            let next: Vec<u32> = r.iter().zip(g).map(|(x, e)| x - e).collect();
            if solve(a, &next, memo) {
                found = Some(j);
                break;
            }
        }
        memo.insert(r.to_vec(), found);
        found.is_some()
    }
    if !solve(a, beta, &mut memo) {
        return Ok(None);
    }
    let mut c = vec![0u64; a.gens.len()];
    let mut r = beta.to_vec();
    while r.iter().any(|&x| x > 0) {
        let j = memo[&r].expect("solution recorded");
        c[j] += 1;
        for (x, e) in r.iter_mut().zip(&a.gens[j]) {
            *x -= e;
        }
    }
    Ok(Some(c))
}

/// Largest target the table solver accepts.
pub const SUBSET_SUM_LIMIT: u64 = 1 << 26;

/// `c ∈ ℕ^s` with `Σ ci ai = b`, by a table over `0..=b`.
pub fn unbounded_subset_sum(a: &[u64], b: u64) -> Result<Option<Vec<u64>>, MonAlgError> {
    if b > SUBSET_SUM_LIMIT {
        return Err(MonAlgError::TooLarge(b));
    }
    let b = b as usize;
    // last[v] = item used to reach v last
    let mut last: Vec<Option<usize>> = vec![None; b + 1];
    let mut reach = vec![false; b + 1];
    reach[0] = true;
    for v in 1..=b {
        for (j, &x) in a.iter().enumerate() {
            let x = x as usize;
            if x > 0 && x <= v && reach[v - x] {
                reach[v] = true;
                last[v] = Some(j);
                break;
            }
        }
    }
    if !reach[b] {
        return Ok(None);
    }
    let mut c = vec![0u64; a.len()];
    let mut v = b;
    while v > 0 {
        let j = last[v].unwrap();
        c[j] += 1;
        v -= a[j] as usize;
    }
    Ok(Some(c))
}

/// Per-monomial outcome of [`poly_in_monomial_algebra`].
#[derive(Clone, Debug)]
pub struct PolyMembership {
    pub member: bool,
    /// Each support monomial with its witness, `None` where infeasible.
    pub breakdown: Vec<(Monomial, Option<Vec<u64>>)>,
}

/// A polynomial is in a monomial algebra iff every support monomial is.
pub fn poly_in_monomial_algebra(a: &MonomialAlgebra, f: &Polynomial) -> Result<PolyMembership, MonAlgError> {
    let mut breakdown = Vec::with_capacity(f.num_terms());
    for m in f.monomials() {
        let c = monomial_membership(a, m.exponents())?;
        breakdown.push((m.clone(), c));
    }
    let member = breakdown.iter().all(|(_, c)| c.is_some());
    Ok(PolyMembership { member, breakdown })
}

/// `[1,0,2]`.
pub fn format_vector<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Parses `[1,0,2]`; whitespace around entries is allowed.
pub fn parse_vector(text: &str) -> Result<Vec<u32>, String> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected [..], found '{text}'"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad entry '{}': {e}", x.trim())))
        .collect()
}
