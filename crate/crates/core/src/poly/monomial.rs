use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::PolyError;

/// A power product `x^α`, stored as its exponent vector.
///
/// The total degree is cached. Exponents are `u32`; any product that would
/// overflow is reported instead of wrapping.
#[derive(Clone)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        if self.exps.len() != other.exps.len() {
            return Err(PolyError::ContextMismatch);
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Monomial, PolyError> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(e).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial::new(exps))
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    /// Panics on exponent overflow; use [`Monomial::checked_mul`] to handle it.
    fn mul(self, rhs: &Monomial) -> Monomial {
        self.checked_mul(rhs).expect("monomial exponent overflow")
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

/// Storage order: lexicographic on exponent vectors, first variable most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}
