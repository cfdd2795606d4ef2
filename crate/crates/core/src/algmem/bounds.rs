//! Degree bounds for ideal and subalgebra membership.
//!
//! Formulas containing a factor `1/2` are evaluated in exact rationals and
//! rounded up at the end, so every returned value is still a valid bound.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Results above this many bits are refused rather than computed.
pub const MAX_BITS: u64 = 1 << 24;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("result exceeds {MAX_BITS} bits")]
    TooLarge,
    #[error("n must be at least 1")]
    NeedPositiveN,
    #[error("r = {r} exceeds n = {n}")]
    DimensionTooLarge { r: u64, n: u64 },
    #[error("need at least {needed} degrees, got {got}")]
    TooFewDegrees { needed: usize, got: usize },
    #[error("degrees must be sorted nonincreasing")]
    Unsorted,
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn log2(q: &BigRational) -> f64 {
    let bits = |n: &BigInt| -> f64 {
        let b = n.bits();
        if b < 1000 {
            n.to_f64().unwrap().abs().log2()
        } else {
            // top 64 bits are plenty for an estimate
            let shift = b - 64;
            ((n >> shift) as BigInt).to_f64().unwrap().abs().log2() + shift as f64
        }
    };
    bits(q.numer()) - bits(q.denom())
}

/// `base^exp` with `exp` a (possibly huge) natural number, refusing results
/// that would need more than [`MAX_BITS`] bits.
fn pow(base: &BigRational, exp: &BigUint) -> Result<BigRational, BoundError> {
    if exp.is_zero() || base.is_one() {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        return Ok(BigRational::zero());
    }
    let e = exp.to_f64().unwrap_or(f64::INFINITY);
    let size = (log2(&base.abs()).abs() + 1.0) * e;
    if !size.is_finite() || size > MAX_BITS as f64 {
        return Err(BoundError::TooLarge);
    }
    let e = exp.to_u64().ok_or(BoundError::TooLarge)?;
    let numer = num_traits::pow(base.numer().clone(), e as usize);
    let denom = num_traits::pow(base.denom().clone(), e as usize);
    // powers of coprime integers stay coprime
    Ok(BigRational::new_raw(numer, denom))
}

fn pow_u(base: &BigRational, exp: u64) -> Result<BigRational, BoundError> {
    pow(base, &BigUint::from(exp))
}

/// `2^k` as an exponent.
fn two_pow(k: u64) -> Result<BigUint, BoundError> {
    if k > MAX_BITS {
        return Err(BoundError::TooLarge);
    }
    Ok(BigUint::one() << k)
}

fn ceil(q: BigRational) -> BigUint {
    let c = q.ceil().to_integer();
    c.to_biguint().expect("bounds are nonnegative")
}

/// `deg g + (d s)^(2^n)`.
pub fn bound_hermann(n: u64, s: u64, d: u64, deg_g: u64) -> Result<BigUint, BoundError> {
    let base = int(d) * int(s);
    Ok(ceil(int(deg_g) + pow(&base, &two_pow(n)?)?))
}

/// `deg g + d^s`, valid for complete intersections.
pub fn bound_ci(s: u64, d: u64, deg_g: u64) -> Result<BigUint, BoundError> {
    Ok(ceil(int(deg_g) + pow_u(&int(d), s)?))
}

/// `2 (d1^2 / 2 + d1)^(2^(n-1))`.
pub fn bound_dube(n: u64, d1: u64) -> Result<BigUint, BoundError> {
    if n == 0 {
        return Err(BoundError::NeedPositiveN);
    }
    let base = half() * int(d1) * int(d1) + int(d1);
    Ok(ceil(int(2) * pow(&base, &two_pow(n - 1)?)?))
}

/// `2 ((d1 ... d_{n-r})^(2(n-r)) / 2 + d1)^(2^r)` for an ideal of dimension `r`.
///
/// Only the first `n - r` entries of `degrees` enter the product; `d1` is
/// the first entry, so at least one degree is always required.
pub fn bound_mayr_ritscher(n: u64, r: u64, degrees: &[u64]) -> Result<BigUint, BoundError> {
    if r > n {
        return Err(BoundError::DimensionTooLarge { r, n });
    }
    let k = (n - r) as usize;
    let needed = k.max(1);
    if degrees.len() < needed {
        return Err(BoundError::TooFewDegrees { needed, got: degrees.len() });
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return Err(BoundError::Unsorted);
    }
    let d1 = int(degrees[0]);
    let prod = degrees[..k].iter().fold(BigRational::one(), |acc, &d| acc * int(d));
    let inner = half() * pow_u(&prod, 2 * k as u64)? + d1;
    Ok(ceil(int(2) * pow(&inner, &two_pow(r)?)?))
}

/// `deg g + ((d^(2 s^2) / 2 + d)^(2^n) + 1)^((n+s)^2 + 1) * deg(g)^(n+s)`.
///
/// Returns 0 for `deg g = 0`: constants are certified by constants.
pub fn bound_certification(n: u64, s: u64, d: u64, deg_g: u64) -> Result<BigUint, BoundError> {
    if deg_g == 0 {
        return Ok(BigUint::zero());
    }
    // estimate the size first; intermediate powers are already enormous
    let ld = (d.max(1) as f64).log2();
    let l_inner = (2.0 * s as f64 * s as f64 * ld).max(ld) + 1.0;
    let ns = n as f64 + s as f64;
    let l_total = (l_inner * 2f64.powi(n.min(1000) as i32) + 1.0) * (ns * ns + 1.0) + ns * (deg_g as f64).log2();
    if l_total > MAX_BITS as f64 {
        return Err(BoundError::TooLarge);
    }
    let inner = half() * pow_u(&int(d), 2 * s * s)? + int(d);
    let g = pow(&inner, &two_pow(n)?)? + BigRational::one();
    let ns = n + s;
    let outer = pow_u(&g, ns * ns + 1)?;
    let tail = pow_u(&int(deg_g), ns)?;
    Ok(ceil(int(deg_g) + outer * tail))
}
