use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// The coefficient field of a polynomial system.
///
/// A system carries exactly one field; coefficients from different fields are
/// never combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals, with arbitrary-precision numerators and denominators.
    Rational,
    /// The prime field of the given characteristic.
    Prime(u64),
}

impl Field {
    /// The prime field of characteristic `p`; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Field, PolyError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_int(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Coefficient {
        match *self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coefficient::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match *self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coefficient::Residue {
                    value: r.to_u64().expect("residue fits the modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field; fails when `den` is zero in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient, PolyError> {
        match *self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = d.inv().ok_or(PolyError::DivisionByZero)?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        c.field() == *self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: a reduced rational or a residue modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rational,
            Coefficient::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.recip()),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, e: u32) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(num_traits::pow(r.clone(), e as usize)),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: mod_pow(*value, e as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// True for rationals that print with a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Residue { .. } => false,
        }
    }
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    acc
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "coefficients from different prime fields");
    a
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Coefficient::Residue {
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a - b),
            (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Coefficient::Residue {
                    value: ((*a as u128 + p as u128 - *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Coefficient::Residue { value: mod_mul(*a, *b, p), modulus: p }
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let c = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(c.to_string(), "-2/3");
        let Coefficient::Rational(r) = &c else { unreachable!() };
        assert!(r.denom().is_positive());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = Field::prime(7).unwrap();
        let a = f7.from_int(-1);
        assert_eq!(a, f7.from_int(6));
        assert_eq!(&a * &a, f7.one());
        let half = f7.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(&half + &half, f7.one());
        assert_eq!(f7.from_int(3).inv().unwrap(), f7.from_int(5));
        assert!(f7.zero().inv().is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn zero_denominator_in_prime_field() {
        let f7 = Field::prime(7).unwrap();
        assert!(f7.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
    }
}
