//! Exact coefficient arithmetic over the integers and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::AlgebraError;

/// The coefficient ring a presentation is defined over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coefficients {
    Integers,
    PrimeField { p: u32 },
}

impl Coefficients {
    pub fn prime_field(p: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Coefficients::PrimeField { p })
    }

    pub fn char_two(&self) -> bool {
        matches!(self, Coefficients::PrimeField { p: 2 })
    }

    /// Odd-degree generators square to zero unless we are in characteristic 2.
    pub fn exterior_odd(&self) -> bool {
        !self.char_two()
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Coefficients::Integers => Scalar::Int(BigInt::zero()),
            Coefficients::PrimeField { .. } => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Coefficients::Integers => Scalar::Int(BigInt::one()),
            Coefficients::PrimeField { .. } => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Coefficients::Integers => Scalar::Int(BigInt::from(n)),
            Coefficients::PrimeField { p } => {
                Scalar::Mod((n.rem_euclid(i64::from(*p))) as u32)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Coefficients::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Coefficients::PrimeField { p }, Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((u64::from(*x) + u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("scalar does not belong to this coefficient ring"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Coefficients::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Coefficients::PrimeField { p }, Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((u64::from(*x) * u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("scalar does not belong to this coefficient ring"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Coefficients::Integers, Scalar::Int(x)) => Scalar::Int(-x),
            (Coefficients::PrimeField { p }, Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar does not belong to this coefficient ring"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Coefficients::Integers, Scalar::Int(x)) => x.abs().is_one(),
            (Coefficients::PrimeField { .. }, Scalar::Mod(x)) => *x != 0,
            _ => false,
        }
    }

    /// Multiplicative inverse of a unit. Panics on non-units; callers gate on `is_unit`.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Coefficients::Integers, Scalar::Int(x)) => {
                assert!(x.abs().is_one(), "non-unit integer has no inverse");
                Scalar::Int(x.clone())
            }
            (Coefficients::PrimeField { p }, Scalar::Mod(x)) => {
                assert!(*x != 0, "zero has no inverse");
                Scalar::Mod(mod_pow(*x, p - 2, *p))
            }
            _ => panic!("scalar does not belong to this coefficient ring"),
        }
    }

    /// Exact division a / b when it exists.
    pub fn div_exact(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        match (self, a, b) {
            (Coefficients::Integers, Scalar::Int(x), Scalar::Int(y)) => {
                if y.is_zero() {
                    return None;
                }
                let (q, r) = (x / y, x % y);
                if r.is_zero() {
                    Some(Scalar::Int(q))
                } else {
                    None
                }
            }
            (Coefficients::PrimeField { .. }, _, b) => {
                if self.is_zero(b) {
                    None
                } else {
                    Some(self.mul(a, &self.inv(b)))
                }
            }
            _ => None,
        }
    }
}

/// An exact scalar: arbitrary-precision integer, or a prime-field residue.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Int(BigInt),
    Mod(u32),
}

impl Scalar {
    /// Signed value for display and serialization. `None` for integers
    /// outside the i64 range (does not occur in the catalog).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Int(x) => i64::try_from(x).ok(),
            Scalar::Mod(x) => Some(i64::from(*x)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

fn mod_pow(base: u32, mut exp: u32, p: u32) -> u32 {
    let mut base = u64::from(base) % u64::from(p);
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while u64::from(d) * u64::from(d) <= u64::from(n) {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_requires_prime() {
        assert!(Coefficients::prime_field(2).is_ok());
        assert!(Coefficients::prime_field(7).is_ok());
        assert!(Coefficients::prime_field(6).is_err());
        assert!(Coefficients::prime_field(1).is_err());
    }

    #[test]
    fn f5_inverses() {
        let f5 = Coefficients::prime_field(5).unwrap();
        for x in 1..5 {
            let s = Scalar::Mod(x);
            let inv = f5.inv(&s);
            assert_eq!(f5.mul(&s, &inv), f5.one());
        }
    }

    #[test]
    fn integer_units() {
        let z = Coefficients::Integers;
        assert!(z.is_unit(&z.from_i64(-1)));
        assert!(!z.is_unit(&z.from_i64(2)));
        assert_eq!(z.div_exact(&z.from_i64(6), &z.from_i64(3)), Some(z.from_i64(2)));
        assert_eq!(z.div_exact(&z.from_i64(5), &z.from_i64(3)), None);
    }
}
