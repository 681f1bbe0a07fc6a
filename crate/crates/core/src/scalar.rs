//! Coefficient fields: exact rationals and small prime fields.
//!
//! Every [`Scalar`] carries its field tag, so values from different fields can
//! be detected instead of silently combined.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Default prime for search mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds a prime field after checking that `p` is an odd prime below 2^31.
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::InvalidPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime { value: n.rem_euclid(p as i64) as u32, modulus: p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Prime { value: r.to_u32().expect("residue fits in u32"), modulus: p }
            }
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, AlgebraError> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(self.from_bigint(num).mul(&d.inv()))
    }

    /// Parses the CLI notation `rational` or `fp:P`.
    pub fn parse_tag(tag: &str) -> Result<Self, AlgebraError> {
        let t = tag.trim();
        if t.eq_ignore_ascii_case("rational") || t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(p) = t.strip_prefix("fp:") {
            let p: u32 = p.parse().map_err(|_| AlgebraError::InvalidFieldTag(tag.to_string()))?;
            return Field::prime(p);
        }
        Err(AlgebraError::InvalidFieldTag(tag.to_string()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); prime-field values lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    #[inline]
    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                debug_assert_eq!(p, q);
                let s = *a as u64 + *b as u64;
                let p64 = *p as u64;
                Scalar::Prime { value: if s >= p64 { (s - p64) as u32 } else { s as u32 }, modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    #[inline]
    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    #[inline]
    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Prime { value: ((*a as u64 * *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    #[inline]
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => {
                Scalar::Prime { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => {
                // extended Euclid on (value, modulus)
                let (mut r0, mut r1) = (*modulus as i64, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Scalar::Prime { value: t0.rem_euclid(*modulus as i64) as u32, modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Multiplies by a small non-negative integer (used by formal derivatives).
    pub fn mul_u64(&self, k: u64) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a * BigRational::from_integer(BigInt::from(k))),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: ((*value as u64 * (k % *modulus as u64)) % *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(32003).unwrap();
        for n in [1i64, 2, 3, 17, 32002, -5] {
            let a = f.from_i64(n);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(32001).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn rational_lowest_terms() {
        let f = Field::Rational;
        let a = f.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        let q = a.as_rational().unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn zero_denominator_mod_p() {
        let f = Field::prime(7).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    #[test]
    fn field_tags() {
        assert_eq!(Field::parse_tag("rational").unwrap(), Field::Rational);
        assert_eq!(Field::parse_tag("fp:32003").unwrap(), Field::Prime(32003));
        assert!(Field::parse_tag("fp:9").is_err());
        assert!(Field::parse_tag("reals").is_err());
    }
}
