//! Exact scalars over Q and over prime fields F_p with char != 2.
//!
//! Both scalar types implement [`Scalar`]; everything above this module is
//! generic over it. Constructors take a runtime [`FieldDesc`] because the
//! prime-field modulus is data, not a type parameter.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Runtime description of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rationals,
    PrimeField { p: u32 },
}

impl FieldDesc {
    /// The rationals Q.
    pub const Q: FieldDesc = FieldDesc::Rationals;

    /// F_p for an odd prime p. Rejects p = 2 (everything here assumes
    /// characteristic different from 2) and composite p.
    pub fn prime(p: u32) -> Result<FieldDesc> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDesc::PrimeField { p })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDesc::PrimeField { .. })
    }

    /// Number of elements for a prime field, `None` over Q.
    pub fn order(&self) -> Option<u32> {
        match self {
            FieldDesc::Rationals => None,
            FieldDesc::PrimeField { p } => Some(*p),
        }
    }

    pub fn check_same(&self, other: &FieldDesc) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(*self, *other))
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n64 = n as u64;
    while d * d <= n64 {
        if n64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Implementations carry enough context to perform
/// arithmetic (the prime-field element stores its modulus), and arithmetic
/// between elements of different fields is a bug, caught by debug assertions;
/// public operations validate fields at their boundaries first.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn field(&self) -> FieldDesc;
    fn zero(field: &FieldDesc) -> Self;
    fn one(field: &FieldDesc) -> Self;
    fn from_int(field: &FieldDesc, n: i64) -> Self;

    /// Parse a canonical coefficient literal: `a` or `a/b` (reduced, b > 0)
    /// over Q; a residue in `[0, p)` over F_p.
    fn parse(field: &FieldDesc, s: &str) -> Result<Self>;

    /// Canonical literal form accepted back by [`Scalar::parse`].
    fn literal(&self) -> String;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.field())
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Arbitrary-precision rational, always reduced with positive denominator
/// (maintained by `num-rational`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Rat> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Rat {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for Rat {
    fn field(&self) -> FieldDesc {
        FieldDesc::Rationals
    }

    fn zero(field: &FieldDesc) -> Self {
        debug_assert_eq!(*field, FieldDesc::Rationals);
        Rat(BigRational::zero())
    }

    fn one(field: &FieldDesc) -> Self {
        debug_assert_eq!(*field, FieldDesc::Rationals);
        Rat(BigRational::one())
    }

    fn from_int(field: &FieldDesc, n: i64) -> Self {
        debug_assert_eq!(*field, FieldDesc::Rationals);
        Rat::from_integer(n)
    }

    fn parse(field: &FieldDesc, s: &str) -> Result<Self> {
        debug_assert_eq!(*field, FieldDesc::Rationals);
        let bad = |reason: &str| Error::InvalidScalar {
            literal: s.to_string(),
            field: *field,
            reason: reason.to_string(),
        };
        let parse_int = |t: &str| -> Result<BigInt> {
            if t.is_empty() || t == "-" {
                return Err(bad("empty integer"));
            }
            t.parse::<BigInt>().map_err(|_| bad("not an integer"))
        };
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let numer = parse_int(n)?;
                let denom = parse_int(d)?;
                if denom <= BigInt::zero() {
                    return Err(bad("denominator must be positive"));
                }
                if denom.is_one() {
                    return Err(bad("denominator 1 must be written as a plain integer"));
                }
                if numer.gcd(&denom) != BigInt::one() {
                    return Err(bad("fraction is not reduced"));
                }
                Ok(Rat(BigRational::new_raw(numer, denom)))
            }
        }
    }

    fn literal(&self) -> String {
        self.0.to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

/// Element of F_p. Carries its modulus; mixing moduli is a bug caught by a
/// debug assertion (public entry points check fields before arithmetic).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
    v: u32,
}

impl Fp {
    pub fn new(p: u32, v: u32) -> Fp {
        Fp { p, v: v % p }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn residue(&self) -> u32 {
        self.v
    }

    fn check(&self, other: &Fp) {
        debug_assert_eq!(self.p, other.p, "mixed prime-field moduli");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

fn fp_of(field: &FieldDesc) -> u32 {
    match field {
        FieldDesc::PrimeField { p } => *p,
        FieldDesc::Rationals => unreachable!("rational field used for a prime-field scalar"),
    }
}

impl Scalar for Fp {
    fn field(&self) -> FieldDesc {
        FieldDesc::PrimeField { p: self.p }
    }

    fn zero(field: &FieldDesc) -> Self {
        Fp { p: fp_of(field), v: 0 }
    }

    fn one(field: &FieldDesc) -> Self {
        let p = fp_of(field);
        Fp { p, v: 1 % p }
    }

    fn from_int(field: &FieldDesc, n: i64) -> Self {
        let p = fp_of(field) as i64;
        let v = n.rem_euclid(p) as u32;
        Fp { p: p as u32, v }
    }

    fn parse(field: &FieldDesc, s: &str) -> Result<Self> {
        let p = fp_of(field);
        let bad = |reason: &str| Error::InvalidScalar {
            literal: s.to_string(),
            field: *field,
            reason: reason.to_string(),
        };
        let v: u32 = s.parse().map_err(|_| bad("not a residue"))?;
        if v >= p {
            return Err(bad("residue out of range [0, p)"));
        }
        Ok(Fp { p, v })
    }

    fn literal(&self) -> String {
        self.v.to_string()
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.v as u64 + other.v as u64) % self.p as u64;
        Fp { p: self.p, v: s as u32 }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.v as u64 + self.p as u64 - other.v as u64) % self.p as u64;
        Fp { p: self.p, v: s as u32 }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.v as u64 * other.v as u64) % self.p as u64;
        Fp { p: self.p, v: s as u32 }
    }

    fn neg(&self) -> Self {
        if self.v == 0 {
            *self
        } else {
            Fp { p: self.p, v: self.p - self.v }
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (v, p)
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, self.v as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1, "modulus must be prime");
        let v = t.rem_euclid(self.p as i64) as u32;
        Ok(Fp { p: self.p, v })
    }
}
