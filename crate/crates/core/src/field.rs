//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Everything downstream is generic over [`Field`]. A [`FieldSpec`] is the
//! runtime description (parsed from the command line or JSON); it is turned
//! into a concrete field through [`FieldSpec::dispatch`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u32 },
}

impl FieldSpec {
    /// `0` means the rationals, anything else must be a prime.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(FieldSpec::Rationals);
        }
        if c > u32::MAX as u64 || !is_prime(c) {
            return Err(Error::InvalidField(format!("{c} is not 0 or a prime")));
        }
        Ok(FieldSpec::PrimeField { p: c as u32 })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => *p as u64,
        }
    }

    /// Does the characteristic divide `m`? Characteristic 0 divides nothing
    /// but 0.
    pub fn divides(&self, m: u128) -> bool {
        match self.characteristic() {
            0 => m == 0,
            p => m.is_multiple_of(p as u128),
        }
    }

    pub fn dispatch<V: FieldVisitor>(&self, visitor: V) -> V::Output {
        match *self {
            FieldSpec::Rationals => visitor.visit(Rationals),
            FieldSpec::PrimeField { p } => visitor.visit(PrimeField::new(p).expect("validated prime")),
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F_{p}"),
        }
    }
}

/// Run code generically over whatever field a [`FieldSpec`] names.
pub trait FieldVisitor {
    type Output;
    fn visit<F: Field>(self, field: F) -> Self::Output;
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements are plain values; the field object carries
/// whatever context the arithmetic needs (the modulus for `F_p`).
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Canonical residue in `[0, p)` for prime fields; `None` over `Q`.
    fn to_residue(&self, a: &Self::Elem) -> Option<u64>;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `y += a * x`, touching only the listed positions of `x` when given.
    fn axpy(&self, y: &mut [Self::Elem], a: &Self::Elem, x: &[Self::Elem], support: Option<&[usize]>) {
        match support {
            Some(idx) => {
                for &i in idx {
                    let t = self.mul(a, &x[i]);
                    y[i] = self.add(&y[i], &t);
                }
            }
            None => {
                for (yi, xi) in y.iter_mut().zip(x) {
                    if !self.is_zero(xi) {
                        let t = self.mul(a, xi);
                        *yi = self.add(yi, &t);
                    }
                }
            }
        }
    }

    fn scale(&self, v: &mut [Self::Elem], a: &Self::Elem) {
        for x in v.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(a, x);
            }
        }
    }
}

/// The prime field `F_p`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let p = self.p as u64;
        let mut r = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a as u64, self.p as u64 - 2) as u32)
        }
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn to_residue(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let v: i64 = s.trim().parse().map_err(|_| Error::Parse(format!("not an element of F_{}: {s:?}", self.p)))?;
        Ok(self.from_i64(v))
    }

    fn axpy(&self, y: &mut [u32], a: &u32, x: &[u32], support: Option<&[usize]>) {
        if *a == 0 {
            return;
        }
        let p = self.p as u64;
        let a = *a as u64;
        match support {
            Some(idx) => {
                for &i in idx {
                    y[i] = ((y[i] as u64 + a * x[i] as u64) % p) as u32;
                }
            }
            None => {
                for (yi, &xi) in y.iter_mut().zip(x) {
                    if xi != 0 {
                        *yi = ((*yi as u64 + a * xi as u64) % p) as u32;
                    }
                }
            }
        }
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_residue(&self, _a: &BigRational) -> Option<u64> {
        None
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        // Small integers keep entry growth in check.
        self.from_i64(rng.gen_range(-3..=3))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}
