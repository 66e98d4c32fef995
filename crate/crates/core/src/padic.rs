//! p-adic valuations of rationals and polynomials, and multiplicative
//! orders modulo p.

use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ntheory::{factor_u64, inv_mod, is_prime_u64, pow_mod};
use crate::poly::PolyQ;

/// A rational prime below 2^64, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Extended integer: a finite exponent or `+∞` (the valuation of zero).
///
/// The derived order puts every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl From<i64> for Valuation {
    fn from(v: i64) -> Self {
        Valuation::Finite(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Exponent of `p` in a nonzero natural number.
pub(crate) fn uint_valuation(n: &BigUint, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let pb = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn vp_int(n: &BigInt, p: Prime) -> Valuation {
    if n.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(uint_valuation(n.magnitude(), p.0))
    }
}

/// The exact exponent of `p` in `q`; `+∞` when `q = 0`.
pub fn vp(q: &BigRational, p: Prime) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let num = uint_valuation(q.numer().magnitude(), p.0);
    let den = uint_valuation(q.denom().magnitude(), p.0);
    Valuation::Finite(num - den)
}

/// Gaussian valuation: the least valuation among the coefficients.
pub fn gauss_valuation(f: &PolyQ, p: Prime) -> Valuation {
    f.coeffs()
        .iter()
        .map(|c| vp(c, p))
        .min()
        .unwrap_or(Valuation::Infinite)
}

/// Image of a p-integral rational in `F_p`. `None` if `p` divides the denominator.
pub fn residue(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
    if den == 0 {
        return None;
    }
    let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
    Some(crate::ntheory::mul_mod(num, inv_mod(den, p), p))
}

/// Multiplicative order of `a` modulo `p`, for `a` with `ν_p(a) = 0`.
pub fn ord_p(a: &BigRational, p: Prime) -> Result<u64> {
    if vp(a, p) != Valuation::Finite(0) {
        return Err(Error::NotAUnit {
            value: a.to_string(),
            prime: p.0,
        });
    }
    let r = residue(a, p.0).expect("unit has a residue");
    Ok(order_of_residue(r, p.0))
}

/// Order of a nonzero residue in `F_p^*`, stripping prime factors of `p - 1`.
pub(crate) fn order_of_residue(r: u64, p: u64) -> u64 {
    let mut k = p - 1;
    for (q, _) in factor_u64(p - 1) {
        while k.is_multiple_of(q) && pow_mod(r, k / q, p) == 1 {
            k /= q;
        }
    }
    k
}

pub(crate) fn is_unit(q: &BigRational, p: Prime) -> bool {
    vp(q, p) == Valuation::Finite(0)
}
