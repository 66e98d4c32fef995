//! Dense polynomials over a prime field `F_p`, `p < 2^31`.

mod dynamics;
mod factor;
mod frobenius;

use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ntheory::inv_mod;
use crate::padic::Prime;

pub use dynamics::{
    jones_quadratic_stability, newly_reducible_index, JonesVerdict, SquareCheck, FF_DEGREE_CAP,
};
pub use factor::{ff_factor, ff_irreducible, FfFactorization, DEFAULT_SEED};
pub(crate) use frobenius::FrobeniusMap;

pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    c: Vec<u64>,
}

impl PolyModP {
    /// Builds a polynomial from low-to-high residues, reducing them mod `p`.
    pub fn new(p: Prime, residues: Vec<u64>) -> Result<Self> {
        if p.get() >= MAX_MODULUS {
            return Err(Error::InvalidParameter(format!(
                "modulus {p} must be below 2^31"
            )));
        }
        let p = p.get();
        Ok(Self::from_raw(
            p,
            residues.into_iter().map(|c| c % p).collect(),
        ))
    }

    /// Same as [`PolyModP::new`] but takes signed integers.
    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Result<Self> {
        let m = p.get() as i64;
        Self::new(p, coeffs.iter().map(|c| c.rem_euclid(m) as u64).collect())
    }

    pub(crate) fn from_raw(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, c }
    }

    pub(crate) fn zero(p: u64) -> Self {
        PolyModP { p, c: Vec::new() }
    }

    pub(crate) fn constant(p: u64, a: u64) -> Self {
        Self::from_raw(p, vec![a % p])
    }

    pub(crate) fn x(p: u64) -> Self {
        Self::from_raw(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Residues, low to high.
    pub fn residues(&self) -> &[u64] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn monic(&self) -> PolyModP {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn scale(&self, a: u64) -> PolyModP {
        let p = self.p;
        Self::from_raw(p, self.c.iter().map(|&c| c * (a % p) % p).collect())
    }

    pub fn add(&self, other: &PolyModP) -> PolyModP {
        let n = self.c.len().max(other.c.len());
        Self::from_raw(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, other: &PolyModP) -> PolyModP {
        let n = self.c.len().max(other.c.len());
        Self::from_raw(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &PolyModP) -> PolyModP {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut acc = vec![0u128; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                acc[i + j] += (a * b) as u128;
            }
        }
        let p = self.p as u128;
        Self::from_raw(self.p, acc.into_iter().map(|v| (v % p) as u64).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyModP) -> (PolyModP, PolyModP) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let p = self.p;
        let Some(n) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if n < dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(divisor.leading(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let q = rem[k + dd] * inv % p;
            if q == 0 {
                continue;
            }
            for (j, &b) in divisor.c.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - q * b % p) % p;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::from_raw(p, quot), Self::from_raw(p, rem))
    }

    pub fn rem(&self, divisor: &PolyModP) -> PolyModP {
        self.div_rem(divisor).1
    }

    pub fn mul_mod(&self, other: &PolyModP, m: &PolyModP) -> PolyModP {
        self.mul(other).rem(m)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyModP) -> PolyModP {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PolyModP {
        let p = self.p;
        Self::from_raw(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % p) * c % p)
                .collect(),
        )
    }

    pub fn pow_mod(&self, exp: &BigUint, m: &PolyModP) -> PolyModP {
        let mut acc = Self::constant(self.p, 1).rem(m);
        let base = self.rem(m);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if exp.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> PolyModP {
        let mut base = self.clone();
        let mut acc = Self::constant(self.p, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn evaluate(&self, a: u64) -> u64 {
        let p = self.p;
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &c| (acc * (a % p) + c) % p)
    }

    /// `self(g(x))` over `F_p`.
    pub fn compose(&self, g: &PolyModP) -> PolyModP {
        let mut acc = Self::zero(self.p);
        for &c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(self.p, c));
        }
        acc
    }

    /// The n-th iterate `f ∘ … ∘ f` over `F_p`.
    pub fn iterate(&self, n: u32) -> PolyModP {
        let mut current = self.clone();
        for _ in 1..n {
            current = self.compose(&current);
        }
        current
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyModP({self} mod {})", self.p)
    }
}

impl Serialize for PolyModP {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PolyModP", 3)?;
        st.serialize_field("prime", &self.p)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("poly", &self.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let f = PolyModP::from_signed(p(5), &[1, 0, 1]).unwrap(); // x^2+1
        let g = PolyModP::from_signed(p(5), &[-2, 1]).unwrap(); // x-2
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, PolyModP::from_signed(p(5), &[2, 1]).unwrap());
        assert_eq!(q.mul(&g), f);
        assert_eq!(f.evaluate(2), 0);
    }

    #[test]
    fn large_modulus_rejected() {
        assert!(PolyModP::new(p(2_147_483_659), vec![1]).is_err());
        assert!(PolyModP::new(p(2_147_483_647), vec![1]).is_ok());
    }

    #[test]
    fn display_uses_residues() {
        let f = PolyModP::from_signed(p(5), &[-1, 0, 2]).unwrap();
        assert_eq!(f.to_string(), "2x^2 + 4");
    }

    #[test]
    fn gcd_is_monic() {
        let a = PolyModP::from_signed(p(7), &[-1, 0, 1]).unwrap().scale(3);
        let b = PolyModP::from_signed(p(7), &[1, 1]).unwrap().scale(5);
        assert_eq!(a.gcd(&b), PolyModP::from_signed(p(7), &[1, 1]).unwrap());
    }

    #[test]
    fn iterate_mod_p_matches_composition() {
        let f = PolyModP::from_signed(p(43), &[1, 0, 1]).unwrap();
        let f3 = f.compose(&f.compose(&f));
        assert_eq!(f.iterate(3), f3);
        assert_eq!(f3.degree(), Some(8));
    }
}
