//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored low-to-high (`coeffs[i]` is the coefficient of
//! `x^i`) and the vector never ends in a zero, so the zero polynomial is the
//! empty vector and has no degree.

mod expansion;
pub(crate) mod intmul;
mod iterate;
mod parse;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ff::PolyModP;
use crate::padic::{residue, vp, Prime, Valuation};

pub use expansion::{g_expansion, GExpansion};
pub use iterate::{iterate, IterationBudget};
pub use parse::{parse_poly, GRAMMAR};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes a rational as its `n/d` string.
pub(crate) fn ser_rational<S: Serializer>(
    q: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub(crate) fn ser_opt_rational<S: Serializer>(
    q: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, rejecting anything below `min` (the zero polynomial included).
    pub fn degree_at_least(&self, min: usize) -> Result<usize> {
        match self.degree() {
            Some(d) if d >= min => Ok(d),
            Some(d) => Err(Error::Degree {
                required: min,
                found: d.to_string(),
            }),
            None => Err(Error::Degree {
                required: min,
                found: "-inf".into(),
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigRational) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Splits `self = content * primitive` with `primitive` an integer
    /// polynomial of content 1 and positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRational, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRational::zero(), Vec::new());
        }
        let (ints, den) = self.cleared();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if self.leading().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), prim)
    }

    /// Integer coefficients `c_i * L` together with `L`, the lcm of the denominators.
    pub(crate) fn cleared(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (ints, lcm)
    }

    fn from_cleared(ints: Vec<BigInt>, den: &BigInt) -> PolyQ {
        PolyQ::new(
            ints.into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> PolyQ {
        let mut base = self.clone();
        let mut acc = PolyQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, c: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * c + a)
    }

    /// `self(g(x))`, by Horner's rule on integer-cleared operands.
    pub fn compose(&self, g: &PolyQ) -> PolyQ {
        let Some(d) = self.degree() else {
            return PolyQ::zero();
        };
        if g.is_constant() {
            return PolyQ::constant(self.evaluate(&g.constant_term()));
        }
        // self = F / m and g = G / l, so m l^d self(g) = Σ F_i G^i l^(d-i).
        let (f_ints, m) = self.cleared();
        let (g_ints, l) = g.cleared();
        let mut lpow = vec![BigInt::one(); d + 1];
        for k in 1..=d {
            lpow[k] = &lpow[k - 1] * &l;
        }
        let mut acc = vec![f_ints[d].clone()];
        for i in (0..d).rev() {
            acc = intmul::mul(&acc, &g_ints);
            acc[0] += &f_ints[i] * &lpow[d - i];
        }
        PolyQ::from_cleared(acc, &(m * &lpow[d]))
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &BigRational) -> PolyQ {
        if c.is_zero() {
            return self.clone();
        }
        self.compose(&PolyQ::new(vec![c.clone(), BigRational::one()]))
    }

    pub fn derivative(&self) -> PolyQ {
        PolyQ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(n) = self.degree() else {
            return (PolyQ::zero(), PolyQ::zero());
        };
        if n < dd {
            return (PolyQ::zero(), self.clone());
        }
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (PolyQ::new(quot), PolyQ::new(rem))
    }

    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Total coefficient size in bits (numerators plus denominators).
    pub fn total_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }

    pub(crate) fn max_coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .max()
            .unwrap_or(0)
    }

    /// Coefficientwise image in `F_p`. Every coefficient must be p-integral.
    pub fn reduce_mod_p(&self, p: Prime) -> Result<PolyModP> {
        let mut residues = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if vp(c, p) < Valuation::Finite(0) {
                return Err(Error::NegativeValuation { index: i });
            }
            residues.push(residue(c, p.get()).expect("p-integral coefficient"));
        }
        PolyModP::new(p, residues)
    }

    /// `self - lc * x^deg`: everything below the leading monomial.
    pub fn tail(&self) -> PolyQ {
        let mut coeffs = self.coeffs.clone();
        coeffs.pop();
        PolyQ::new(coeffs)
    }
}

impl std::fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

impl Serialize for PolyQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;

    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;

    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;

    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;

    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let (a, da) = self.cleared();
        let (b, db) = rhs.cleared();
        PolyQ::from_cleared(intmul::mul(&a, &b), &(da * db))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolyQ {
    type Output = PolyQ;

    fn neg(self) -> PolyQ {
        -&self
    }
}
