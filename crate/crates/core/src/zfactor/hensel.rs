//! Integer polynomials modulo `m` and quadratic Hensel lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ff::PolyModP;
use crate::poly::intmul;

/// Little-endian integer coefficients, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients in `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                x + b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                x - b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    trim(intmul::mul(a, b))
}

/// Division by a monic `b` with all arithmetic mod `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), reduce(&r, m))
}

pub(crate) fn from_modp(a: &PolyModP) -> ZPoly {
    a.residues().iter().map(|&c| BigInt::from(c)).collect()
}

/// `s·g + t·h = 1` over `F_p` for coprime `g`, `h`.
fn xgcd(g: &PolyModP, h: &PolyModP) -> (PolyModP, PolyModP) {
    let p = g.modulus();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (PolyModP::constant(p, 1), PolyModP::zero(p));
    let (mut t0, mut t1) = (PolyModP::zero(p), PolyModP::constant(p, 1));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.degree(), Some(0), "factors must be coprime mod p");
    let inv = crate::ntheory::inv_mod(r0.leading(), p);
    (s0.scale(inv), t0.scale(inv))
}

/// Lifts `f ≡ g·h (mod p)` to `f ≡ G·H (mod p^{2^j})` with `p^{2^j} ≥ target`.
/// `f` is monic mod `target`; `g`, `h` are monic and coprime mod `p`.
fn lift_pair(f: &[BigInt], g: &PolyModP, h: &PolyModP, target: &BigInt) -> (ZPoly, ZPoly) {
    let p = BigInt::from(g.modulus());
    let (s, t) = xgcd(g, h);
    let (mut g, mut h, mut s, mut t) = (from_modp(g), from_modp(h), from_modp(&s), from_modp(&t));
    let mut m = p;
    while &m < target {
        let m2 = &m * &m;
        let e = reduce(&sub(f, &mul(&g, &h)), &m2);
        let (q, r) = div_rem_monic(&mul(&s, &e), &h, &m2);
        let g_new = reduce(&add(&add(&g, &mul(&t, &e)), &mul(&q, &g)), &m2);
        let h_new = reduce(&add(&h, &r), &m2);
        let b = reduce(
            &sub(&add(&mul(&s, &g_new), &mul(&t, &h_new)), &[BigInt::one()]),
            &m2,
        );
        let (c, d) = div_rem_monic(&mul(&s, &b), &h_new, &m2);
        s = reduce(&sub(&s, &d), &m2);
        t = reduce(&sub(&sub(&t, &mul(&t, &b)), &mul(&c, &g_new)), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    (g, h)
}

/// Lifts the monic factorization `f ≡ Π factors (mod p)` to modulus
/// `modulus`, a power of `p` of the form `p^{2^j}`.
pub(crate) fn multifactor_lift(f: &[BigInt], factors: &[PolyModP], modulus: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![reduce(f, modulus)];
    }
    let mid = factors.len() / 2;
    let p = factors[0].modulus();
    let prod = |fs: &[PolyModP]| {
        fs.iter()
            .fold(PolyModP::constant(p, 1), |acc, g| acc.mul(g))
    };
    let (a, b) = lift_pair(f, &prod(&factors[..mid]), &prod(&factors[mid..]), modulus);
    let a = reduce(&a, modulus);
    let b = reduce(&b, modulus);
    let mut out = multifactor_lift(&a, &factors[..mid], modulus);
    out.extend(multifactor_lift(&b, &factors[mid..], modulus));
    out
}

/// Least `p^{2^j}` exceeding `bound`.
pub(crate) fn lifting_modulus(p: u64, bound: &BigInt) -> BigInt {
    let mut m = BigInt::from(p);
    while &m <= bound {
        m = &m * &m;
    }
    m
}

/// `|lc| · 2^n · ⌈‖f‖₂⌉`, bounding the coefficients of `lc · G` for any
/// factor `G` of `f` over ℤ.
pub(crate) fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = f.len().saturating_sub(1);
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let lc = f.last().map(|c| c.abs()).unwrap_or_default();
    lc * (BigInt::one() << n) * norm
}

/// Inverse of `a` modulo `m`, for `gcd(a, m) = 1`.
pub(crate) fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}
