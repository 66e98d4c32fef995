use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{FrobeniusMap, PolyModP};
use crate::error::{Error, Result};
use crate::ntheory::prime_divisors;

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FfFactor {
    pub factor: PolyModP,
    pub multiplicity: u32,
}

/// `f = unit · Π factor^multiplicity` with monic irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FfFactorization {
    pub prime: u64,
    pub unit: u64,
    pub factors: Vec<FfFactor>,
}

impl FfFactorization {
    pub fn product(&self) -> PolyModP {
        self.factors
            .iter()
            .fold(PolyModP::constant(self.prime, self.unit), |acc, f| {
                acc.mul(&f.factor.pow(f.multiplicity as u64))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].multiplicity == 1
    }
}

/// Complete factorization over `F_p`: squarefree split, distinct-degree
/// split, then Cantor–Zassenhaus driven by a ChaCha stream seeded with `seed`.
///
/// Factors are ordered by degree, then by coefficients read from the top.
pub fn ff_factor(f: &PolyModP, seed: u64) -> Result<FfFactorization> {
    if f.is_zero() {
        return Err(Error::InvalidParameter(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let p = f.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, multiplicity) in squarefree(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            let mut pieces = Vec::new();
            equal_degree(&block, d, &mut rng, &mut pieces);
            factors.extend(pieces.into_iter().map(|factor| FfFactor {
                factor,
                multiplicity,
            }));
        }
    }
    factors.sort_by(|a, b| {
        a.factor
            .degree()
            .cmp(&b.factor.degree())
            .then_with(|| {
                a.factor
                    .residues()
                    .iter()
                    .rev()
                    .cmp(b.factor.residues().iter().rev())
            })
            .then_with(|| a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(FfFactorization {
        prime: p,
        unit: f.leading(),
        factors,
    })
}

/// Rabin's test. Constants are not irreducible.
pub fn ff_irreducible(f: &PolyModP) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let p = f.modulus();
    let x = PolyModP::x(p);
    let checkpoints: BTreeSet<usize> = prime_divisors(n as u64)
        .into_iter()
        .map(|q| n / q as usize)
        .collect();
    let frob = FrobeniusMap::new(&f);
    let mut h = x.clone();
    for k in 1..=n {
        h = frob.apply(&h);
        if checkpoints.contains(&k) && !h.sub(&x).gcd(&f).is_one() {
            return false;
        }
    }
    h == x
}

/// Squarefree decomposition of a monic polynomial.
fn squarefree(f: &PolyModP) -> Vec<(PolyModP, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        let root: Vec<u64> = c.residues().iter().step_by(p as usize).copied().collect();
        let root = PolyModP::from_raw(p, root);
        out.extend(
            squarefree(&root)
                .into_iter()
                .map(|(g, m)| (g, m * p as u32)),
        );
    }
    out
}

/// Splits a squarefree monic polynomial into products of equal-degree factors.
fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.modulus();
    let x = PolyModP::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut frob = FrobeniusMap::new(&rest);
    let mut h = x.rem(&rest);
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = frob.apply(&h);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            out.push((g.clone(), i));
            rest = rest.div_rem(&g).0;
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            h = h.rem(&rest);
            frob = FrobeniusMap::new(&rest);
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &PolyModP, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyModP>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    let exponent = if p == 2 {
        None
    } else {
        Some((BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1)
    };
    loop {
        let a = PolyModP::from_raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let g = if !g.is_one() {
            g
        } else {
            let b = match &exponent {
                Some(e) => a.pow_mod(e, f).sub(&PolyModP::constant(p, 1)),
                None => trace(&a, d, f),
            };
            b.gcd(f)
        };
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            equal_degree(&g, d, rng, out);
            equal_degree(&f.div_rem(&g).0, d, rng, out);
            return;
        }
    }
}

/// `a + a^2 + a^4 + … + a^{2^{d-1}} mod f` over `F_2`.
fn trace(a: &PolyModP, d: usize, f: &PolyModP) -> PolyModP {
    let mut term = a.rem(f);
    let mut acc = term.clone();
    for _ in 1..d {
        term = term.mul_mod(&term, f);
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Prime;
    use proptest::prelude::*;

    fn fp(p: u64, c: &[i64]) -> PolyModP {
        PolyModP::from_signed(Prime::new(p).unwrap(), c).unwrap()
    }

    /// Irreducible iff no monic factor of degree 1..=n/2 divides it.
    fn brute_irreducible(f: &PolyModP) -> bool {
        let n = f.degree().unwrap();
        if n == 0 {
            return false;
        }
        let p = f.modulus();
        for k in 1..=n / 2 {
            let count = p.pow(k as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(k + 1);
                let mut t = idx;
                for _ in 0..k {
                    c.push(t % p);
                    t /= p;
                }
                c.push(1);
                let g = PolyModP::from_raw(p, c);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn small_examples() {
        let f = fp(5, &[4, 0, 0, 0, 1]); // x^4 - 1
        let fac = ff_factor(&f, DEFAULT_SEED).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.product(), f);

        let sq = fp(3, &[1, 2, 1]).mul(&fp(3, &[1, 0, 1]).pow(3)); // (x+1)^2 (x^2+1)^3
        let fac = ff_factor(&sq, 7).unwrap();
        assert_eq!(fac.product(), sq);
        assert_eq!(
            fac.factors
                .iter()
                .map(|f| (f.factor.degree().unwrap(), f.multiplicity))
                .collect::<Vec<_>>(),
            vec![(1, 2), (2, 3)]
        );
    }

    #[test]
    fn characteristic_two_splits() {
        let f = fp(2, &[1, 1, 0, 0, 1])
            .mul(&fp(2, &[1, 0, 0, 1, 1]))
            .mul(&fp(2, &[1, 1, 1]));
        let fac = ff_factor(&f, 1).unwrap();
        assert_eq!(fac.product(), f);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.iter().all(|g| ff_irreducible(&g.factor)));
    }

    #[test]
    fn pth_power_input() {
        let f = fp(3, &[1, 1]).pow(9).mul(&fp(3, &[2, 1]));
        let fac = ff_factor(&f, 3).unwrap();
        assert_eq!(fac.product(), f);
        assert_eq!(fac.factors.iter().map(|f| f.multiplicity).sum::<u32>(), 10);
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = fp(43, &[1, 0, 1]).iterate(4);
        let a = ff_factor(&f, 1).unwrap();
        let b = ff_factor(&f, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rabin_agrees_with_brute_force() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut count = 0;
            for deg in 1..=4usize {
                for idx in 0..p.pow(deg as u32).min(400) {
                    let mut c = Vec::new();
                    let mut t = idx;
                    for _ in 0..deg {
                        c.push(t % p);
                        t /= p;
                    }
                    c.push(1);
                    let f = PolyModP::from_raw(p, c);
                    assert_eq!(ff_irreducible(&f), brute_irreducible(&f), "{f:?}");
                    count += 1;
                }
            }
            assert!(count > 0);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factors_multiply_back(
            c in prop::collection::vec(0u64..1000, 2..14),
            pi in 0usize..5,
            seed in any::<u64>(),
        ) {
            let p = [2u64, 3, 7, 43, 65_537][pi];
            let f = PolyModP::from_raw(p, c.into_iter().map(|v| v % p).collect());
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            let fac = ff_factor(&f, seed).unwrap();
            prop_assert_eq!(fac.product(), f);
            for g in &fac.factors {
                prop_assert!(ff_irreducible(&g.factor));
                prop_assert_eq!(g.factor.leading(), 1);
            }
        }
    }
}
