//! Factorization and irreducibility certificates over ℚ.

mod certify;
mod hensel;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{ff_factor, PolyModP, DEFAULT_SEED};
use crate::padic::Prime;
use crate::poly::{iterate, ser_rational, IterationBudget, PolyQ};

pub use certify::{
    certify_irreducible, certify_irreducible_with, schonemann_check, verify_factorization,
    verify_factorization_with, CertificateMethod, CertifyOptions, FactorStatus,
    FactorizationReport, IrreducibilityCertificate,
};

pub const DEFAULT_MAX_DEGREE: usize = 24;
/// Good primes compared when choosing the one to lift from.
const GOOD_PRIME_CANDIDATES: usize = 5;
/// Primes tried before giving up on finding a good one.
const GOOD_PRIME_SEARCH: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZFactor {
    pub factor: PolyQ,
    pub multiplicity: u32,
}

/// `f = unit · Π factor^multiplicity` with primitive integer factors of
/// positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "ser_rational")]
    pub unit: BigRational,
    pub factors: Vec<ZFactor>,
}

impl Factorization {
    pub fn product(&self) -> PolyQ {
        self.factors
            .iter()
            .fold(PolyQ::constant(self.unit.clone()), |acc, f| {
                &acc * &f.factor.pow(f.multiplicity)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].multiplicity == 1
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }
}

fn to_poly(a: &[BigInt]) -> PolyQ {
    PolyQ::from_bigints(a)
}

fn canonical_order(a: &PolyQ, b: &PolyQ) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Squarefree decomposition over ℚ; parts are monic.
fn squarefree_q(f: &PolyQ) -> Vec<(PolyQ, u32)> {
    let mut out = Vec::new();
    let f = f.monic();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_constant() {
            out.push((z, i));
        }
        c = c.div_rem(&y).0;
        w = y;
        i += 1;
    }
    out
}

/// Reduction of a primitive integer polynomial mod `p`, if `p` keeps the
/// degree and the image is squarefree.
fn good_reduction(f: &[BigInt], p: u64) -> Option<PolyModP> {
    let prime = Prime::new(p).ok()?;
    let fbar = to_poly(f).reduce_mod_p(prime).ok()?;
    if fbar.degree() != Some(f.len() - 1) {
        return None;
    }
    fbar.gcd(&fbar.derivative()).is_one().then_some(fbar)
}

/// Irreducible factors of a squarefree primitive integer polynomial of
/// positive leading coefficient and degree at least 2.
fn zassenhaus(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let mut best: Option<(u64, Vec<PolyModP>)> = None;
    let mut good = 0;
    for p in crate::ntheory::primes_below(GOOD_PRIME_SEARCH) {
        let Some(fbar) = good_reduction(f, p) else {
            continue;
        };
        let facs: Vec<_> = ff_factor(&fbar, DEFAULT_SEED)?
            .factors
            .into_iter()
            .map(|g| g.factor)
            .collect();
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        good += 1;
        if good == GOOD_PRIME_CANDIDATES || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (p, modp) = best.ok_or(Error::NoGoodPrime(GOOD_PRIME_SEARCH))?;
    if modp.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }

    let bound = hensel::mignotte_bound(f) * 2;
    let m = hensel::lifting_modulus(p, &bound);
    let lc = f.last().unwrap().clone();
    let lc_inv = hensel::inv_mod_big(&lc, &m);
    let monic: Vec<BigInt> = f.iter().map(|c| c * &lc_inv).collect();
    let mut lifted = hensel::multifactor_lift(&hensel::reduce(&monic, &m), &modp, &m);

    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        match find_factor(&rest, &lifted, size, &m) {
            Some((subset, g, quotient)) => {
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                found.push(g);
                rest = quotient;
            }
            None => size += 1,
        }
    }
    found.push(rest);
    Ok(found)
}

/// The first `size`-subset of `lifted` whose product, scaled by the leading
/// coefficient, gives a true factor of `f`.
fn find_factor(
    f: &[BigInt],
    lifted: &[Vec<BigInt>],
    size: usize,
    m: &BigInt,
) -> Option<(Vec<usize>, Vec<BigInt>, Vec<BigInt>)> {
    let lc = f.last().unwrap().clone();
    let target = to_poly(f);
    let n = lifted.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let constant = idx.iter().fold(lc.clone(), |acc, &i| {
            hensel::symmetric(&[acc * &lifted[i][0]], m)
                .pop()
                .unwrap_or_default()
        });
        let f0 = &f[0];
        let plausible = if constant.is_zero() {
            f0.is_zero()
        } else {
            (&lc * f0 % &constant).is_zero()
        };
        if plausible {
            let prod = idx.iter().fold(vec![lc.clone()], |acc, &i| {
                hensel::reduce(&hensel::mul(&acc, &lifted[i]), m)
            });
            let g = hensel::symmetric(&prod, m);
            let (_, prim) = to_poly(&g).primitive_part();
            let gq = to_poly(&prim);
            let (q, r) = target.div_rem(&gq);
            if r.is_zero() && q.coeffs().iter().all(|c| c.is_integer()) {
                let quotient = q.coeffs().iter().map(|c| c.to_integer()).collect();
                return Some((idx, prim, quotient));
            }
        }
        // next combination
        let mut k = size;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            if idx[k] < n - size + k {
                break;
            }
            if k == 0 {
                return None;
            }
        }
        idx[k] += 1;
        for j in k + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Complete factorization over ℚ: content, squarefree split, Zassenhaus
/// with Hensel lifting to the Mignotte bound, subset recombination.
pub fn z_factor(f: &PolyQ, max_degree: usize) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidParameter(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let d = f.degree().unwrap();
    if d > max_degree {
        return Err(Error::DegreeCap {
            degree: d as u64,
            cap: max_degree as u64,
        });
    }
    let mut factors = Vec::new();
    let mut product = PolyQ::one();
    for (part, multiplicity) in squarefree_q(f) {
        let (_, prim) = part.primitive_part();
        let pieces = if prim.len() <= 2 {
            vec![prim]
        } else {
            zassenhaus(&prim)?
        };
        for g in pieces {
            let g = to_poly(&g);
            product = &product * &g.pow(multiplicity);
            factors.push(ZFactor {
                factor: g,
                multiplicity,
            });
        }
    }
    factors.sort_by(|a, b| {
        canonical_order(&a.factor, &b.factor).then(a.multiplicity.cmp(&b.multiplicity))
    });
    let unit = f.leading() / product.leading();
    Ok(Factorization { unit, factors })
}

/// Least `n ≤ max_n` with `f^n` reducible over ℚ, or `None`.
pub fn newly_reducible_index_q(f: &PolyQ, max_n: u32, max_degree: usize) -> Result<Option<u32>> {
    f.degree_at_least(1)?;
    let budget = IterationBudget {
        max_degree: max_degree as u64,
        ..IterationBudget::default()
    };
    let mut current = f.clone();
    for n in 1..=max_n {
        if n > 1 {
            current = iterate(f, n, &budget)?;
        }
        if !z_factor(&current, max_degree)?.is_irreducible() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Sign-normalized primitive integer polynomial.
pub(crate) fn primitive(f: &PolyQ) -> PolyQ {
    let (_, prim) = f.primitive_part();
    let g = to_poly(&prim);
    if g.leading().is_negative() {
        -g
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    fn factors(f: &str) -> Vec<(String, u32)> {
        z_factor(&poly(f), 24)
            .unwrap()
            .factors
            .into_iter()
            .map(|g| (g.factor.to_string(), g.multiplicity))
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            factors("x^4+4"),
            vec![("x^2 - 2x + 2".into(), 1), ("x^2 + 2x + 2".into(), 1)]
        );
        let gf = poly("x^2+27").compose(&poly("x^2+3x+3"));
        let fac = z_factor(&gf, 24).unwrap();
        assert_eq!(fac.factors[0].factor, poly("x^2+3"));
        assert_eq!(fac.factors[1].factor, poly("x^2+6x+12"));
        let g3 = iterate(&poly("x^2-x-1"), 3, &IterationBudget::default()).unwrap();
        let fac = z_factor(&g3, 24).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac
            .factors
            .iter()
            .any(|g| g.factor == poly("x^4-3x^3+4x-1")));
        assert!(fac
            .factors
            .iter()
            .any(|g| g.factor == poly("x^4-x^3-3x^2+x+1")));
    }

    #[test]
    fn content_multiplicity_and_unit() {
        let f = poly("6(x-1)^2(2x+3)/5");
        let fac = z_factor(&f, 24).unwrap();
        assert_eq!(fac.product(), f);
        assert_eq!(fac.unit, rat(6) / rat(5));
        assert_eq!(fac.count(), 3);
        let fac = z_factor(&poly("-7"), 24).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.unit, rat(-7));
        assert!(z_factor(&poly("x^30+1"), 24).is_err());
    }

    #[test]
    fn paper_scale_products() {
        let f = poly("x^17+27x^12+27x^10+162x^7+729x^5+4374");
        let fac = z_factor(&f, 24).unwrap();
        let got: Vec<_> = fac.factors.iter().map(|g| g.factor.clone()).collect();
        assert_eq!(got, vec![poly("x^5+9"), poly("x^5+18"), poly("x^7+27")]);
        let fac = z_factor(&poly("(x+1)^8+64"), 24).unwrap();
        assert_eq!(fac.factors.len(), 2);
        for irr in ["(x^2+x+1)^2+32", "(x^2+1)^2+27", "x^8+1", "x^12+x+1"] {
            assert!(z_factor(&poly(irr), 24).unwrap().is_irreducible(), "{irr}");
        }
        let swinnerton = poly("x^8-40x^6+352x^4-960x^2+576");
        assert!(z_factor(&swinnerton, 24).unwrap().is_irreducible());
        let cyclo = z_factor(&poly("x^24-1"), 24).unwrap();
        assert_eq!(cyclo.factors.len(), 8);
    }

    #[test]
    fn newly_reducible_over_q() {
        assert_eq!(
            newly_reducible_index_q(&poly("x^2-x-1"), 4, 24).unwrap(),
            Some(3)
        );
        assert_eq!(
            newly_reducible_index_q(&poly("x^2+32"), 3, 24).unwrap(),
            None
        );
    }

    fn small_poly() -> impl Strategy<Value = PolyQ> {
        prop::collection::vec(-9i64..10, 2..5).prop_map(|c| PolyQ::from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn products_factor_back(a in small_poly(), b in small_poly(), c in small_poly()) {
            let f = &(&a * &b) * &c;
            prop_assume!(!f.is_zero());
            let fac = z_factor(&f, 24).unwrap();
            prop_assert_eq!(fac.product(), f.clone());
            let expected_min: u32 = [&a, &b, &c]
                .iter()
                .filter(|g| g.degree().unwrap_or(0) >= 1)
                .count() as u32;
            prop_assert!(fac.count() >= expected_min);
            for g in &fac.factors {
                prop_assert!(z_factor(&g.factor, 24).unwrap().is_irreducible());
            }
        }
    }
}
