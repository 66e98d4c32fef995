use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{primitive, z_factor, DEFAULT_MAX_DEGREE};
use crate::classify::{is_dumas, is_eisenstein};
use crate::dynamics::Hypothesis;
use crate::error::Result;
use crate::ff::ff_irreducible;
use crate::ntheory::primes_below;
use crate::padic::{gauss_valuation, vp, Prime, Valuation};
use crate::poly::{g_expansion, PolyQ};

/// Primes below this bound are tried automatically.
const SMALL_PRIME_BOUND: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum CertificateMethod {
    Eisenstein { prime: Prime },
    Dumas { prime: Prime, r: u64 },
    ModP { prime: Prime },
    Schonemann { base: PolyQ, prime: Prime },
    FactorSearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityCertificate {
    #[serde(flatten)]
    pub method: CertificateMethod,
    pub details: Vec<Hypothesis>,
}

impl IrreducibilityCertificate {
    /// Re-checks the recorded criterion on `f` without any search.
    pub fn recheck(&self, f: &PolyQ) -> Result<bool> {
        let g = primitive(f);
        Ok(match &self.method {
            CertificateMethod::Eisenstein { prime } => is_eisenstein(&g, *prime)?.holds,
            CertificateMethod::Dumas { prime, r } => is_dumas(&g, *prime, *r)?.holds,
            CertificateMethod::ModP { prime } => mod_p_certificate(&g, *prime).is_some(),
            CertificateMethod::Schonemann { base, prime } => {
                schonemann_check(f, base, *prime).is_some()
            }
            CertificateMethod::FactorSearchExhausted => {
                z_factor(f, f.degree().unwrap_or(0).max(DEFAULT_MAX_DEGREE))?.is_irreducible()
            }
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    /// Replaces the automatic candidate primes when nonempty.
    pub primes: Vec<u64>,
    pub schonemann_bases: Vec<PolyQ>,
}

fn hyp(condition: impl Into<String>, detail: impl Into<String>) -> Hypothesis {
    Hypothesis {
        condition: condition.into(),
        holds: true,
        detail: Some(detail.into()),
    }
}

/// Small primes dividing the constant term of the primitive integer form.
fn constant_term_primes(g: &PolyQ) -> Vec<u64> {
    let c = g.constant_term();
    if c.is_zero() {
        return Vec::new();
    }
    let n = c.numer().abs();
    primes_below(SMALL_PRIME_BOUND)
        .into_iter()
        .filter(|&p| n.is_multiple_of(&p.into()))
        .collect()
}

fn mod_p_certificate(g: &PolyQ, p: Prime) -> Option<IrreducibilityCertificate> {
    let d = g.degree()?;
    let gbar = g.reduce_mod_p(p).ok()?;
    if gbar.degree() != Some(d) || !ff_irreducible(&gbar) {
        return None;
    }
    Some(IrreducibilityCertificate {
        method: CertificateMethod::ModP { prime: p },
        details: vec![
            hyp("coefficients are p-integral", format!("p = {p}")),
            hyp("reduction keeps the degree", format!("degree {d}")),
            hyp("reduction is irreducible over F_p", gbar.to_string()),
        ],
    })
}

/// Criteria chain with automatic candidate primes.
pub fn certify_irreducible(f: &PolyQ) -> Result<Option<IrreducibilityCertificate>> {
    certify_irreducible_with(f, &CertifyOptions::default())
}

/// Tries Eisenstein, then Dumas with `r = ν_p(a_0)`, then irreducibility of
/// the reduction mod small primes, then Schönemann with the given bases.
/// `None` is not a reducibility claim.
pub fn certify_irreducible_with(
    f: &PolyQ,
    opts: &CertifyOptions,
) -> Result<Option<IrreducibilityCertificate>> {
    let d = f.degree_at_least(1)?;
    let g = primitive(f);
    if d == 1 {
        return Ok(Some(IrreducibilityCertificate {
            method: CertificateMethod::FactorSearchExhausted,
            details: vec![hyp("degree 1", "linear polynomials are irreducible")],
        }));
    }
    let explicit = !opts.primes.is_empty();
    let primes: Vec<Prime> = if explicit {
        opts.primes
            .iter()
            .map(|&p| Prime::new(p))
            .collect::<Result<_>>()?
    } else {
        constant_term_primes(&g)
            .into_iter()
            .map(|p| Prime::new(p).expect("prime"))
            .collect()
    };

    for &p in &primes {
        if is_eisenstein(&g, p)?.holds {
            return Ok(Some(IrreducibilityCertificate {
                method: CertificateMethod::Eisenstein { prime: p },
                details: vec![
                    hyp("leading coefficient is a p-adic unit", format!("p = {p}")),
                    hyp("p divides the lower coefficients", format!("p = {p}")),
                    hyp(
                        "p^2 does not divide the constant term",
                        g.constant_term().to_string(),
                    ),
                ],
            }));
        }
    }
    for &p in &primes {
        let Valuation::Finite(r) = vp(&g.constant_term(), p) else {
            continue;
        };
        if r < 1 {
            continue;
        }
        let r = r as u64;
        if is_dumas(&g, p, r)?.holds {
            return Ok(Some(IrreducibilityCertificate {
                method: CertificateMethod::Dumas { prime: p, r },
                details: vec![
                    hyp(
                        format!("f is {p}^{r}-pure"),
                        "single Newton polygon slope r/d",
                    ),
                    hyp("gcd(r, d) = 1", format!("gcd({r}, {d}) = 1")),
                ],
            }));
        }
    }
    let modp: Vec<Prime> = if explicit {
        primes.clone()
    } else {
        primes_below(SMALL_PRIME_BOUND)
            .into_iter()
            .map(|p| Prime::new(p).expect("prime"))
            .collect()
    };
    for &p in &modp {
        if let Some(c) = mod_p_certificate(&g, p) {
            return Ok(Some(c));
        }
    }
    for base in &opts.schonemann_bases {
        for &p in &modp {
            if let Some(c) = schonemann_check(f, base, p) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Schönemann's criterion for `A = Σ a_i g^i` (the g-expansion, `d` the top
/// index): `ḡ` irreducible over `F_p`, `a_d = 1`,
/// `ν(a_i)/(d-i) ≥ ν(a_0)/d > 0` for `0 < i < d` with `ν` the Gaussian
/// valuation, and `gcd(ν(a_0), d) = 1`.
pub fn schonemann_check(a: &PolyQ, g: &PolyQ, p: Prime) -> Option<IrreducibilityCertificate> {
    let e = g.degree().filter(|&e| e >= 1)?;
    let n = a.degree()?;
    if n % e != 0 {
        return None;
    }
    let gbar = g.reduce_mod_p(p).ok()?;
    if gbar.degree() != Some(e) || !ff_irreducible(&gbar) {
        return None;
    }
    let exp = g_expansion(a, g).ok()?;
    let d = exp.top()?;
    if d == 0 || !(exp.digits[d].is_constant() && exp.digits[d].constant_term().is_one()) {
        return None;
    }
    let v0 = match gauss_valuation(&exp.digits[0], p) {
        Valuation::Finite(v) if v > 0 => v,
        _ => return None,
    };
    for i in 1..d {
        if let Valuation::Finite(vi) = gauss_valuation(&exp.digits[i], p) {
            if (vi as i128) * (d as i128) < (v0 as i128) * ((d - i) as i128) {
                return None;
            }
        }
    }
    let gc = (v0 as u64).gcd(&(d as u64));
    if gc != 1 {
        return None;
    }
    Some(IrreducibilityCertificate {
        method: CertificateMethod::Schonemann {
            base: g.clone(),
            prime: p,
        },
        details: vec![
            hyp("reduction of g is irreducible over F_p", gbar.to_string()),
            hyp("top digit is 1", format!("d = {d}")),
            hyp(
                "digit valuations lie above the line to v(a_0)",
                format!("v(a_0) = {v0}"),
            ),
            hyp("gcd(v(a_0), d) = 1", format!("gcd({v0}, {d}) = 1")),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorStatus {
    pub factor: PolyQ,
    pub irreducible: bool,
    pub certificate: Option<IrreducibilityCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub valid: bool,
    pub product_matches: bool,
    pub factors: Vec<FactorStatus>,
}

pub fn verify_factorization(f: &PolyQ, factors: &[PolyQ]) -> Result<FactorizationReport> {
    verify_factorization_with(f, factors, &CertifyOptions::default())
}

/// Checks that `factors` multiply to `f` exactly and that each factor is
/// irreducible, by a criterion or by exhaustive factorization.
pub fn verify_factorization_with(
    f: &PolyQ,
    factors: &[PolyQ],
    opts: &CertifyOptions,
) -> Result<FactorizationReport> {
    let product = factors.iter().fold(PolyQ::one(), |acc, g| &acc * g);
    let product_matches = &product == f;
    let mut statuses = Vec::new();
    for g in factors {
        let status = match g.degree() {
            None | Some(0) => FactorStatus {
                factor: g.clone(),
                irreducible: false,
                certificate: None,
            },
            Some(_) => match certify_irreducible_with(g, opts)? {
                Some(c) => FactorStatus {
                    factor: g.clone(),
                    irreducible: true,
                    certificate: Some(c),
                },
                None => {
                    let cap = g.degree().unwrap().max(DEFAULT_MAX_DEGREE);
                    let irreducible = z_factor(g, cap)?.is_irreducible();
                    FactorStatus {
                        factor: g.clone(),
                        irreducible,
                        certificate: irreducible.then(|| IrreducibilityCertificate {
                            method: CertificateMethod::FactorSearchExhausted,
                            details: vec![hyp(
                                "no proper factor found by Zassenhaus recombination",
                                format!("degree {}", g.degree().unwrap()),
                            )],
                        }),
                    }
                }
            },
        };
        statuses.push(status);
    }
    let valid = product_matches && statuses.iter().all(|s| s.irreducible);
    Ok(FactorizationReport {
        valid,
        product_matches,
        factors: statuses,
    })
}
