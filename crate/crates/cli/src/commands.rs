use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use purepoly::classify::{classify, set_membership, PolySet};
use purepoly::dynamics::{
    binomial_stability_certificate, composition_purity_certificate, dumas_certificate,
    eventually_dumas, eventually_p_type, eventually_pure, eventually_stable_set_certificate,
    f_stability_certificate, factor_bound, iterate_mod_p_closed_form, orbit_zero_periodic,
    pure_stability_certificate,
};
use purepoly::ff::{
    ff_factor, ff_irreducible, jones_quadratic_stability, newly_reducible_index, PolyModP,
};
use purepoly::newton::newton_polygon;
use purepoly::poly::g_expansion;
use purepoly::zfactor::{
    certify_irreducible_with, newly_reducible_index_q, schonemann_check, verify_factorization_with,
    z_factor, CertifyOptions, DEFAULT_MAX_DEGREE,
};
use purepoly::{iterate, Error, IterationBudget, PolyQ, Prime};

use crate::args::{Cli, Command, FfInput, FfOp, Mode, StabilityOp};

#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CmdError::Usage(e.to_string()),
            e => CmdError::Domain(e),
        }
    }
}

type CmdResult = Result<Value, CmdError>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn poly(text: &str) -> Result<PolyQ, CmdError> {
    text.parse::<PolyQ>()
        .map_err(|e| CmdError::Usage(format!("{text:?}: {e}")))
}

fn prime(p: u64) -> Result<Prime, CmdError> {
    Ok(Prime::new(p)?)
}

fn need_r(r: Option<u64>, what: &str) -> Result<u64, CmdError> {
    r.ok_or_else(|| CmdError::Usage(format!("{what} needs --r")))
}

fn big_number(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

pub fn budget(cli: &Cli) -> IterationBudget {
    let d = IterationBudget::default();
    IterationBudget {
        max_degree: cli.max_degree.unwrap_or(d.max_degree),
        max_bits: cli.max_bits.unwrap_or(d.max_bits),
    }
}

fn max_degree(cli: &Cli) -> usize {
    cli.max_degree.map_or(DEFAULT_MAX_DEGREE, |d| d as usize)
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Classify {
            prime: p,
            r,
            set,
            poly: text,
        } => {
            let f = poly(text)?;
            if let Some(set) = set {
                let set: PolySet = set
                    .parse()
                    .map_err(|e: Error| CmdError::Usage(e.to_string()))?;
                let verdict = set_membership(&f, &set)?;
                return Ok(json!({
                    "polynomial": f.to_string(),
                    "set": set.to_string(),
                    "verdict": to_value(&verdict),
                }));
            }
            let p = p.ok_or_else(|| CmdError::Usage("classify needs --prime or --set".into()))?;
            Ok(to_value(&classify(&f, prime(p)?, *r)?))
        }
        Command::Newton {
            prime: p,
            poly: text,
        } => {
            let f = poly(text)?;
            let np = newton_polygon(&f, prime(p.prime)?)?;
            Ok(merge(
                json!({ "polynomial": f.to_string() }),
                merge(
                    to_value(&np),
                    json!({ "single_slope": np.single_slope().map(|s| s.to_string()) }),
                ),
            ))
        }
        Command::Iterate {
            n,
            prime: p,
            poly: text,
        } => {
            let f = poly(text)?;
            match p {
                None => {
                    let g = iterate(&f, *n, &budget(cli))?;
                    Ok(json!({
                        "polynomial": f.to_string(),
                        "n": n,
                        "degree": g.degree(),
                        "iterate": g.to_string(),
                    }))
                }
                Some(p) => {
                    let p = prime(*p)?;
                    let (method, g) = match iterate_mod_p_closed_form(&f, p, *n) {
                        Ok(g) => ("closed_form", g),
                        Err(Error::ShapeMismatch(_)) => {
                            ("composition", f.reduce_mod_p(p)?.iterate(*n))
                        }
                        Err(e) => return Err(e.into()),
                    };
                    Ok(json!({
                        "polynomial": f.to_string(),
                        "n": n,
                        "prime": p,
                        "method": method,
                        "degree": g.degree(),
                        "iterate": g.to_string(),
                    }))
                }
            }
        }
        Command::Eventual {
            mode,
            prime: p,
            r,
            poly: text,
        } => {
            let f = poly(text)?;
            let p = prime(p.prime)?;
            let b = budget(cli);
            let (name, verdict) = match mode {
                Mode::Type => ("type", eventually_p_type(&f, p)?),
                Mode::Pure => (
                    "pure",
                    eventually_pure(&f, p, need_r(*r, "pure mode")?, &b)?,
                ),
                Mode::Dumas => (
                    "dumas",
                    eventually_dumas(&f, p, need_r(*r, "dumas mode")?, &b)?,
                ),
            };
            Ok(merge(
                json!({ "polynomial": f.to_string(), "prime": p, "mode": name, "r": r }),
                to_value(&verdict),
            ))
        }
        Command::Bound {
            degree,
            r,
            prime: p,
            max_n,
            poly: text,
        } => {
            let (d, r) = match text {
                Some(text) => {
                    let f = poly(text)?;
                    let d = f.degree_at_least(1)? as u64;
                    let r = match (r, p) {
                        (Some(r), _) => *r,
                        (None, Some(p)) => purepoly::classify::detect_purity(&f, prime(*p)?)?
                            .ok_or_else(|| {
                                CmdError::Domain(Error::HypothesisFailed(format!(
                                    "{f} is not pure at {p}"
                                )))
                            })?,
                        (None, None) => {
                            return Err(CmdError::Usage("bound needs --r or --prime".into()))
                        }
                    };
                    (d, r)
                }
                None => (
                    degree.ok_or_else(|| {
                        CmdError::Usage("bound needs --degree or a polynomial".into())
                    })?,
                    need_r(*r, "bound")?,
                ),
            };
            let b = factor_bound(d, r)?;
            let rows: Vec<Value> = (1..=*max_n)
                .map(|n| {
                    json!({
                        "n": n,
                        "max_factors": b.per_iterate(n),
                        "min_factor_degree": big_number(&b.min_factor_degree(n)),
                    })
                })
                .collect();
            Ok(merge(to_value(&b), json!({ "iterates": rows })))
        }
        Command::Certify {
            prime: primes,
            base,
            poly: text,
        } => {
            let f = poly(text)?;
            let opts = CertifyOptions {
                primes: primes.clone(),
                schonemann_bases: base.iter().map(|b| poly(b)).collect::<Result<_, _>>()?,
            };
            let cert = certify_irreducible_with(&f, &opts)?;
            Ok(json!({
                "polynomial": f.to_string(),
                "certified": cert.is_some(),
                "certificate": to_value(&cert),
            }))
        }
        Command::Factor {
            iterate: it,
            verify,
            prime: primes,
            newly_reducible,
            max_n,
            poly: text,
        } => {
            let f = poly(text)?;
            let cap = max_degree(cli);
            if *newly_reducible {
                let index = newly_reducible_index_q(&f, *max_n, cap)?;
                return Ok(json!({
                    "polynomial": f.to_string(),
                    "max_n": max_n,
                    "index": index,
                }));
            }
            let target = match it {
                Some(n) => iterate(&f, *n, &budget(cli))?,
                None => f.clone(),
            };
            if !verify.is_empty() {
                let parts = verify
                    .iter()
                    .map(|v| poly(v))
                    .collect::<Result<Vec<_>, _>>()?;
                let opts = CertifyOptions {
                    primes: primes.clone(),
                    schonemann_bases: Vec::new(),
                };
                let report = verify_factorization_with(&target, &parts, &opts)?;
                return Ok(merge(
                    json!({ "polynomial": target.to_string() }),
                    to_value(&report),
                ));
            }
            let fac = z_factor(&target, cap)?;
            Ok(merge(
                json!({
                    "polynomial": target.to_string(),
                    "iterate": it,
                    "count": fac.count(),
                    "irreducible": fac.is_irreducible(),
                }),
                to_value(&fac),
            ))
        }
        Command::Ff { op } => ff(cli, op),
        Command::Schonemann {
            base,
            prime: p,
            poly: text,
        } => {
            let a = poly(text)?;
            let g = poly(base)?;
            let p = prime(p.prime)?;
            let digits: Vec<String> = g_expansion(&a, &g)?
                .digits
                .iter()
                .map(|d| d.to_string())
                .collect();
            let cert = schonemann_check(&a, &g, p);
            Ok(json!({
                "polynomial": a.to_string(),
                "base": g.to_string(),
                "prime": p,
                "digits": digits,
                "certified": cert.is_some(),
                "certificate": to_value(&cert),
            }))
        }
        Command::Stability { op } => stability(op),
        Command::Corpus { .. } => unreachable!("handled by the caller"),
    }
}

fn ff_input(input: &FfInput) -> Result<(PolyQ, PolyModP), CmdError> {
    let f = poly(&input.poly)?;
    let p = prime(input.prime.prime)?;
    let fbar = f.reduce_mod_p(p)?;
    let target = match input.iterate {
        Some(0) => return Err(CmdError::Usage("--iterate must be at least 1".into())),
        Some(n) => {
            let d = fbar.degree().unwrap_or(0) as u64;
            let degree = d.saturating_pow(n);
            if degree > purepoly::ff::FF_DEGREE_CAP {
                return Err(Error::DegreeCap {
                    degree,
                    cap: purepoly::ff::FF_DEGREE_CAP,
                }
                .into());
            }
            fbar.iterate(n)
        }
        None => fbar,
    };
    Ok((f, target))
}

fn ff(cli: &Cli, op: &FfOp) -> CmdResult {
    match op {
        FfOp::Factor(input) => {
            let (f, g) = ff_input(input)?;
            let fac = ff_factor(&g, cli.seed)?;
            let factors: Vec<Value> = fac
                .factors
                .iter()
                .map(|h| {
                    json!({
                        "factor": h.factor.to_string(),
                        "degree": h.factor.degree(),
                        "multiplicity": h.multiplicity,
                    })
                })
                .collect();
            Ok(json!({
                "polynomial": f.to_string(),
                "prime": fac.prime,
                "iterate": input.iterate,
                "degree": g.degree(),
                "unit": fac.unit,
                "irreducible": fac.is_irreducible(),
                "factors": factors,
            }))
        }
        FfOp::Irreducible(input) => {
            let (f, g) = ff_input(input)?;
            Ok(json!({
                "polynomial": f.to_string(),
                "prime": g.modulus(),
                "iterate": input.iterate,
                "degree": g.degree(),
                "irreducible": ff_irreducible(&g),
            }))
        }
        FfOp::Jones { input, max_orbit } => {
            let (f, g) = ff_input(input)?;
            let verdict = jones_quadratic_stability(&g, *max_orbit)?;
            Ok(merge(
                json!({ "polynomial": f.to_string(), "prime": g.modulus() }),
                to_value(&verdict),
            ))
        }
        FfOp::NewlyReducible { input, max_n } => {
            let (f, g) = ff_input(input)?;
            Ok(json!({
                "polynomial": f.to_string(),
                "prime": g.modulus(),
                "max_n": max_n,
                "index": newly_reducible_index(&g, *max_n)?,
            }))
        }
    }
}

fn stability(op: &StabilityOp) -> CmdResult {
    let cert = match op {
        StabilityOp::Dumas {
            prime: p,
            r,
            poly: f,
        } => dumas_certificate(&poly(f)?, prime(p.prime)?, *r)?,
        StabilityOp::Pure {
            prime: p,
            r,
            poly: f,
        } => pure_stability_certificate(&poly(f)?, prime(p.prime)?, *r)?,
        StabilityOp::FStable { prime: p, r, g, f } => {
            f_stability_certificate(&poly(g)?, &poly(f)?, prime(p.prime)?, *r)?
        }
        StabilityOp::Composition { prime: p, r, f, g } => {
            composition_purity_certificate(&poly(f)?, &poly(g)?, prime(p.prime)?, *r)?
        }
        StabilityOp::Set { prime: p, members } => {
            let family = members
                .iter()
                .map(|m| {
                    let (f, r) = m.rsplit_once(':').ok_or_else(|| {
                        CmdError::Usage(format!("family member {m:?} must be POLY:R"))
                    })?;
                    let r: u64 = r
                        .trim()
                        .parse()
                        .map_err(|_| CmdError::Usage(format!("bad r in {m:?}")))?;
                    Ok((poly(f)?, r))
                })
                .collect::<Result<Vec<_>, CmdError>>()?;
            eventually_stable_set_certificate(&family, prime(p.prime)?)?
        }
        StabilityOp::Binomial { degree, c } => {
            let c = poly(c)?;
            if !c.is_constant() {
                return Err(CmdError::Usage("c must be a rational constant".into()));
            }
            binomial_stability_certificate(*degree, &c.constant_term())?
        }
        StabilityOp::Orbit { max_n, poly: f } => {
            let f = poly(f)?;
            return Ok(json!({
                "polynomial": f.to_string(),
                "max_n": max_n,
                "period": orbit_zero_periodic(&f, *max_n),
            }));
        }
    };
    Ok(to_value(&cert))
}
