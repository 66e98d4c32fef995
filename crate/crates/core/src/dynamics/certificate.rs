use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::bound::{factor_bound, FactorBound};
use crate::classify::{is_dumas, is_p_type, is_pure};
use crate::error::{Error, Result};
use crate::padic::{gauss_valuation, is_unit, vp, Prime, Valuation};
use crate::poly::PolyQ;

/// Compositions above this degree are not expanded for cross-checking.
const CROSS_CHECK_DEGREE: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionRoute {
    /// Inner polynomial `b·x^e + p^s·h` with `s > r/d`.
    PPowerTail,
    /// Outer degree exceeds `r` and the inner polynomial is p-type.
    PTypeInner,
    /// Both polynomials are p^r-pure.
    PureInner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateKind {
    /// Every iterate is p^r-Dumas, hence irreducible.
    DumasDynIrr { prime: Prime, r: u64 },
    /// `g^n ∘ f^m` is irreducible for all `n, m ≥ 1`.
    FStable,
    /// `g^n ∘ f^m` is irreducible for all `n ≥ N`, `m ≥ 1`.
    FStableFromN { n: u32 },
    EventuallyStableSet {
        n: u32,
        factor_bound: u64,
        dynamically_irreducible: bool,
    },
    CompositionPure {
        route: CompositionRoute,
        dumas: bool,
    },
    PureEventuallyStable {
        prime: Prime,
        r: u64,
        factor_bound: FactorBound,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub condition: String,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RejectedRoute {
    pub route: CompositionRoute,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityCertificate {
    #[serde(flatten)]
    pub kind: CertificateKind,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rejected_routes: Vec<RejectedRoute>,
}

#[derive(Default)]
struct Checks(Vec<Hypothesis>);

impl Checks {
    fn add(&mut self, condition: impl Into<String>, holds: bool, detail: Option<String>) -> bool {
        self.0.push(Hypothesis {
            condition: condition.into(),
            holds,
            detail,
        });
        holds
    }

    /// Fails with every false hypothesis named.
    fn finish(self) -> Result<Vec<Hypothesis>> {
        let failed: Vec<_> = self
            .0
            .iter()
            .filter(|h| !h.holds)
            .map(|h| match &h.detail {
                Some(d) => format!("{} ({d})", h.condition),
                None => h.condition.clone(),
            })
            .collect();
        if failed.is_empty() {
            Ok(self.0)
        } else {
            Err(Error::HypothesisFailed(failed.join("; ")))
        }
    }
}

/// `f = a·x^e + p^s·h(x)`: the leading coefficient and `s`, the Gaussian
/// valuation of `f - a·x^e` (infinite for a monomial).
pub fn leading_split(f: &PolyQ, p: Prime) -> Result<(BigRational, usize, Valuation)> {
    let e = f.degree_at_least(1)?;
    Ok((f.leading(), e, gauss_valuation(&f.tail(), p)))
}

/// Least `n ≥ 1` with `s·d^n > r`.
fn least_exceeding(s: Valuation, d: u64, r: u64) -> Option<u32> {
    let s = match s {
        Valuation::Infinite => return Some(1),
        Valuation::Finite(s) if s <= 0 => return None,
        Valuation::Finite(s) => s as u128,
    };
    let mut lhs = s * d as u128;
    let mut n = 1;
    while lhs <= r as u128 {
        lhs *= d as u128;
        n += 1;
    }
    Some(n)
}

fn exceeds(s: Valuation, d: u64, r: u64) -> bool {
    match s {
        Valuation::Infinite => true,
        Valuation::Finite(s) => s > 0 && s as i128 * d as i128 > r as i128,
    }
}

/// A p^r-Dumas polynomial of degree at least 2 is dynamically irreducible.
pub fn dumas_certificate(f: &PolyQ, p: Prime, r: u64) -> Result<StabilityCertificate> {
    let d = f.degree_at_least(1)?;
    let mut checks = Checks::default();
    checks.add("deg f >= 2", d >= 2, Some(format!("deg f = {d}")));
    let v = is_dumas(f, p, r)?;
    checks.add(
        format!("f is {p}^{r}-Dumas"),
        v.holds,
        v.witness.map(|w| format!("{w:?}")),
    );
    Ok(StabilityCertificate {
        kind: CertificateKind::DumasDynIrr { prime: p, r },
        hypotheses: checks.finish()?,
        conclusion: format!("f^n is {p}^{r}-Dumas and irreducible for every n >= 1"),
        rejected_routes: Vec::new(),
    })
}

/// A p^r-pure polynomial of degree `d ≥ 2` is eventually stable: `f^n` has
/// at most `gcd(d^n, r)` irreducible factors.
pub fn pure_stability_certificate(f: &PolyQ, p: Prime, r: u64) -> Result<StabilityCertificate> {
    let d = f.degree_at_least(1)?;
    let mut checks = Checks::default();
    checks.add("deg f >= 2", d >= 2, Some(format!("deg f = {d}")));
    let v = is_pure(f, p, r)?;
    checks.add(
        format!("f is {p}^{r}-pure"),
        v.holds,
        v.witness.map(|w| format!("{w:?}")),
    );
    let hypotheses = checks.finish()?;
    let bound = factor_bound(d as u64, r)?;
    Ok(StabilityCertificate {
        conclusion: format!(
            "f^n has at most {} irreducible factors for every n >= 1",
            bound.stable_bound
        ),
        kind: CertificateKind::PureEventuallyStable {
            prime: p,
            r,
            factor_bound: bound,
        },
        hypotheses,
        rejected_routes: Vec::new(),
    })
}

/// `x^d + c` with `c ≠ 0` not the reciprocal of an integer: picks the least
/// prime dividing the numerator of `c` and certifies purity there.
pub fn binomial_stability_certificate(d: usize, c: &BigRational) -> Result<StabilityCertificate> {
    if d < 2 {
        return Err(Error::InvalidParameter("degree must be at least 2".into()));
    }
    if c.is_zero() {
        return Err(Error::HypothesisFailed("c is zero".into()));
    }
    let numer = c.numer().magnitude().clone();
    let p = (2u64..)
        .take_while(|&q| num_bigint::BigUint::from(q) * num_bigint::BigUint::from(q) <= numer)
        .find(|&q| (&numer % q).is_zero() && crate::ntheory::is_prime_u64(q))
        .or_else(|| u64::try_from(&numer).ok().filter(|&n| n > 1));
    let p = match p {
        Some(p) => Prime::new(p)?,
        None => {
            return Err(Error::HypothesisFailed(format!(
                "{c} is the reciprocal of an integer"
            )))
        }
    };
    let r = vp(c, p).finite().expect("nonzero") as u64;
    let f = &PolyQ::monomial(BigRational::from_integer(1.into()), d) + &PolyQ::constant(c.clone());
    let cert = if r.gcd(&(d as u64)) == 1 {
        dumas_certificate(&f, p, r)?
    } else {
        pure_stability_certificate(&f, p, r)?
    };
    Ok(cert)
}

/// Conditions under which `g^n ∘ f^m` stays irreducible.
///
/// `g` must be p^r-Dumas of degree `d ≥ 2`, and `f = a·x^e + p^s·h` with
/// `ν_p(a) = 0`, `s ≥ 1` and `gcd(r, e) = 1`. If `s > r/d` every `g^n` is
/// f-stable; otherwise from `N = min{n : s > r/d^n}` on.
pub fn f_stability_certificate(
    g: &PolyQ,
    f: &PolyQ,
    p: Prime,
    r: u64,
) -> Result<StabilityCertificate> {
    let d = g.degree_at_least(1)? as u64;
    let (a, e, s) = leading_split(f, p)?;
    let mut checks = Checks::default();
    checks.add("deg g >= 2", d >= 2, Some(format!("deg g = {d}")));
    let v = is_dumas(g, p, r)?;
    checks.add(
        format!("g is {p}^{r}-Dumas"),
        v.holds,
        v.witness.map(|w| format!("{w:?}")),
    );
    checks.add(
        "leading coefficient of f is a p-adic unit",
        is_unit(&a, p),
        Some(format!("a = {a}")),
    );
    checks.add(
        "s >= 1",
        s >= Valuation::Finite(1),
        Some(format!("s = {s}")),
    );
    let g_re = r.gcd(&(e as u64));
    checks.add(
        "gcd(r, e) = 1".to_string(),
        g_re == 1,
        Some(format!("gcd({r}, {e}) = {g_re}")),
    );
    let hypotheses = checks.finish()?;

    let n = least_exceeding(s, d, r).expect("s >= 1");
    let (kind, conclusion) = if n == 1 {
        (
            CertificateKind::FStable,
            "g^n o f^m is irreducible for all n, m >= 1".to_string(),
        )
    } else {
        (
            CertificateKind::FStableFromN { n },
            format!("g^n o f^m is irreducible for all n >= {n}, m >= 1"),
        )
    };
    Ok(StabilityCertificate {
        kind,
        hypotheses,
        conclusion,
        rejected_routes: Vec::new(),
    })
}

/// Certifies that `f ∘ g` is p^r-pure without expanding it, trying the
/// p-type inner route, the p-power tail route and the pure inner route in
/// that order. The result is cross-checked by expansion when small.
pub fn composition_purity_certificate(
    f: &PolyQ,
    g: &PolyQ,
    p: Prime,
    r: u64,
) -> Result<StabilityCertificate> {
    let d = f.degree_at_least(1)? as u64;
    let e = g.degree_at_least(1)?;
    let mut base = Checks::default();
    base.add("deg f >= 2", d >= 2, Some(format!("deg f = {d}")));
    let v = is_pure(f, p, r)?;
    base.add(
        format!("f is {p}^{r}-pure"),
        v.holds,
        v.witness.map(|w| format!("{w:?}")),
    );
    let mut hypotheses = base.finish()?;

    let mut rejected = Vec::new();
    let mut chosen = None;

    let pt = is_p_type(g, p)?;
    if d > r && pt.holds {
        chosen = Some(CompositionRoute::PTypeInner);
        hypotheses.push(Hypothesis {
            condition: "deg f > r and g is p-type".into(),
            holds: true,
            detail: Some(format!("d = {d}, r = {r}")),
        });
    } else {
        let reason = if d <= r {
            format!("deg f = {d} <= r = {r}")
        } else {
            format!("g is not p-type (witness {:?})", pt.witness)
        };
        rejected.push(RejectedRoute {
            route: CompositionRoute::PTypeInner,
            reason,
        });
    }

    if chosen.is_none() {
        let (b, _, s) = leading_split(g, p)?;
        let reason = if !is_unit(&b, p) {
            Some(format!("leading coefficient {b} of g is not a p-adic unit"))
        } else if s <= Valuation::Finite(0) {
            Some(format!("g minus its leading term has valuation {s} <= 0"))
        } else if !exceeds(s, d, r) {
            Some(format!("s = {s} does not exceed r/d = {r}/{d}"))
        } else {
            None
        };
        match reason {
            None => {
                chosen = Some(CompositionRoute::PPowerTail);
                hypotheses.push(Hypothesis {
                    condition: "g = b x^e + p^s h with s > r/d".into(),
                    holds: true,
                    detail: Some(format!("s = {s}, r/d = {r}/{d}")),
                });
            }
            Some(reason) => rejected.push(RejectedRoute {
                route: CompositionRoute::PPowerTail,
                reason,
            }),
        }
    }

    if chosen.is_none() {
        let gp = is_pure(g, p, r)?;
        if gp.holds {
            chosen = Some(CompositionRoute::PureInner);
            hypotheses.push(Hypothesis {
                condition: format!("g is {p}^{r}-pure"),
                holds: true,
                detail: None,
            });
        } else {
            rejected.push(RejectedRoute {
                route: CompositionRoute::PureInner,
                reason: format!("g is not {p}^{r}-pure (witness {:?})", gp.witness),
            });
        }
    }

    let route = match chosen {
        Some(route) => route,
        None => {
            let reasons: Vec<_> = rejected.iter().map(|r| r.reason.clone()).collect();
            return Err(Error::HypothesisFailed(format!(
                "no route applies: {}",
                reasons.join("; ")
            )));
        }
    };

    let degree = d as usize * e;
    let dumas = r.gcd(&(degree as u64)) == 1;
    if degree <= CROSS_CHECK_DEGREE {
        let composed = f.compose(g);
        let holds = is_pure(&composed, p, r)?.holds;
        if !holds {
            return Err(Error::HypothesisFailed(
                "expansion of f o g is not pure".into(),
            ));
        }
        hypotheses.push(Hypothesis {
            condition: "expansion of f o g is pure".into(),
            holds,
            detail: Some(format!("degree {degree}")),
        });
    }
    let class = if dumas { "Dumas" } else { "pure" };
    Ok(StabilityCertificate {
        kind: CertificateKind::CompositionPure { route, dumas },
        hypotheses,
        conclusion: format!("f o g is {p}^{r}-{class}"),
        rejected_routes: rejected,
    })
}

/// For a finite family of p^{r_f}-pure polynomials, the least `N` with
/// `s > r/d^N` makes `{f^N}` an eventually stable set with factor bound `r`,
/// where `s`, `d` are the minima of `s_f`, `d_f` and `r` the maximum of `r_f`.
pub fn eventually_stable_set_certificate(
    family: &[(PolyQ, u64)],
    p: Prime,
) -> Result<StabilityCertificate> {
    if family.is_empty() {
        return Err(Error::InvalidParameter("the family is empty".into()));
    }
    let mut checks = Checks::default();
    let mut s = Valuation::Infinite;
    let mut d = u64::MAX;
    let mut r = 0;
    let mut all_dumas = true;
    for (i, (f, rf)) in family.iter().enumerate() {
        let df = f.degree_at_least(1)? as u64;
        checks.add(
            format!("deg f_{i} >= 2"),
            df >= 2,
            Some(format!("deg = {df}")),
        );
        let v = is_pure(f, p, *rf)?;
        checks.add(
            format!("f_{i} is {p}^{rf}-pure"),
            v.holds,
            v.witness.map(|w| format!("{w:?}")),
        );
        all_dumas &= is_dumas(f, p, *rf)?.holds;
        s = s.min(leading_split(f, p)?.2);
        d = d.min(df);
        r = r.max(*rf);
    }
    let hypotheses = checks.finish()?;
    let n = least_exceeding(s, d, r)
        .ok_or_else(|| Error::HypothesisFailed(format!("s = {s} is not positive")))?;
    let coprime = family.iter().all(|(f, _)| {
        let df = f.degree().unwrap() as u64;
        family.iter().all(|(_, rg)| df.gcd(rg) == 1)
    });
    let dynamically_irreducible = all_dumas && coprime;
    let mut conclusion =
        format!("every composition of the {n}-th iterates has at most {r} irreducible factors");
    if dynamically_irreducible {
        conclusion.push_str("; every such composition is irreducible");
    }
    Ok(StabilityCertificate {
        kind: CertificateKind::EventuallyStableSet {
            n,
            factor_bound: r,
            dynamically_irreducible,
        },
        hypotheses,
        conclusion,
        rejected_routes: Vec::new(),
    })
}
