//! Membership tests for the p-type, p^r-pure, p^r-Dumas and Eisenstein
//! families, and for the sets built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::{vp, Prime, Valuation};
use crate::poly::PolyQ;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Least coefficient index violating the definition.
    Index(usize),
    /// A failing side condition, e.g. `gcd(r,d)=2`.
    Condition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub r: Option<u64>,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes(r: Option<u64>) -> Verdict {
        Verdict {
            holds: true,
            r,
            witness: None,
        }
    }

    fn no(r: Option<u64>, witness: Witness) -> Verdict {
        Verdict {
            holds: false,
            r,
            witness: Some(witness),
        }
    }
}

fn positive_degree(f: &PolyQ) -> Result<usize> {
    f.degree_at_least(1)
}

fn check_r(r: u64) -> Result<i64> {
    if r == 0 || r > i64::MAX as u64 {
        return Err(Error::InvalidParameter(
            "r must be a positive integer".into(),
        ));
    }
    Ok(r as i64)
}

/// Scans `i = 0..=d` and returns the first index where `ok` fails.
fn first_failure(f: &PolyQ, p: Prime, ok: impl Fn(usize, Valuation) -> bool) -> Option<usize> {
    (0..=f.degree().unwrap_or(0)).find(|&i| !ok(i, vp(&f.coeff(i), p)))
}

/// `ν_p(a_d) = 0` and `ν_p(a_i) ≥ 1` for `i < d`.
pub fn is_p_type(f: &PolyQ, p: Prime) -> Result<Verdict> {
    let d = positive_degree(f)?;
    let fail = first_failure(f, p, |i, v| {
        if i == d {
            v == Valuation::Finite(0)
        } else {
            v >= Valuation::Finite(1)
        }
    });
    Ok(match fail {
        None => Verdict::yes(None),
        Some(i) => Verdict::no(None, Witness::Index(i)),
    })
}

fn pure_failure(f: &PolyQ, p: Prime, r: i64) -> Option<usize> {
    let d = f.degree().unwrap() as i64;
    first_failure(f, p, |i, v| {
        let i = i as i64;
        if i == d {
            v == Valuation::Finite(0)
        } else if i == 0 {
            v == Valuation::Finite(r)
        } else {
            match v {
                Valuation::Infinite => true,
                Valuation::Finite(v) => v as i128 * d as i128 >= r as i128 * (d - i) as i128,
            }
        }
    })
}

/// `ν_p(a_d) = 0`, `ν_p(a_0) = r` and `ν_p(a_i)/(d-i) ≥ r/d` for `0 < i < d`.
pub fn is_pure(f: &PolyQ, p: Prime, r: u64) -> Result<Verdict> {
    positive_degree(f)?;
    let ri = check_r(r)?;
    Ok(match pure_failure(f, p, ri) {
        None => Verdict::yes(Some(r)),
        Some(i) => Verdict::no(Some(r), Witness::Index(i)),
    })
}

fn gcd_condition(r: u64, d: usize) -> Option<Witness> {
    let g = r.gcd(&(d as u64));
    (g != 1).then(|| Witness::Condition(format!("gcd(r,d)={g}")))
}

/// p^r-pure with `gcd(r, d) = 1`.
pub fn is_dumas(f: &PolyQ, p: Prime, r: u64) -> Result<Verdict> {
    let pure = is_pure(f, p, r)?;
    if !pure.holds {
        return Ok(pure);
    }
    Ok(match gcd_condition(r, f.degree().unwrap()) {
        None => Verdict::yes(Some(r)),
        Some(w) => Verdict::no(Some(r), w),
    })
}

/// `ν_p(a_d) = 0`, `ν_p(a_i) ≥ r` for `0 < i < d`, `ν_p(a_0) = r`, `gcd(r, d) = 1`.
pub fn is_pr_eisenstein(f: &PolyQ, p: Prime, r: u64) -> Result<Verdict> {
    let d = positive_degree(f)?;
    let ri = check_r(r)?;
    let fail = first_failure(f, p, |i, v| {
        if i == d {
            v == Valuation::Finite(0)
        } else if i == 0 {
            v == Valuation::Finite(ri)
        } else {
            v >= Valuation::Finite(ri)
        }
    });
    if let Some(i) = fail {
        return Ok(Verdict::no(Some(r), Witness::Index(i)));
    }
    Ok(match gcd_condition(r, d) {
        None => Verdict::yes(Some(r)),
        Some(w) => Verdict::no(Some(r), w),
    })
}

pub fn is_eisenstein(f: &PolyQ, p: Prime) -> Result<Verdict> {
    is_pr_eisenstein(f, p, 1)
}

/// The only possible `r` is `ν_p(a_0)`; returns it when `f` is p^r-pure.
pub fn detect_purity(f: &PolyQ, p: Prime) -> Result<Option<u64>> {
    positive_degree(f)?;
    match vp(&f.constant_term(), p) {
        Valuation::Infinite => Err(Error::ZeroEndCoefficient),
        Valuation::Finite(r) if r >= 1 => Ok(pure_failure(f, p, r).is_none().then_some(r as u64)),
        Valuation::Finite(_) => Ok(None),
    }
}

/// The families `E(p)`, `D(p,q)` and `S(p,R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "set", rename_all = "snake_case")]
pub enum PolySet {
    /// p-Eisenstein with `p ∤ deg f` and `deg f > 1`.
    Eisenstein { p: Prime },
    /// p^{q^k}-Dumas with `deg f > q^k` for some `k ≥ 1`.
    Dumas { p: Prime, q: Prime },
    /// p^r-pure for some `r ∈ R` with `deg f > r`.
    Pure { p: Prime, rs: BTreeSet<u64> },
}

impl PolySet {
    pub fn prime(&self) -> Prime {
        match self {
            PolySet::Eisenstein { p } | PolySet::Dumas { p, .. } | PolySet::Pure { p, .. } => *p,
        }
    }
}

impl fmt::Display for PolySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolySet::Eisenstein { p } => write!(f, "E({p})"),
            PolySet::Dumas { p, q } => write!(f, "D({p},{q})"),
            PolySet::Pure { p, rs } => {
                let rs: Vec<String> = rs.iter().map(u64::to_string).collect();
                write!(f, "S({p},{{{}}})", rs.join(","))
            }
        }
    }
}

/// Parses `E(5)`, `D(2,3)` or `S(2,{2,3})`.
impl FromStr for PolySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse set '{s}'"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad());
        match name {
            "E" => Ok(PolySet::Eisenstein {
                p: Prime::new(num(inner)?)?,
            }),
            "D" => {
                let (p, q) = inner.split_once(',').ok_or_else(bad)?;
                Ok(PolySet::Dumas {
                    p: Prime::new(num(p)?)?,
                    q: Prime::new(num(q)?)?,
                })
            }
            "S" => {
                let (p, rs) = inner.split_once(',').ok_or_else(bad)?;
                let rs = rs
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(bad)?;
                let rs = rs.split(',').map(num).collect::<Result<BTreeSet<u64>>>()?;
                if rs.is_empty() || rs.contains(&0) {
                    return Err(Error::InvalidParameter(
                        "R must hold positive integers".into(),
                    ));
                }
                Ok(PolySet::Pure {
                    p: Prime::new(num(p)?)?,
                    rs,
                })
            }
            _ => Err(bad()),
        }
    }
}

/// `Some(k)` when `n = q^k` with `k ≥ 1`.
fn log_exact(n: u64, q: u64) -> Option<u32> {
    let mut k = 0;
    let mut m = n;
    while m > 1 && m.is_multiple_of(q) {
        m /= q;
        k += 1;
    }
    (m == 1 && k >= 1).then_some(k)
}

pub fn set_membership(f: &PolyQ, set: &PolySet) -> Result<Verdict> {
    let d = positive_degree(f)?;
    let cond = |r, s: String| Ok(Verdict::no(r, Witness::Condition(s)));
    match set {
        PolySet::Eisenstein { p } => {
            let v = is_eisenstein(f, *p)?;
            if !v.holds {
                return Ok(v);
            }
            if d <= 1 {
                return cond(Some(1), "deg(f)>1".into());
            }
            if (d as u64).is_multiple_of(p.get()) {
                return cond(Some(1), format!("{p} divides deg(f)"));
            }
            Ok(v)
        }
        PolySet::Dumas { p, q } => {
            let r = match vp(&f.constant_term(), *p) {
                Valuation::Finite(r) if r >= 1 => r as u64,
                _ => return cond(None, "a_0 has no positive valuation".into()),
            };
            if log_exact(r, q.get()).is_none() {
                return cond(Some(r), format!("r={r} is not a power of {q}"));
            }
            if d as u64 <= r {
                return cond(Some(r), format!("deg(f)>{r}"));
            }
            is_dumas(f, *p, r)
        }
        PolySet::Pure { p, rs } => {
            let r = match vp(&f.constant_term(), *p) {
                Valuation::Finite(r) if r >= 1 => r as u64,
                _ => return cond(None, "a_0 has no positive valuation".into()),
            };
            if !rs.contains(&r) {
                return cond(Some(r), format!("r={r} not in R"));
            }
            if d as u64 <= r {
                return cond(Some(r), format!("deg(f)>{r}"));
            }
            is_pure(f, *p, r)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub polynomial: PolyQ,
    pub prime: Prime,
    pub verdicts: BTreeMap<&'static str, Verdict>,
}

impl ClassificationReport {
    pub fn holds(&self, class: &str) -> bool {
        self.verdicts.get(class).is_some_and(|v| v.holds)
    }
}

/// Runs every classifier. Without an explicit `r`, the forced value
/// `ν_p(a_0)` is used when it is a positive integer.
pub fn classify(f: &PolyQ, p: Prime, r: Option<u64>) -> Result<ClassificationReport> {
    positive_degree(f)?;
    let r = match r {
        Some(r) => Some(r),
        None => match vp(&f.constant_term(), p) {
            Valuation::Finite(v) if v >= 1 => Some(v as u64),
            _ => None,
        },
    };
    let mut verdicts = BTreeMap::new();
    verdicts.insert("p_type", is_p_type(f, p)?);
    verdicts.insert("eisenstein", is_eisenstein(f, p)?);
    let missing = || Verdict::no(None, Witness::Condition("no positive r".into()));
    match r {
        Some(r) => {
            verdicts.insert("pure", is_pure(f, p, r)?);
            verdicts.insert("dumas", is_dumas(f, p, r)?);
            verdicts.insert("pr_eisenstein", is_pr_eisenstein(f, p, r)?);
        }
        None => {
            verdicts.insert("pure", missing());
            verdicts.insert("dumas", missing());
            verdicts.insert("pr_eisenstein", missing());
        }
    }
    Ok(ClassificationReport {
        polynomial: f.clone(),
        prime: p,
        verdicts,
    })
}
