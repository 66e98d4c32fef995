use std::collections::HashSet;

use serde::Serialize;

use super::{ff_irreducible, PolyModP};
use crate::error::{Error, Result};
use crate::ntheory::{inv_mod, pow_mod};

/// Iterates above this degree are not expanded over `F_p`.
pub const FF_DEGREE_CAP: u64 = 1 << 14;

/// One Euler-criterion evaluation: `sign · a · f^n(γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareCheck {
    pub n: u32,
    pub expression: String,
    pub value: u64,
    pub nonsquare: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum JonesVerdict {
    /// Every check is a nonsquare, so all iterates are irreducible over `F_p`.
    Stable {
        critical_point: u64,
        orbit: Vec<u64>,
        checks: Vec<SquareCheck>,
    },
    /// The first check that is a square, or `None` if the orbit cap was hit.
    Inconclusive {
        critical_point: u64,
        orbit: Vec<u64>,
        checks: Vec<SquareCheck>,
        witness: Option<SquareCheck>,
    },
}

impl JonesVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, JonesVerdict::Stable { .. })
    }
}

/// Quadratic stability test over `F_p`, `p` odd.
///
/// With `γ` the critical point of `f = ax^2 + bx + c`, the iterates are all
/// irreducible when `-a·f(γ)` and `a·f^n(γ)` for `n ≥ 2` are nonsquares.
/// The orbit is followed until it repeats or `max_orbit` steps are taken.
pub fn jones_quadratic_stability(f: &PolyModP, max_orbit: usize) -> Result<JonesVerdict> {
    let p = f.modulus();
    if f.degree() != Some(2) {
        return Err(Error::degree(2, f.degree()));
    }
    if p == 2 {
        return Err(Error::InvalidParameter(
            "the quadratic criterion needs an odd prime".into(),
        ));
    }
    let a = f.coeff(2);
    let b = f.coeff(1);
    let gamma = (p - b) % p * inv_mod(2 * a % p, p) % p;
    let is_nonsquare = |v: u64| v != 0 && pow_mod(v, (p - 1) / 2, p) == p - 1;

    let mut orbit = Vec::new();
    let mut checks = Vec::new();
    let mut seen = HashSet::new();
    let mut v = gamma;
    for step in 1..=max_orbit {
        v = f.evaluate(v);
        let n = step as u32;
        let (expression, value) = if n == 1 {
            ("-a*f(gamma)".to_string(), (p - a) * v % p)
        } else {
            if !seen.insert(v) {
                return Ok(JonesVerdict::Stable {
                    critical_point: gamma,
                    orbit,
                    checks,
                });
            }
            (format!("a*f^{n}(gamma)"), a * v % p)
        };
        orbit.push(v);
        let check = SquareCheck {
            n,
            expression,
            value,
            nonsquare: is_nonsquare(value),
        };
        let ok = check.nonsquare;
        checks.push(check.clone());
        if !ok {
            return Ok(JonesVerdict::Inconclusive {
                critical_point: gamma,
                orbit,
                checks,
                witness: Some(check),
            });
        }
    }
    Ok(JonesVerdict::Inconclusive {
        critical_point: gamma,
        orbit,
        checks,
        witness: None,
    })
}

/// Least `n ≤ max_n` with `f^n` reducible over `F_p`, or `None` if the
/// first `max_n` iterates are all irreducible.
pub fn newly_reducible_index(f: &PolyModP, max_n: u32) -> Result<Option<u32>> {
    let d = match f.degree() {
        None | Some(0) => return Err(Error::degree(1, f.degree())),
        Some(d) => d as u64,
    };
    let mut current = f.clone();
    for n in 1..=max_n {
        if n > 1 {
            let degree = current.degree().unwrap() as u64 * d;
            if degree > FF_DEGREE_CAP {
                return Err(Error::DegreeCap {
                    degree,
                    cap: FF_DEGREE_CAP,
                });
            }
            current = f.compose(&current);
        }
        if !ff_irreducible(&current) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
