use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};

/// Bounds on the factorization of the iterates of a p^r-pure polynomial of
/// degree `d`: `f^n` has at most `gcd(d^n, r)` irreducible factors, each of
/// degree at least `d^n / gcd(d^n, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorBound {
    pub d: u64,
    pub r: u64,
    pub stable_bound: u64,
    /// First `n` with `gcd(d^n, r) = stable_bound`.
    pub fixpoint: u32,
    /// `gcd(d^n, r)` for `n = 1..=fixpoint`.
    pub table: Vec<u64>,
}

impl FactorBound {
    /// `gcd(d^n, r)`; `n = 0` gives 1.
    pub fn per_iterate(&self, n: u32) -> u64 {
        match n {
            0 => 1,
            n if n >= self.fixpoint => self.stable_bound,
            n => self.table[n as usize - 1],
        }
    }

    /// `d^n / gcd(d^n, r)`.
    pub fn min_factor_degree(&self, n: u32) -> BigUint {
        BigUint::from(self.d).pow(n) / BigUint::from(self.per_iterate(n))
    }
}

/// `g_n = gcd(d^n, r)` via `g_n = gcd(d·g_{n-1}, r)`, up to its fixpoint.
pub fn factor_bound(d: u64, r: u64) -> Result<FactorBound> {
    if d < 2 {
        return Err(Error::InvalidParameter("degree must be at least 2".into()));
    }
    if r == 0 {
        return Err(Error::InvalidParameter(
            "r must be a positive integer".into(),
        ));
    }
    let mut table = vec![d.gcd(&r)];
    loop {
        let last = *table.last().unwrap();
        let next = ((d % r) as u128 * last as u128 % r as u128) as u64;
        let next = if next == 0 { r } else { next.gcd(&r) };
        if next == last {
            break;
        }
        table.push(next);
    }
    Ok(FactorBound {
        d,
        r,
        stable_bound: *table.last().unwrap(),
        fixpoint: table.len() as u32,
        table,
    })
}
