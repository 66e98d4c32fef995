use serde::Serialize;

use super::PolyQ;
use crate::error::{Error, Result};

/// Resource limits for exact iteration. Iterates grow doubly exponentially,
/// so every step is checked against the limits before it is expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IterationBudget {
    pub max_degree: u64,
    pub max_bits: u64,
}

impl Default for IterationBudget {
    fn default() -> Self {
        IterationBudget {
            max_degree: 1 << 20,
            max_bits: 1 << 26,
        }
    }
}

impl IterationBudget {
    /// Upper estimate of the total coefficient bits of `f ∘ g`.
    fn predicted_bits(f: &PolyQ, g: &PolyQ) -> u64 {
        let d = f.degree().unwrap_or(0) as u64;
        let e = g.degree().unwrap_or(0) as u64;
        let per_coeff =
            f.max_coeff_bits() + d * (g.max_coeff_bits() + bit_len(e + 1)) + bit_len(d + 1);
        per_coeff.saturating_mul(d * e + 1)
    }
}

fn bit_len(n: u64) -> u64 {
    64 - n.leading_zeros() as u64
}

/// The n-th iterate `f ∘ f ∘ … ∘ f`.
///
/// Fails with [`Error::BudgetExceeded`] naming the last iterate that was
/// computed when the next one would break the degree or bit budget.
pub fn iterate(f: &PolyQ, n: u32, budget: &IterationBudget) -> Result<PolyQ> {
    let d = f.degree_at_least(1)? as u64;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "iterate index must be at least 1".into(),
        ));
    }
    let mut current = f.clone();
    for k in 1..n {
        let degree = current.degree().unwrap_or(0) as u64;
        let next_degree = degree.saturating_mul(d);
        let bits = IterationBudget::predicted_bits(f, &current);
        if next_degree > budget.max_degree || bits > budget.max_bits {
            return Err(Error::BudgetExceeded {
                iterate: k,
                degree: next_degree,
                bits,
            });
        }
        current = f.compose(&current);
        let actual = current.total_bits();
        if actual > budget.max_bits {
            return Err(Error::BudgetExceeded {
                iterate: k,
                degree: next_degree,
                bits: actual,
            });
        }
    }
    Ok(current)
}
