use serde::Serialize;

use super::PolyQ;
use crate::error::Result;

/// Base-`g` positional representation `A = Σ digits[i] · g^i` with
/// `deg digits[i] < deg g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GExpansion {
    pub base: PolyQ,
    pub digits: Vec<PolyQ>,
}

impl GExpansion {
    /// Index of the top digit, i.e. the `d` in `A = a_d g^d + … + a_0`.
    pub fn top(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    pub fn reconstruct(&self) -> PolyQ {
        self.digits
            .iter()
            .rev()
            .fold(PolyQ::zero(), |acc, digit| &(&acc * &self.base) + digit)
    }
}

/// Expands `a` in base `g` by repeated division with remainder.
/// The zero polynomial has no digits.
pub fn g_expansion(a: &PolyQ, g: &PolyQ) -> Result<GExpansion> {
    g.degree_at_least(1)?;
    let mut digits = Vec::new();
    let mut rest = a.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(g);
        digits.push(r);
        rest = q;
    }
    Ok(GExpansion {
        base: g.clone(),
        digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn expansion_examples() {
        let g = poly("x^2+x+1");
        let e = g_expansion(&poly("(x^2+x+1)^2+32"), &g).unwrap();
        assert_eq!(e.digits, vec![poly("32"), PolyQ::zero(), poly("1")]);

        let e = g_expansion(&g, &g).unwrap();
        assert_eq!(e.digits, vec![PolyQ::zero(), poly("1")]);

        let e = g_expansion(&poly("3x - 1/2"), &g).unwrap();
        assert_eq!(e.digits, vec![poly("3x - 1/2")]);
    }

    #[test]
    fn constant_base_rejected() {
        assert!(g_expansion(&poly("x"), &poly("7")).is_err());
    }

    proptest! {
        #[test]
        fn expansion_reconstructs(
            a in prop::collection::vec(-20i64..20, 0..12),
            g in prop::collection::vec(-5i64..5, 2..5),
        ) {
            let a = PolyQ::from_ints(&a);
            let g = PolyQ::from_ints(&g);
            prop_assume!(g.degree().unwrap_or(0) >= 1);
            let e = g_expansion(&a, &g).unwrap();
            prop_assert_eq!(e.reconstruct(), a);
            let dg = g.degree().unwrap();
            prop_assert!(e.digits.iter().all(|d| d.degree().is_none_or(|k| k < dg)));
        }
    }
}
