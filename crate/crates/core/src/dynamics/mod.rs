//! Iterate-level analysis: eventual p-type and eventual purity, factor-count
//! bounds for iterates, and stability certificates.

mod bound;
mod certificate;
mod eventual;

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::Zero;

pub use bound::{factor_bound, FactorBound};
pub use certificate::{
    binomial_stability_certificate, composition_purity_certificate, dumas_certificate,
    eventually_stable_set_certificate, f_stability_certificate, leading_split,
    pure_stability_certificate, CertificateKind, CompositionRoute, Hypothesis, RejectedRoute,
    StabilityCertificate,
};
pub use eventual::{
    eventually_dumas, eventually_p_type, eventually_pure, iterate_mod_p_closed_form, p_type_shape,
    EventualStatus, EventualTypeVerdict, Shape,
};

use crate::poly::PolyQ;

/// Orbit values larger than this many bits end the search.
const ORBIT_BIT_CAP: u64 = 1 << 16;

/// Period of `0` under `f` if it returns to `0` within `max_iter` steps.
///
/// Stops early when the orbit enters a cycle avoiding `0` or its height
/// passes a fixed cap.
pub fn orbit_zero_periodic(f: &PolyQ, max_iter: u32) -> Option<u32> {
    let mut seen = HashSet::new();
    let mut v = BigRational::zero();
    seen.insert(v.clone());
    for k in 1..=max_iter {
        v = f.evaluate(&v);
        if v.is_zero() {
            return Some(k);
        }
        if !seen.insert(v.clone()) {
            return None;
        }
        if v.numer().bits() + v.denom().bits() > ORBIT_BIT_CAP {
            return None;
        }
    }
    None
}
