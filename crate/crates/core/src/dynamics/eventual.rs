use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{is_dumas, is_p_type, is_pure};
use crate::error::{Error, Result};
use crate::ff::PolyModP;
use crate::ntheory::{mul_mod, pow_mod};
use crate::padic::{is_unit, order_of_residue, residue, vp, Prime, Valuation};
use crate::poly::{iterate, ser_opt_rational, ser_rational, IterationBudget, PolyQ};

/// Degree cap for iterates expanded over `F_p` during verification.
const MOD_P_VERIFY_CAP: u64 = 1 << 14;
/// Degree cap for the closed form `a^n x^{p^{nm}} + c_n`.
const CLOSED_FORM_CAP: u64 = 1 << 22;

/// `f = a·x^{p^m} + p·h(x) + b` with `ν_p(a) = ν_p(b) = 0`, `deg h < p^m`
/// and `ν_p(h) ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub prime: Prime,
    #[serde(serialize_with = "ser_rational")]
    pub a: BigRational,
    pub m: u32,
    pub h: PolyQ,
    #[serde(serialize_with = "ser_rational")]
    pub b: BigRational,
}

impl Shape {
    pub fn degree(&self) -> u64 {
        self.prime.get().pow(self.m)
    }

    pub fn reconstruct(&self) -> PolyQ {
        let p = BigRational::from_integer(self.prime.to_bigint());
        let lead = PolyQ::monomial(self.a.clone(), self.degree() as usize);
        &(&lead + &self.h.scale(&p)) + &PolyQ::constant(self.b.clone())
    }

    fn residues(&self) -> (u64, u64) {
        let p = self.prime.get();
        (
            residue(&self.a, p).expect("unit"),
            residue(&self.b, p).expect("unit"),
        )
    }

    /// The constant `b·(1 + a + … + a^{k-1}) mod p` of the k-th iterate.
    pub fn iterate_constant(&self, k: u32) -> u64 {
        let p = self.prime.get();
        let (a, b) = self.residues();
        let mut sum = 0;
        let mut pow = 1;
        for _ in 0..k {
            sum = (sum + pow) % p;
            pow = mul_mod(pow, a, p);
        }
        mul_mod(b, sum, p)
    }

    /// Least `n > 1` with `f^n` p-type: `p` if `a ≡ 1`, else `ord_p(a)`.
    pub fn minimal_iterate(&self) -> u32 {
        let p = self.prime.get();
        let (a, _) = self.residues();
        if a == 1 {
            p as u32
        } else {
            order_of_residue(a, p) as u32
        }
    }
}

/// Decomposes `f` as `a·x^{p^m} + p·h(x) + b`, or explains why it cannot.
pub fn p_type_shape(f: &PolyQ, p: Prime) -> Result<Shape> {
    let d = f.degree_at_least(1)? as u64;
    let q = p.get();
    let mut m = 0;
    let mut t = d;
    while t.is_multiple_of(q) {
        t /= q;
        m += 1;
    }
    if t != 1 {
        return Err(Error::ShapeMismatch(format!(
            "degree {d} is not a power of {p}"
        )));
    }
    let a = f.leading();
    let b = f.constant_term();
    if !is_unit(&a, p) {
        return Err(Error::ShapeMismatch(
            "leading coefficient is not a p-adic unit".into(),
        ));
    }
    if !is_unit(&b, p) {
        return Err(Error::ShapeMismatch(
            "constant term is not a p-adic unit".into(),
        ));
    }
    for i in 1..d as usize {
        if vp(&f.coeff(i), p) < Valuation::Finite(1) {
            return Err(Error::ShapeMismatch(format!(
                "coefficient of x^{i} is not divisible by {p}"
            )));
        }
    }
    let middle = &f.tail() - &PolyQ::constant(b.clone());
    let h = middle.scale(&BigRational::new(One::one(), p.to_bigint()));
    Ok(Shape {
        prime: p,
        a,
        m,
        h,
        b,
    })
}

/// `f^n mod p` from the closed form `a^n x^{p^{nm}} + b·Σ_{i<n} a^i`,
/// without expanding the iterate.
pub fn iterate_mod_p_closed_form(f: &PolyQ, p: Prime, n: u32) -> Result<PolyModP> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "iterate index must be at least 1".into(),
        ));
    }
    let shape = p_type_shape(f, p)?;
    if n == 1 {
        return f.reduce_mod_p(p);
    }
    let degree = (shape.m as u64)
        .checked_mul(n as u64)
        .and_then(|e| u32::try_from(e).ok())
        .and_then(|e| p.get().checked_pow(e))
        .filter(|&d| d <= CLOSED_FORM_CAP)
        .ok_or(Error::DegreeCap {
            degree: u64::MAX,
            cap: CLOSED_FORM_CAP,
        })?;
    let q = p.get();
    let (a, _) = shape.residues();
    let mut c = vec![0u64; degree as usize + 1];
    c[0] = shape.iterate_constant(n);
    c[degree as usize] = pow_mod(a, n as u64, q);
    PolyModP::new(p, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum EventualStatus {
    Already,
    AtIterate(u32),
    Never,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventualTypeVerdict {
    pub status: EventualStatus,
    pub minimal_n: Option<u32>,
    /// A shift `c` with `f(x + c)` in the target class.
    #[serde(serialize_with = "ser_opt_rational")]
    pub shift_witness: Option<BigRational>,
    pub shape: Option<Shape>,
    pub diagnostics: Vec<String>,
}

impl EventualTypeVerdict {
    fn new(status: EventualStatus) -> Self {
        let minimal_n = match status {
            EventualStatus::Already => Some(1),
            EventualStatus::AtIterate(n) => Some(n),
            _ => None,
        };
        EventualTypeVerdict {
            status,
            minimal_n,
            shift_witness: None,
            shape: None,
            diagnostics: Vec::new(),
        }
    }

    fn with_status(mut self, status: EventualStatus) -> Self {
        let fresh = EventualTypeVerdict::new(status);
        self.status = fresh.status;
        self.minimal_n = fresh.minimal_n;
        self
    }

    fn note(mut self, msg: impl Into<String>) -> Self {
        self.diagnostics.push(msg.into());
        self
    }
}

fn check_degree_two(f: &PolyQ) -> Result<usize> {
    f.degree_at_least(2)
}

fn check_r(r: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "r must be a positive integer".into(),
        ));
    }
    Ok(())
}

/// Checks the closed-form constants `c_2, …, c_n`: the k-th iterate is
/// p-type exactly when `c_k ≡ 0`. Cross-checks against composition over
/// `F_p` while the degree is small.
fn verify_minimal(f: &PolyQ, shape: &Shape, n: u32) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for k in 2..n {
        if shape.iterate_constant(k) == 0 {
            return Err(Error::HypothesisFailed(format!(
                "iterate {k} is already p-type, contradicting minimality"
            )));
        }
    }
    if shape.iterate_constant(n) != 0 {
        return Err(Error::HypothesisFailed(format!(
            "iterate {n} is not p-type"
        )));
    }
    notes.push(format!(
        "closed form mod {}: constant of f^k vanishes first at k={n}",
        shape.prime
    ));
    let d = shape.degree();
    if d.checked_pow(n).is_some_and(|deg| deg <= MOD_P_VERIFY_CAP) {
        let fbar = f.reduce_mod_p(shape.prime)?;
        let mut current = fbar.clone();
        for k in 2..=n {
            current = fbar.compose(&current);
            let closed = iterate_mod_p_closed_form(f, shape.prime, k)?;
            if current != closed {
                return Err(Error::HypothesisFailed(format!(
                    "composition mod {} disagrees with the closed form at k={k}",
                    shape.prime
                )));
            }
        }
        notes.push(format!(
            "composition mod {} agrees for k<= {n}",
            shape.prime
        ));
    }
    Ok(notes)
}

/// Decides whether some iterate of `f` is p-type and finds the least one.
pub fn eventually_p_type(f: &PolyQ, p: Prime) -> Result<EventualTypeVerdict> {
    check_degree_two(f)?;
    if is_p_type(f, p)?.holds {
        return Ok(EventualTypeVerdict::new(EventualStatus::Already));
    }
    let shape = match p_type_shape(f, p) {
        Ok(s) => s,
        Err(Error::ShapeMismatch(why)) => {
            return Ok(EventualTypeVerdict::new(EventualStatus::Never).note(why))
        }
        Err(e) => return Err(e),
    };
    let n = shape.minimal_iterate();
    let notes = verify_minimal(f, &shape, n)?;
    let mut v = EventualTypeVerdict::new(EventualStatus::AtIterate(n));
    v.shape = Some(shape);
    v.diagnostics = notes;
    Ok(v)
}

/// Least `n` with `f^n` p^r-pure.
///
/// For `d > r` the answer is decided; for `d ≤ r` a failed construction is
/// reported as `Undetermined`. A successful answer carries the shift
/// witness `c = f^{n-1}(0)` for which `f(x + c)` is p^r-pure.
pub fn eventually_pure(
    f: &PolyQ,
    p: Prime,
    r: u64,
    budget: &IterationBudget,
) -> Result<EventualTypeVerdict> {
    let d = check_degree_two(f)? as u64;
    check_r(r)?;
    if is_pure(f, p, r)?.holds {
        return Ok(EventualTypeVerdict::new(EventualStatus::Already));
    }
    let decided = d > r;
    let failure = if decided {
        EventualStatus::Never
    } else {
        EventualStatus::Undetermined
    };
    let mut v = EventualTypeVerdict::new(failure);
    if !decided {
        v = v.note(format!("deg {d} <= r = {r}: outside the decided range"));
    }
    let shape = match p_type_shape(f, p) {
        Ok(s) => s,
        Err(Error::ShapeMismatch(why)) => return Ok(v.note(why)),
        Err(e) => return Err(e),
    };
    let n = shape.minimal_iterate();
    v.shape = Some(shape.clone());
    match verify_minimal(f, &shape, n) {
        Ok(notes) => v.diagnostics.extend(notes),
        Err(Error::HypothesisFailed(why)) => return Ok(v.note(why)),
        Err(e) => return Err(e),
    }
    let mut found = None;
    for k in 2..=n {
        let fk = match iterate(f, k, budget) {
            Ok(g) => g,
            Err(e @ Error::BudgetExceeded { .. }) => {
                return Ok(v
                    .with_status(EventualStatus::Undetermined)
                    .note(format!("candidate iterate {n}: {e}")))
            }
            Err(e) => return Err(e),
        };
        let pure = is_pure(&fk, p, r)?;
        if pure.holds {
            found = Some(k);
            break;
        }
        if k == n {
            return Ok(v.note(format!(
                "f^{n} is not {p}^{r}-pure (witness {:?})",
                pure.witness
            )));
        }
    }
    let n = found.expect("loop returns or finds");
    let mut c = BigRational::zero();
    for _ in 1..n {
        c = f.evaluate(&c);
    }
    let shifted_pure = is_pure(&f.shift(&c), p, r)?.holds;
    v = v
        .with_status(EventualStatus::AtIterate(n))
        .note(format!("f^{n} expanded and verified {p}^{r}-pure"))
        .note(format!("f(x + {c}) is {p}^{r}-pure: {shifted_pure}"));
    if !decided {
        v = v.note("verified by construction");
    }
    v.shift_witness = Some(c);
    Ok(v)
}

/// Like [`eventually_pure`] with the extra requirement `gcd(r, d^n) = 1`.
pub fn eventually_dumas(
    f: &PolyQ,
    p: Prime,
    r: u64,
    budget: &IterationBudget,
) -> Result<EventualTypeVerdict> {
    let d = check_degree_two(f)? as u64;
    check_r(r)?;
    if is_dumas(f, p, r)?.holds {
        return Ok(EventualTypeVerdict::new(EventualStatus::Already));
    }
    let g = r.gcd(&d);
    if g > 1 {
        return Ok(EventualTypeVerdict::new(EventualStatus::Never)
            .note(format!("gcd(r, d^n) >= {g} for every n")));
    }
    let mut v = eventually_pure(f, p, r, budget)?;
    if let EventualStatus::AtIterate(n) = v.status {
        v = v.note(format!("gcd({r}, {d}^{n}) = 1"));
    }
    Ok(v)
}
