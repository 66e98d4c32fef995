//! Exact arithmetic for polynomials over ℚ: p-adic Newton polygons, the
//! pure/Dumas/Eisenstein families, iterate dynamics, factorization over
//! `F_p` and over ℚ.

pub mod classify;
pub mod dynamics;
pub mod error;
pub mod ff;
pub mod newton;
pub mod ntheory;
pub mod padic;
pub mod poly;
pub mod zfactor;

pub use error::{Error, Result};
pub use padic::{Prime, Valuation};
pub use poly::{iterate, parse_poly, IterationBudget, PolyQ};
