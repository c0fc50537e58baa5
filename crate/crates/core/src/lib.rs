//! Two-sided enclosures of the reparametrized Kummer function
//! `N(alpha, delta, x) = ∫₀¹ t^(alpha−1) (1−t)^delta e^(−xt) dt`
//! by finite sums of incomplete Gamma functions.
//!
//! The crate provides:
//! - a kernel of classical functions (complete Gamma, Pochhammer symbols,
//!   Beta, falling factorials) in [`special`];
//! - enclosure families for the lower incomplete Gamma (Taylor, Laurent,
//!   Padé, elementary recursion, matched) in [`incgamma`];
//! - the Taylor-remainder coefficients of `(1−t)^delta` that drive every
//!   enclosure of `N` in [`remainder`];
//! - enclosures, error estimators, relative uncertainties and sup-norm
//!   bounds for `N` (and the standard Kummer `M`) in [`kummer`];
//! - an independent tanh-sinh quadrature oracle in [`oracle`], used for
//!   validation only, never inside the bound computations.

// `!(x > 0.0)`-style guards are deliberate: they reject NaN along with the
// out-of-domain values, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod enclosure;
pub mod incgamma;
pub mod kummer;
pub mod oracle;
pub mod remainder;
pub mod special;
pub mod sweep;

pub use enclosure::Enclosure;
pub use kummer::{ErrorEstimate, KummerParams, StandardParams};
pub use oracle::QuadratureResult;
pub use remainder::RemainderCoefficients;
pub use special::Sign;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("Gamma pole at nu = {0}")]
    Pole(f64),
    #[error("unsupported Pade order q = {0} (closed forms available for q <= 2)")]
    UnsupportedOrder(u32),
    #[error("enclosure collapsed: lo = {lo} > hi = {hi} beyond rounding slack")]
    Collapse { lo: f64, hi: f64 },
    #[error("quadrature tolerance not met: best value {value}, estimated relative error {est_error}")]
    ToleranceNotMet { value: f64, est_error: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
