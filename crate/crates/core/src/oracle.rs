//! Independent reference values for N(α,δ,x) and γ(ν,x).
//!
//! Everything here exists to validate the enclosure machinery, so it
//! deliberately shares no code with it beyond elementary exp/pow and the
//! complete Gamma function: N is evaluated by tanh-sinh quadrature of the
//! defining integral, γ by its own series / continued-fraction pair.

use crate::kummer::KummerParams;
use crate::special::gamma_complete;
use crate::{Error, Result};

/// Value of a reference evaluation together with its self-estimated
/// relative error and the work spent (function evaluations or terms).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub est_error: f64,
    pub evaluations: u64,
}

/// Truncation point of the double-exponential abscissa. It must be large
/// enough that even the weakest admissible endpoint decay — the
/// `(1−t)^(δ+1)` net factor at δ near −1 — is negligible at the cutoff
/// (for δ = −0.95 the tail past u = 6 is ~e^(−32)), yet small enough
/// that weight and integrand stay separately representable in doubles
/// (1 − t ≈ e^(−634) at u = 6 is still a normal double).
const U_MAX: f64 = 6.0;
const MAX_LEVELS: u32 = 12;

/// Tanh-sinh quadrature of `∫₀¹ f(t) dt`.
///
/// The integrand receives both `t` and `1 − t` exactly, so endpoint
/// behavior like `t^(α−1)` or `(1−t)^δ` can be evaluated without
/// cancellation; integrable endpoint singularities are absorbed by the
/// double-exponential decay of the weights. `tol` is a relative target.
pub fn tanh_sinh_unit<F>(f: F, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> f64,
{
    if !(tol >= 1e-13) {
        return Err(Error::Domain(format!(
            "quadrature tolerance must be >= 1e-13, got {tol}"
        )));
    }
    let mut evaluations = 0u64;
    // transformed integrand at abscissa u; dt/du = pi cosh(u) t (1-t)
    let mut node = |u: f64| -> f64 {
        evaluations += 1;
        let s = std::f64::consts::PI * u.sinh();
        let t = 1.0 / (1.0 + (-s).exp());
        let one_minus_t = 1.0 / (1.0 + s.exp());
        let weight = std::f64::consts::PI * u.cosh() * t * one_minus_t;
        if weight == 0.0 {
            return 0.0;
        }
        weight * f(t, one_minus_t)
    };

    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= U_MAX {
        sum += node(k as f64 * h) + node(-(k as f64) * h);
        k += 1;
    }
    let mut value = h * sum;
    let mut est_error = f64::INFINITY;

    for level in 1..=MAX_LEVELS {
        h *= 0.5;
        // refine with the odd multiples of the new step
        let mut odd_sum = 0.0;
        let mut k = 1;
        while (k as f64) * h <= U_MAX {
            odd_sum += node(k as f64 * h) + node(-(k as f64) * h);
            k += 2;
        }
        sum += odd_sum;
        let refined = h * sum;
        let scale = refined.abs().max(f64::MIN_POSITIVE);
        est_error = (refined - value).abs() / scale;
        value = refined;
        if level >= 2 && est_error <= tol {
            return Ok(QuadratureResult {
                value,
                est_error,
                evaluations,
            });
        }
    }
    Err(Error::ToleranceNotMet { value, est_error })
}

/// Reference value of `N(α,δ,x) = ∫₀¹ t^(α−1)(1−t)^δ e^(−xt) dt`.
pub fn n_reference(p: KummerParams, x: f64, tol: f64) -> Result<QuadratureResult> {
    let alpha = p.alpha();
    let delta = p.delta();
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    tanh_sinh_unit(
        move |t, one_minus_t| {
            t.powf(alpha - 1.0) * one_minus_t.powf(delta) * (-x * t).exp()
        },
        tol,
    )
}

// gamma(nu, x) / terms consumed, by the alternating Taylor series
// x^nu * sum_j (-1)^j x^j / (j! (nu+j)); valid tail cutoff once terms
// decrease (j > x), since the series is then alternating with shrinking
// magnitude.
fn gamma_series(nu: f64, x: f64, tol: f64) -> Result<(f64, f64, u64)> {
    if x == 0.0 {
        return Ok((0.0, 0.0, 1));
    }
    // Kahan-compensated sum: the series alternates with terms up to
    // ~e^x/x^nu times the result, so naive accumulation wastes digits.
    let mut sum = 1.0 / nu;
    let mut compensation = 0.0;
    let mut term = 1.0; // x^j / j!
    for j in 1..=600u64 {
        term *= -x / j as f64;
        let contribution = term / (nu + j as f64) - compensation;
        let updated = sum + contribution;
        compensation = (updated - sum) - contribution;
        sum = updated;
        if j as f64 > x && contribution.abs() <= 0.5 * tol * sum.abs() {
            let scale = x.powf(nu);
            return Ok((scale * sum, contribution.abs() / sum.abs(), j + 1));
        }
    }
    Err(Error::ToleranceNotMet {
        value: x.powf(nu) * sum,
        est_error: (term / (nu + 600.0)).abs() / sum.abs(),
    })
}

// Upper incomplete Gamma(nu, x) by the standard continued fraction
// (modified Lentz), accurate for x > nu + 1.
fn upper_gamma_cf(nu: f64, x: f64, tol: f64) -> Result<(f64, f64, u64)> {
    const TINY: f64 = 1e-300;
    let b0 = x + 1.0 - nu;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / if b0.abs() < TINY { TINY } else { b0 };
    let mut frac = d;
    let mut b = b0;
    for i in 1..=400u64 {
        let a = -(i as f64) * (i as f64 - nu);
        b += 2.0;
        d = b + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        frac *= delta;
        if (delta - 1.0).abs() <= 0.5 * tol {
            let value = (-x + nu * x.ln()).exp() * frac;
            return Ok((value, (delta - 1.0).abs(), i));
        }
    }
    Err(Error::ToleranceNotMet {
        value: (-x + nu * x.ln()).exp() * frac,
        est_error: f64::NAN,
    })
}

/// Reference value of the lower incomplete Gamma function γ(ν, x):
/// alternating series for x ≤ ν + 1, complement of the continued
/// fraction otherwise.
pub fn gamma_reference(nu: f64, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(nu > 0.0) || !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "gamma_reference requires nu > 0 and x >= 0, got ({nu}, {x})"
        )));
    }
    if !(tol >= 1e-13) {
        return Err(Error::Domain(format!(
            "tolerance must be >= 1e-13, got {tol}"
        )));
    }
    if x <= nu + 1.0 {
        let (value, est_error, evaluations) = gamma_series(nu, x, tol)?;
        Ok(QuadratureResult {
            value,
            est_error,
            evaluations,
        })
    } else {
        let (upper, est_error, evaluations) = upper_gamma_cf(nu, x, tol)?;
        let value = gamma_complete(nu)? - upper;
        Ok(QuadratureResult {
            value,
            est_error,
            evaluations,
        })
    }
}
