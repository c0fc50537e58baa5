//! Taylor-remainder theory for `(1−t)^delta`: the remainder factor
//! `rho_n(delta, t)` of the expansion
//! `(1−t)^delta = sum_{k<n} ((−delta)_k/k!) t^k + rho_n(delta, t) t^n`,
//! and the closed-form coefficients (its inf/sup over `[0, 1)`, the
//! substitute upper coefficient for `delta < 0`, and the absolute-error
//! coefficient) that drive every enclosure of N.

use crate::oracle::tanh_sinh_unit;
use crate::special::{gamma_complete, pochhammer};
use crate::{Error, Result};

/// Remainder bound coefficients at a given expansion order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderCoefficients {
    pub order: u32,
    pub delta: f64,
    /// inf of the remainder factor (the coefficient of the lower bound).
    pub lower: f64,
    /// sup of the remainder factor; `None` when unbounded (delta < 0).
    pub upper: Option<f64>,
    /// Substitute upper coefficient, present iff delta in (−1, 0).
    pub substitute: Option<f64>,
    /// Coefficient of the absolute-error bound.
    pub abs_coeff: f64,
}

impl RemainderCoefficients {
    /// The coefficient used in the upper bound `G_n`: the remainder sup
    /// for delta >= 0, the substitute for delta in (−1, 0).
    pub fn effective_upper(&self) -> f64 {
        self.upper
            .or(self.substitute)
            .expect("one of upper/substitute is always present")
    }
}

// prod_{j=0}^{n-1} (a+j)/(j+1) = (a)_n / n!, stable up to n ~ 1e4.
fn pochhammer_over_factorial(a: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..n {
        acc *= (a + j as f64) / (j as f64 + 1.0);
    }
    acc
}

/// Closed-form bound coefficients for alpha > 0, delta > −1, n >= 1.
pub fn bound_coefficients(alpha: f64, delta: f64, n: u32) -> Result<RemainderCoefficients> {
    if !(alpha > 0.0) || !(delta > -1.0) || n == 0 {
        return Err(Error::Domain(format!(
            "bound_coefficients requires alpha > 0, delta > -1, n >= 1, got ({alpha}, {delta}, {n})"
        )));
    }
    if delta >= 0.0 {
        let left = pochhammer_over_factorial(-delta, n);
        let right = -pochhammer_over_factorial(1.0 - delta, n - 1);
        Ok(RemainderCoefficients {
            order: n,
            delta,
            lower: left.min(right),
            upper: Some(left.max(right)),
            substitute: None,
            abs_coeff: left.abs().max(right.abs()),
        })
    } else {
        let lower = pochhammer_over_factorial(-delta, n);
        let substitute = pochhammer_over_factorial(-delta, n - 1)
            * ((alpha + n as f64) / (delta + 1.0) - (alpha + delta + 1.0) / n as f64);
        Ok(RemainderCoefficients {
            order: n,
            delta,
            lower,
            upper: None,
            substitute: Some(substitute),
            abs_coeff: substitute,
        })
    }
}

/// Numeric remainder factor via its integral representation
/// `rho_n(delta, t) = ((−delta)_n/(n−1)!) ∫₀¹ (1−u)^(n−1) (1−tu)^(delta−n) du`,
/// evaluated by the quadrature oracle to relative accuracy about 1e−10.
/// Test oracle only; never used inside the bound computations.
pub fn rho_numeric(delta: f64, n: u32, t: f64) -> Result<f64> {
    if n == 0 || !(0.0..1.0).contains(&t) {
        return Err(Error::Domain(format!(
            "rho_numeric requires n >= 1 and t in [0, 1), got ({n}, {t})"
        )));
    }
    let prefactor_num = pochhammer(-delta, n);
    if prefactor_num == 0.0 {
        return Ok(0.0);
    }
    let mut factorial = 1.0;
    for j in 1..n {
        factorial *= j as f64;
    }
    let exponent = delta - n as f64;
    let integrand = move |_u: f64, one_minus_u: f64| {
        // 1 - t u = (1 - t) + t (1 - u), computed without cancellation
        let base = (1.0 - t) + t * one_minus_u;
        one_minus_u.powi(n as i32 - 1) * base.powf(exponent)
    };
    let quad = tanh_sinh_unit(integrand, 1e-11)?;
    Ok(prefactor_num / factorial * quad.value)
}

/// Predicted leading value of the absolute-error coefficient for large n:
/// `1/(|delta Gamma(−delta)| n^delta)` for noninteger delta > 0,
/// `1/((1+delta) Gamma(−delta) n^delta)` for delta in (−1, 0).
pub fn coefficient_asymptote(_alpha: f64, delta: f64, n: u32) -> Result<f64> {
    if delta >= 0.0 && delta == delta.floor() {
        return Err(Error::Domain(format!(
            "coefficient asymptote undefined for integer delta = {delta}"
        )));
    }
    if !(delta > -1.0) || n == 0 {
        return Err(Error::Domain(format!(
            "coefficient_asymptote requires delta > -1 and n >= 1, got ({delta}, {n})"
        )));
    }
    let g = gamma_complete(-delta)?;
    let nf = n as f64;
    if delta > 0.0 {
        Ok(1.0 / ((delta * g).abs() * nf.powf(delta)))
    } else {
        Ok(1.0 / ((1.0 + delta) * g * nf.powf(delta)))
    }
}
