//! Lower incomplete Gamma `gamma(nu, x) = ∫₀ˣ s^(nu−1) e^(−s) ds`:
//! elementary closed forms for integer order, the Taylor / Laurent / Padé
//! enclosure families, order reduction by the recursion
//! `gamma(nu, x) = (nu−1) gamma(nu−1, x) − x^(nu−1) e^(−x)`,
//! and the cancellation-safe scaled form `gamma(nu, x) / x^nu`.

use crate::enclosure::Enclosure;
use crate::special::{falling_factorial, gamma_complete, negative_part, positive_part, taylor_weights};
use crate::{Error, Result};

/// Selects how an incomplete-Gamma enclosure is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaEnclosureMethod {
    /// Exact closed form; integer order only.
    Elementary,
    /// Taylor bounds of order m (small x).
    Taylor(u32),
    /// Laurent bounds of order q (large x), via order reduction for nu > 1.
    Laurent(u32),
    /// Padé bounds of order q <= 2, via order reduction for nu > 1.
    Pade(u32),
    /// Pointwise best of Taylor(m) and Pade(q).
    Matched(u32, u32),
}

/// Exact `gamma(k, x)` for integer k >= 1, by repeated recursion from
/// `gamma(1, x) = 1 − e^(−x)`; the closed polynomial-times-exponential
/// form evaluated in float.
pub fn gamma_elementary(k: u32, x: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("gamma_elementary requires k >= 1".into()));
    }
    let emx = (-x).exp();
    let mut value = 1.0 - emx;
    let mut xpow = 1.0; // x^(j) while computing gamma(j+1, x)
    for j in 1..k {
        xpow *= x;
        value = j as f64 * value - xpow * emx;
    }
    Ok(value)
}

/// `gamma(nu, x) / x^nu`, extended by its limit `1/nu` at x = 0.
///
/// Alternating series for `0 < x <= nu + 1`, complete Gamma minus the
/// continued-fraction tail above; relative accuracy around 1e−12.
pub fn scaled_gamma(nu: f64, x: f64) -> Result<f64> {
    if nu <= 0.0 {
        return Err(Error::Domain(format!("scaled_gamma requires nu > 0, got {nu}")));
    }
    if x < 0.0 {
        return Err(Error::Domain(format!("scaled_gamma requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(1.0 / nu);
    }
    if x <= nu + 1.0 {
        Ok(scaled_series(nu, x))
    } else {
        // gamma(nu,x)/x^nu = Gamma(nu) x^(-nu) - e^(-x) * tail, where the
        // upper incomplete Gamma is x^nu e^(-x) * tail (Lentz's method).
        let tail = upper_tail_cf(nu, x);
        Ok(gamma_complete(nu)? * (-nu * x.ln()).exp() - (-x).exp() * tail)
    }
}

// sum_j (-1)^j x^j / (j! (nu+j))
fn scaled_series(nu: f64, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut coeff = 1.0; // (-x)^j / j!
    let mut j = 0u32;
    loop {
        let term = coeff / (nu + j as f64);
        sum += term;
        coeff *= -x / (j as f64 + 1.0);
        j += 1;
        if j as f64 > x && term.abs() < 1e-17 * sum.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if j > 500 {
            break;
        }
    }
    sum
}

// Continued fraction for Gamma(nu, x) / (x^nu e^(-x)), valid for x > nu + 1.
fn upper_tail_cf(nu: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - nu;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=300 {
        let a = -(i as f64) * (i as f64 - nu);
        b += 2.0;
        d = a * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

/// Taylor enclosure `[tau_m, T_m]` of `gamma(nu, x)`, valid for every
/// nu > 0, x >= 0, m >= 1.
pub fn taylor_enclosure_gamma(nu: f64, x: f64, m: u32) -> Result<Enclosure> {
    if nu <= 0.0 || x < 0.0 || m == 0 {
        return Err(Error::Domain(format!(
            "taylor_enclosure_gamma requires nu > 0, x >= 0, m >= 1, got ({nu}, {x}, {m})"
        )));
    }
    let mut partial = 0.0;
    let mut coeff = 1.0; // (-1)^j x^(nu+j) / j!
    let xnu = x.powf(nu);
    for j in 0..m {
        partial += coeff * xnu / (nu + j as f64);
        coeff *= -x / (j as f64 + 1.0);
    }
    // after the loop coeff = (-1)^m x^m / m!, missing the sign flip's match
    // with u_m/U_m which already carry (-1)^m
    let last = coeff.abs() * xnu / (nu + m as f64);
    let (u, big_u) = taylor_weights(m, x);
    Enclosure::new(partial + u * last, partial + big_u * last)
}

/// Laurent enclosure of `gamma(nu, x)` for nu in (0, 1), x > 0.
pub fn laurent_enclosure_gamma(nu: f64, x: f64, q: u32) -> Result<Enclosure> {
    if !(0.0 < nu && nu < 1.0) || x <= 0.0 {
        return Err(Error::Domain(format!(
            "laurent_enclosure_gamma requires nu in (0,1) and x > 0, got ({nu}, {x})"
        )));
    }
    let mut partial = 0.0;
    for k in 0..q {
        partial += falling_factorial(nu - 1.0, k) / x.powi(k as i32);
    }
    let tail = falling_factorial(nu - 1.0, q) / x.powi(q as i32);
    let small = partial + negative_part(tail);
    let large = partial + positive_part(tail);
    let prefactor = x.powf(nu - 1.0) * (-x).exp();
    let g = gamma_complete(nu)?;
    Enclosure::new(g - prefactor * large, g - prefactor * small)
}

// Lower/upper Padé factors pi_q, Pi_q for the tail of gamma(nu, x),
// nu in (0, 1), closed forms for q = 0, 1, 2.
fn pade_factors(nu: f64, x: f64, q: u32) -> Result<(f64, f64)> {
    match q {
        0 => Ok((0.0, 1.0)),
        1 => Ok((x / (x + 1.0 - nu), (x + 1.0) / (x + 2.0 - nu))),
        2 => {
            let lo = x * (x + 3.0 - nu) / (x * x + 2.0 * (2.0 - nu) * x + (1.0 - nu) * (2.0 - nu));
            let hi = (x * x + (5.0 - nu) * x + 2.0)
                / (x * x + 2.0 * (3.0 - nu) * x + (2.0 - nu) * (3.0 - nu));
            Ok((lo, hi))
        }
        _ => Err(Error::UnsupportedOrder(q)),
    }
}

/// Padé enclosure of `gamma(nu, x)` for nu in (0, 1), x > 0, q in {0, 1, 2}.
pub fn pade_enclosure_gamma(nu: f64, x: f64, q: u32) -> Result<Enclosure> {
    if !(0.0 < nu && nu < 1.0) || x <= 0.0 {
        return Err(Error::Domain(format!(
            "pade_enclosure_gamma requires nu in (0,1) and x > 0, got ({nu}, {x})"
        )));
    }
    let (pi_lo, pi_hi) = pade_factors(nu, x, q)?;
    let prefactor = x.powf(nu - 1.0) * (-x).exp();
    let g = gamma_complete(nu)?;
    Enclosure::new(g - prefactor * pi_hi, g - prefactor * pi_lo)
}

// One upward recursion step: an enclosure of gamma(nu-1, x) maps to one of
// gamma(nu, x); ordering is preserved since the multiplier nu-1 > 0.
fn recursion_step(enc: Enclosure, nu: f64, x: f64) -> Enclosure {
    let term = if x > 0.0 {
        ((nu - 1.0) * x.ln() - x).exp()
    } else {
        0.0
    };
    enc.scale_shift(nu - 1.0, -term)
}

// Propagate an enclosure of gamma(nu0, x) up to gamma(nu0 + steps, x).
fn propagate_up(mut enc: Enclosure, nu0: f64, steps: u32, x: f64) -> Enclosure {
    for i in 0..steps {
        enc = recursion_step(enc, nu0 + (i + 1) as f64, x);
    }
    enc
}

/// Matched enclosure of `gamma(nu, x)`: exact for integer nu; otherwise
/// the pointwise best of the Taylor(m) and Padé(q) bounds, built at the
/// fractional part of nu and propagated upward by the recursion. At x = 0
/// the Padé family is skipped and the enclosure is exactly `[0, 0]`.
pub fn matched_enclosure_gamma(nu: f64, x: f64, m: u32, q: u32) -> Result<Enclosure> {
    if nu <= 0.0 || x < 0.0 || m == 0 {
        return Err(Error::Domain(format!(
            "matched_enclosure_gamma requires nu > 0, x >= 0, m >= 1, got ({nu}, {x}, {m})"
        )));
    }
    if nu == nu.floor() {
        return Ok(Enclosure::exact(gamma_elementary(nu as u32, x)?));
    }
    if x == 0.0 {
        return Ok(Enclosure::exact(0.0));
    }
    let nu0 = nu.fract();
    let steps = nu.floor() as u32;
    let taylor = taylor_enclosure_gamma(nu0, x, m)?;
    let pade = pade_enclosure_gamma(nu0, x, q)?;
    let matched = taylor.intersect(&pade)?;
    Ok(propagate_up(matched, nu0, steps, x))
}

/// Enclosure of `gamma(nu, x)` by the requested method, with order
/// reduction to (0, 1) for the Laurent and Padé families.
pub fn gamma_enclosure(method: GammaEnclosureMethod, nu: f64, x: f64) -> Result<Enclosure> {
    if nu <= 0.0 || x < 0.0 {
        return Err(Error::Domain(format!(
            "gamma_enclosure requires nu > 0 and x >= 0, got ({nu}, {x})"
        )));
    }
    if nu == nu.floor() {
        return Ok(Enclosure::exact(gamma_elementary(nu as u32, x)?));
    }
    match method {
        GammaEnclosureMethod::Elementary => Err(Error::Domain(format!(
            "elementary evaluation requires integer nu, got {nu}"
        ))),
        GammaEnclosureMethod::Taylor(m) => taylor_enclosure_gamma(nu, x, m),
        GammaEnclosureMethod::Laurent(q) => {
            let nu0 = nu.fract();
            let base = laurent_enclosure_gamma(nu0, x, q)?;
            Ok(propagate_up(base, nu0, nu.floor() as u32, x))
        }
        GammaEnclosureMethod::Pade(q) => {
            if x == 0.0 {
                return Ok(Enclosure::exact(0.0));
            }
            let nu0 = nu.fract();
            let base = pade_enclosure_gamma(nu0, x, q)?;
            Ok(propagate_up(base, nu0, nu.floor() as u32, x))
        }
        GammaEnclosureMethod::Matched(m, q) => matched_enclosure_gamma(nu, x, m, q),
    }
}
