//! Enclosures of the reparametrized Kummer function
//! `N(alpha, delta, x) = ∫₀¹ t^(alpha−1) (1−t)^delta e^(−xt) dt`
//! by finite sums of incomplete Gammas, Taylor enclosures, matched and
//! fully elementary enclosures, error estimators, uniform-norm bounds,
//! Beta enclosures, and conversion to the standard Kummer function M.

use crate::enclosure::Enclosure;
use crate::incgamma::{matched_enclosure_gamma, scaled_gamma};
use crate::remainder::bound_coefficients;
use crate::special::{beta, gamma_complete, taylor_weights};
use crate::{Error, Result};

/// Parameters (alpha, delta) of the reparametrized function N, with
/// alpha > 0 and delta > −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    alpha: f64,
    delta: f64,
}

impl KummerParams {
    pub fn new(alpha: f64, delta: f64) -> Result<KummerParams> {
        if !(alpha > 0.0) || !(delta > -1.0) {
            return Err(Error::Domain(format!(
                "KummerParams requires alpha > 0 and delta > -1, got ({alpha}, {delta})"
            )));
        }
        Ok(KummerParams { alpha, delta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// Parameters (alpha, beta) of the standard Kummer function M, with
/// beta > alpha > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardParams {
    alpha: f64,
    beta: f64,
}

impl StandardParams {
    pub fn new(alpha: f64, beta: f64) -> Result<StandardParams> {
        if !(alpha > 0.0) || !(beta > alpha) {
            return Err(Error::Domain(format!(
                "StandardParams requires beta > alpha > 0, got ({alpha}, {beta})"
            )));
        }
        Ok(StandardParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// N-parameters for M(alpha, beta, −x) with x >= 0: (alpha, beta−alpha−1).
    pub fn negative_axis_params(&self) -> KummerParams {
        KummerParams {
            alpha: self.alpha,
            delta: self.beta - self.alpha - 1.0,
        }
    }

    /// N-parameters for M(alpha, beta, x) with x >= 0: (beta−alpha, alpha−1).
    pub fn positive_axis_params(&self) -> KummerParams {
        KummerParams {
            alpha: self.beta - self.alpha,
            delta: self.alpha - 1.0,
        }
    }
}

/// Signed and absolute analytic bounds on the truncation error of the
/// n-term Gamma expansion: `lower <= error <= upper` and
/// `|error| <= abs_bound`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorEstimate {
    pub lower: f64,
    pub upper: f64,
    pub abs_bound: f64,
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("expansion order must be >= 1".into()));
    }
    Ok(())
}

fn check_x(x: f64) -> Result<()> {
    if x < 0.0 {
        return Err(Error::Domain(format!("x must be >= 0, got {x}")));
    }
    Ok(())
}

/// Partial sum of the Gamma expansion:
/// `sum_{k=0}^{n-1} ((−delta)_k / k!) * gamma(alpha+k, x) / x^(alpha+k)`.
pub fn gamma_partial_sum(p: KummerParams, n: u32, x: f64) -> Result<f64> {
    check_order(n)?;
    check_x(x)?;
    let mut sum = 0.0;
    let mut coeff = 1.0; // (-delta)_k / k!
    for k in 0..n {
        sum += coeff * scaled_gamma(p.alpha + k as f64, x)?;
        coeff *= (-p.delta + k as f64) / (k as f64 + 1.0);
    }
    Ok(sum)
}

/// Enclosure `[g_n, G_n]` of N by n incomplete Gammas; the upper bound
/// uses the remainder supremum for delta >= 0 and the substitute
/// coefficient for delta in (−1, 0).
pub fn expansion_enclosure(p: KummerParams, n: u32, x: f64) -> Result<Enclosure> {
    check_order(n)?;
    check_x(x)?;
    let partial = gamma_partial_sum(p, n, x)?;
    let coeffs = bound_coefficients(p.alpha, p.delta, n)?;
    let tail = scaled_gamma(p.alpha + n as f64, x)?;
    Enclosure::new(
        partial + coeffs.lower * tail,
        partial + coeffs.effective_upper() * tail,
    )
}

/// Taylor enclosure `[t_m, T_m]` of N, from the Beta-coefficient power
/// series with the remainder weights of `e^(−s)`.
pub fn taylor_enclosure_n(p: KummerParams, m: u32, x: f64) -> Result<Enclosure> {
    check_order(m)?;
    check_x(x)?;
    let mut partial = 0.0;
    let mut coeff = 1.0; // (-1)^k x^k / k!
    for k in 0..m {
        partial += coeff * beta(p.alpha + k as f64, p.delta + 1.0)?;
        coeff *= -x / (k as f64 + 1.0);
    }
    let last = coeff.abs() * beta(p.alpha + m as f64, p.delta + 1.0)?;
    let (u, big_u) = taylor_weights(m, x);
    Enclosure::new(partial + u * last, partial + big_u * last)
}

/// Pointwise best of the Taylor(m) and Gamma-expansion(n) enclosures.
pub fn matched_enclosure_n(p: KummerParams, n: u32, m: u32, x: f64) -> Result<Enclosure> {
    let expansion = expansion_enclosure(p, n, x)?;
    let taylor = taylor_enclosure_n(p, m, x)?;
    expansion.intersect(&taylor)
}

/// Enclosure of N using only exponentials, real powers and rationals:
/// each scaled Gamma in `[g_n, G_n]` is replaced by its matched elementary
/// enclosure (Taylor order `gamma_m`, Padé order `gamma_q`), picking the
/// Gamma lower or upper bound according to the sign of its coefficient.
pub fn elementary_enclosure_n(
    p: KummerParams,
    n: u32,
    gamma_m: u32,
    gamma_q: u32,
    x: f64,
) -> Result<Enclosure> {
    check_order(n)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!(
            "elementary_enclosure_n requires x > 0, got {x}"
        )));
    }
    let coeffs = bound_coefficients(p.alpha, p.delta, n)?;
    let mut lo = 0.0;
    let mut hi = 0.0;
    let mut coeff = 1.0; // (-delta)_k / k!
    for k in 0..=n {
        let nu = p.alpha + k as f64;
        let enc = matched_enclosure_gamma(nu, x, gamma_m, gamma_q)?;
        let scale = (-nu * x.ln()).exp();
        let (slo, shi) = (enc.lo() * scale, enc.hi() * scale);
        let (c_lo, c_hi) = if k == n {
            (coeffs.lower, coeffs.effective_upper())
        } else {
            (coeff, coeff)
        };
        lo += if c_lo >= 0.0 { c_lo * slo } else { c_lo * shi };
        hi += if c_hi >= 0.0 { c_hi * shi } else { c_hi * slo };
        coeff *= (-p.delta + k as f64) / (k as f64 + 1.0);
    }
    Enclosure::new(lo, hi)
}

/// Signed error bounds `e_n <= epsilon_n <= E_n` and the absolute bound
/// `|epsilon_n| <= abs_bound` for the n-term Gamma expansion.
pub fn error_bounds(p: KummerParams, n: u32, x: f64) -> Result<ErrorEstimate> {
    check_order(n)?;
    check_x(x)?;
    let coeffs = bound_coefficients(p.alpha, p.delta, n)?;
    let tail = scaled_gamma(p.alpha + n as f64, x)?;
    Ok(ErrorEstimate {
        lower: coeffs.lower * tail,
        upper: coeffs.effective_upper() * tail,
        abs_bound: coeffs.abs_coeff * tail,
    })
}

/// Relative uncertainty `(G_n − g_n) / |G_n + g_n|` of the expansion
/// enclosure; returns an infinity sentinel for a degenerate denominator.
pub fn relative_uncertainty(p: KummerParams, n: u32, x: f64) -> Result<f64> {
    Ok(expansion_enclosure(p, n, x)?.relative_uncertainty())
}

/// Uniform bound on `sup_x x^sigma |epsilon_n(x)|` for sigma in [0, alpha]:
/// `X_n * sigma^sigma e^(−sigma) / (alpha − sigma + n)`, with
/// `sigma^sigma := 1` at sigma = 0.
pub fn sup_norm_error_bound(p: KummerParams, sigma: f64, n: u32) -> Result<f64> {
    check_order(n)?;
    if !(0.0 <= sigma && sigma <= p.alpha) {
        return Err(Error::Domain(format!(
            "sigma must lie in [0, alpha] = [0, {}], got {sigma}",
            p.alpha
        )));
    }
    let coeffs = bound_coefficients(p.alpha, p.delta, n)?;
    let weight = if sigma == 0.0 {
        1.0
    } else {
        sigma.powf(sigma) * (-sigma).exp()
    };
    Ok(coeffs.abs_coeff * weight / (p.alpha - sigma + n as f64))
}

/// Enclosure of the standard Kummer function M(alpha, beta, x) for real x
/// of either sign, via the matched enclosure of N on the nonnegative axis.
pub fn standard_m_enclosure(s: StandardParams, x: f64, n: u32, m: u32) -> Result<Enclosure> {
    let b = beta(s.alpha, s.beta - s.alpha)?;
    if x <= 0.0 {
        let enc = matched_enclosure_n(s.negative_axis_params(), n, m, -x)?;
        Ok(enc.scale_shift(1.0 / b, 0.0))
    } else {
        let enc = matched_enclosure_n(s.positive_axis_params(), n, m, x)?;
        Ok(enc.scale_shift(x.exp() / b, 0.0))
    }
}

/// Enclosure of `B(alpha, delta+1)`: the x = 0 limit of the Gamma
/// expansion bounds, where each scaled Gamma becomes `1/(alpha+k)`.
pub fn beta_enclosure(p: KummerParams, n: u32) -> Result<Enclosure> {
    check_order(n)?;
    let mut sum = 0.0;
    let mut coeff = 1.0;
    for k in 0..n {
        sum += coeff / (p.alpha + k as f64);
        coeff *= (-p.delta + k as f64) / (k as f64 + 1.0);
    }
    let coeffs = bound_coefficients(p.alpha, p.delta, n)?;
    let tail = 1.0 / (p.alpha + n as f64);
    Enclosure::new(
        sum + coeffs.lower * tail,
        sum + coeffs.effective_upper() * tail,
    )
}

/// One power term `coefficient * t^exponent` of a bound on the density of
/// a Watson-type integral; exponent > −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coefficient: f64,
    pub exponent: f64,
}

/// Watson-type bound: if `psi(t) >= (resp. <=) sum_k p_k t^(lambda_k)` on
/// (0, b), then `∫₀ᵇ psi(t) e^(−xt) dt >= (resp. <=)` the value returned
/// here, `sum_k p_k gamma(lambda_k+1, b x) / x^(lambda_k+1)`.
/// `upper = None` means b = +infinity (then x > 0 is required).
pub fn watson_gamma_sum(terms: &[PowerTerm], upper: Option<f64>, x: f64) -> Result<f64> {
    check_x(x)?;
    let mut sum = 0.0;
    for term in terms {
        if term.exponent <= -1.0 {
            return Err(Error::Domain(format!(
                "Watson power terms require exponent > -1, got {}",
                term.exponent
            )));
        }
        let nu = term.exponent + 1.0;
        match upper {
            Some(b) => {
                if !(b > 0.0) {
                    return Err(Error::Domain(format!("upper limit must be > 0, got {b}")));
                }
                // gamma(nu, b x) / x^nu = b^nu * scaled_gamma(nu, b x)
                sum += term.coefficient * b.powf(nu) * scaled_gamma(nu, b * x)?;
            }
            None => {
                if x <= 0.0 {
                    return Err(Error::Domain(
                        "Watson bound with infinite upper limit requires x > 0".into(),
                    ));
                }
                sum += term.coefficient * gamma_complete(nu)? / x.powf(nu);
            }
        }
    }
    Ok(sum)
}
