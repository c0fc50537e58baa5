//! Classical-function kernel: complete Gamma, Pochhammer symbols and their
//! signs, falling factorials, Beta, and the Taylor remainder weights for
//! `e^(−s)`.

use crate::{Error, Result};

/// Sign of a real quantity, with sign(0) = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: f64) -> Sign {
        if value > 0.0 {
            Sign::Positive
        } else if value < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Negative => -1.0,
            Sign::Zero => 0.0,
            Sign::Positive => 1.0,
        }
    }
}

// Lanczos coefficients for g = 7, n = 9 (as used by the GNU Scientific
// Library); relative accuracy is a few units in the 15th digit.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.9999999999998099,
    676.5203681218851,
    -1259.1392167224028,
    771.3234287776531,
    -176.6150291621406,
    12.507343278686905,
    -0.1385710952657201,
    9.984369578019572e-6,
    1.505632735149312e-7,
];

/// Complete Gamma function on the reals, excluding the nonpositive integers.
///
/// Lanczos approximation for nu >= 1/2, reflection formula below; satisfies
/// the recursion Gamma(nu + 1) = nu * Gamma(nu) to working precision.
pub fn gamma_complete(nu: f64) -> Result<f64> {
    if nu <= 0.0 && nu == nu.floor() {
        return Err(Error::Pole(nu));
    }
    Ok(lanczos(nu))
}

fn lanczos(nu: f64) -> f64 {
    use std::f64::consts::PI;
    if nu < 0.5 {
        // reflection: Gamma(nu) Gamma(1 - nu) = pi / sin(pi nu)
        PI / ((PI * nu).sin() * lanczos(1.0 - nu))
    } else {
        let z = nu - 1.0;
        let mut acc = LANCZOS_COEFFS[0];
        for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let w = z + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * w.powf(z + 0.5) * (-w).exp() * acc
    }
}

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k−1), with (a)_0 = 1.
///
/// Iterated product, never a ratio of Gammas: exact zeros for a a
/// nonpositive integer with k >= 1 − a, and exact signs throughout.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= a + j as f64;
    }
    acc
}

/// Sign of (−delta)_k for delta > −1, from the closed sign tables.
///
/// Agrees with `Sign::of(pochhammer(-delta, k))` everywhere.
pub fn pochhammer_sign(delta: f64, k: u32) -> Sign {
    if k == 0 {
        return Sign::Positive;
    }
    if delta < 0.0 {
        return Sign::Positive;
    }
    let floor = delta.floor();
    let is_integer = delta == floor;
    let parity = |e: i64| if e % 2 == 0 { Sign::Positive } else { Sign::Negative };
    if is_integer {
        let d = floor as i64;
        if (k as i64) <= d {
            parity(k as i64)
        } else {
            Sign::Zero
        }
    } else if (k as i64) <= floor as i64 {
        parity(k as i64)
    } else {
        parity(floor as i64 + 1)
    }
}

/// Falling factorial mu (mu−1) ... (mu−h+1), with the empty product = 1.
pub fn falling_factorial(mu: f64, h: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..h {
        acc *= mu - j as f64;
    }
    acc
}

/// max(x, 0)
pub fn positive_part(x: f64) -> f64 {
    x.max(0.0)
}

/// min(x, 0)
pub fn negative_part(x: f64) -> f64 {
    x.min(0.0)
}

/// Beta function B(mu, nu) = Gamma(mu) Gamma(nu) / Gamma(mu + nu) for
/// mu, nu > 0.
pub fn beta(mu: f64, nu: f64) -> Result<f64> {
    if mu <= 0.0 || nu <= 0.0 {
        return Err(Error::Domain(format!(
            "beta requires positive arguments, got ({mu}, {nu})"
        )));
    }
    Ok(gamma_complete(mu)? * gamma_complete(nu)? / gamma_complete(mu + nu)?)
}

/// Remainder weights for the order-m Taylor expansion of `e^(−s)` on `[0, x]`:
/// `u = min((−1)^m, (−1)^m e^(−x))`, `U = max((−1)^m, (−1)^m e^(−x))`,
/// so that `u/m! * s^m <= (remainder term) <= U/m! * s^m` for every s in
/// `[0, x]`. Always `u <= U`.
pub fn taylor_weights(m: u32, x: f64) -> (f64, f64) {
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let a = sign;
    let b = sign * (-x).exp();
    (a.min(b), a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel_err(got: f64, want: f64) -> f64 {
        (got - want).abs() / want.abs().max(1e-300)
    }

    #[test]
    fn gamma_at_one() {
        assert!(rel_err(gamma_complete(1.0).unwrap(), 1.0) < 1e-15);
    }

    #[test]
    fn gamma_at_half_is_sqrt_pi() {
        assert!(rel_err(gamma_complete(0.5).unwrap(), PI.sqrt()) < 1e-13);
    }

    #[test]
    fn gamma_nine_halves() {
        // four applications of the recursion from Gamma(1/2)
        let want = 105.0 / 16.0 * PI.sqrt();
        assert!(rel_err(gamma_complete(4.5).unwrap(), want) < 1e-13);
    }

    #[test]
    fn gamma_recursion_grid() {
        let mut nu = 0.1;
        while nu < 30.0 {
            let g = gamma_complete(nu).unwrap();
            let g1 = gamma_complete(nu + 1.0).unwrap();
            assert!(
                (g1 - nu * g).abs() <= 1e-12 * g1.abs(),
                "recursion fails at nu = {nu}"
            );
            nu += 0.193;
        }
    }

    #[test]
    fn gamma_negative_noninteger() {
        // Gamma(-1/2) = -2 sqrt(pi)
        assert!(rel_err(gamma_complete(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-12);
    }

    #[test]
    fn gamma_pole_errors() {
        assert!(matches!(gamma_complete(0.0), Err(Error::Pole(_))));
        assert!(matches!(gamma_complete(-3.0), Err(Error::Pole(_))));
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(17.3, 0), 1.0);
        assert_eq!(pochhammer(-1.5, 2), 0.75); // (-3/2)(-1/2)
        assert_eq!(pochhammer(-2.0, 3), 0.0); // factor a+2 vanishes
    }

    #[test]
    fn pochhammer_sign_table_cases() {
        assert_eq!(pochhammer_sign(1.5, 1), Sign::Negative);
        for k in 0..20 {
            assert_eq!(pochhammer_sign(-0.5, k), Sign::Positive);
        }
        assert_eq!(pochhammer_sign(2.0, 4), Sign::Zero);
    }

    #[test]
    fn pochhammer_sign_matches_product() {
        let mut delta = -0.95f64;
        while delta <= 10.0 {
            for k in 0..=50 {
                // snap near-integer grid points to exact integers
                let d = if (delta - delta.round()).abs() < 1e-12 {
                    delta.round()
                } else {
                    delta
                };
                assert_eq!(
                    pochhammer_sign(d, k),
                    Sign::of(pochhammer(-d, k)),
                    "delta = {d}, k = {k}"
                );
            }
            delta += 0.35;
        }
    }

    #[test]
    fn pochhammer_gamma_ratio_identity() {
        let mut alpha = 0.3;
        while alpha <= 10.0 {
            for k in 0..=20u32 {
                let lhs = pochhammer(alpha, k);
                let rhs =
                    gamma_complete(alpha + k as f64).unwrap() / gamma_complete(alpha).unwrap();
                assert!(rel_err(lhs, rhs) < 1e-11, "alpha = {alpha}, k = {k}");
            }
            alpha += 0.77;
        }
    }

    #[test]
    fn pochhammer_asymptotics() {
        // (alpha)_k ~ k! k^(alpha-1) / Gamma(alpha)
        for alpha in [0.5, 1.5, 3.0] {
            let k = 10_000u32;
            // ratio of (alpha)_k / k! accumulated incrementally
            let mut ratio = 1.0;
            for j in 0..k {
                ratio *= (alpha + j as f64) / (1.0 + j as f64);
            }
            let predicted = (k as f64).powf(alpha - 1.0) / gamma_complete(alpha).unwrap();
            assert!(
                (ratio / predicted - 1.0).abs() < 0.02,
                "alpha = {alpha}: ratio {ratio} vs {predicted}"
            );
        }
    }

    #[test]
    fn falling_factorial_cases() {
        assert_eq!(falling_factorial(3.21, 0), 1.0);
        assert_eq!(falling_factorial(-0.5, 1), -0.5);
        assert_eq!(falling_factorial(-0.5, 2), 0.75); // (-1/2)(-3/2)
    }

    #[test]
    fn beta_values() {
        assert!(rel_err(beta(1.0, 1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel_err(beta(2.0, 2.5).unwrap(), 4.0 / 35.0) < 1e-13);
        assert!(rel_err(beta(0.5, 2.5).unwrap(), 3.0 * PI / 8.0) < 1e-13);
    }

    #[test]
    fn beta_domain() {
        assert!(beta(-1.0, 2.0).is_err());
        assert!(beta(1.0, 0.0).is_err());
    }

    #[test]
    fn taylor_weight_cases() {
        let (u, big_u) = taylor_weights(2, 1.0);
        assert_eq!(u, (-1.0f64).exp());
        assert_eq!(big_u, 1.0);

        let (u, big_u) = taylor_weights(1, 0.0);
        assert_eq!((u, big_u), (-1.0, -1.0));

        // the min/max definitions, not the printed case table: u stays -1
        let (u, big_u) = taylor_weights(1, 2.0);
        assert_eq!(u, -1.0);
        assert_eq!(big_u, -(-2.0f64).exp());
    }

    #[test]
    fn taylor_weights_sandwich() {
        // u <= (-1)^m e^(-c) <= U for every c in [0, x]
        for m in 1..=6u32 {
            for x in [0.0, 0.3, 1.0, 4.0] {
                let (u, big_u) = taylor_weights(m, x);
                assert!(u <= big_u);
                let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
                let mut c = 0.0;
                while c <= x {
                    let v = sign * (-c).exp();
                    assert!(u <= v && v <= big_u, "m = {m}, x = {x}, c = {c}");
                    c += x / 7.0 + 1e-9;
                }
            }
        }
    }

    #[test]
    fn pochhammer_shift_identities() {
        // (a)_{k+1} = (a)_k (a+k) = a (a+1)_k
        for a in [-2.5, -1.0, 0.3, 4.7] {
            for k in 0..=12u32 {
                let lhs = pochhammer(a, k + 1);
                let r1 = pochhammer(a, k) * (a + k as f64);
                let r2 = a * pochhammer(a + 1.0, k);
                let scale = lhs.abs().max(1.0);
                assert!((lhs - r1).abs() <= 4.0 * f64::EPSILON * scale);
                assert!((lhs - r2).abs() <= 4.0 * f64::EPSILON * scale);
            }
        }
    }

    #[test]
    fn pochhammer_sum_identity() {
        // sum_{k=0}^{m} (a)_k / k! = (a+1)_m / m!
        let mut a = -5.0;
        while a <= 5.0 {
            for m in 0..=30u32 {
                let mut sum = 0.0;
                let mut term = 1.0; // (a)_k / k!
                for k in 0..=m {
                    sum += term;
                    term *= (a + k as f64) / (k as f64 + 1.0);
                }
                let mut rhs = 1.0;
                for k in 0..m {
                    rhs *= (a + 1.0 + k as f64) / (k as f64 + 1.0);
                }
                assert!(
                    (sum - rhs).abs() <= 1e-12 * rhs.abs().max(1.0),
                    "a = {a}, m = {m}: {sum} vs {rhs}"
                );
            }
            a += 0.625;
        }
    }
}
