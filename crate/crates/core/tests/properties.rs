//! Randomized invariants: every enclosure must contain the independent
//! oracle value, matched enclosures must tighten their ingredients, and
//! the analytic error bounds must sandwich the observed truncation error.

use kummer_bounds::incgamma::{
    matched_enclosure_gamma, pade_enclosure_gamma, taylor_enclosure_gamma,
};
use kummer_bounds::kummer::{
    beta_enclosure, error_bounds, expansion_enclosure, gamma_partial_sum, matched_enclosure_n,
    standard_m_enclosure, taylor_enclosure_n,
};
use kummer_bounds::oracle::{gamma_reference, n_reference};
use kummer_bounds::special::beta;
use kummer_bounds::{KummerParams, StandardParams};
use proptest::prelude::*;

const ORACLE_TOL: f64 = 1e-12;

fn slack_for(value: f64) -> f64 {
    1e-9 * value.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn expansion_contains_oracle(
        alpha in 0.1f64..8.0,
        delta in -0.95f64..8.0,
        n in 1u32..10,
        x in 0.0f64..8.0,
    ) {
        let p = KummerParams::new(alpha, delta).unwrap();
        let reference = n_reference(p, x, ORACLE_TOL).unwrap().value;
        let enc = expansion_enclosure(p, n, x).unwrap();
        prop_assert!(enc.contains_with_slack(reference, slack_for(reference)));
    }

    #[test]
    fn taylor_contains_oracle(
        alpha in 0.1f64..8.0,
        delta in -0.95f64..8.0,
        m in 1u32..8,
        x in 0.0f64..8.0,
    ) {
        let p = KummerParams::new(alpha, delta).unwrap();
        let reference = n_reference(p, x, ORACLE_TOL).unwrap().value;
        let enc = taylor_enclosure_n(p, m, x).unwrap();
        prop_assert!(enc.contains_with_slack(reference, slack_for(reference)));
    }

    #[test]
    fn matched_tightens_both_families(
        alpha in 0.1f64..8.0,
        delta in -0.95f64..8.0,
        n in 1u32..10,
        m in 1u32..8,
        x in 0.0f64..8.0,
    ) {
        let p = KummerParams::new(alpha, delta).unwrap();
        let expansion = expansion_enclosure(p, n, x).unwrap();
        let taylor = taylor_enclosure_n(p, m, x).unwrap();
        let matched = matched_enclosure_n(p, n, m, x).unwrap();
        prop_assert!(matched.width() <= expansion.width() + 1e-12 * expansion.width().abs());
        prop_assert!(matched.width() <= taylor.width() + 1e-12 * taylor.width().abs());
        let reference = n_reference(p, x, ORACLE_TOL).unwrap().value;
        prop_assert!(matched.contains_with_slack(reference, slack_for(reference)));
    }

    #[test]
    fn error_sandwich_holds(
        alpha in 0.1f64..8.0,
        delta in -0.95f64..8.0,
        n in 1u32..10,
        x in 0.0f64..8.0,
    ) {
        let p = KummerParams::new(alpha, delta).unwrap();
        let reference = n_reference(p, x, ORACLE_TOL).unwrap().value;
        let eps = reference - gamma_partial_sum(p, n, x).unwrap();
        let bounds = error_bounds(p, n, x).unwrap();
        let slack = slack_for(reference);
        prop_assert!(bounds.lower <= bounds.upper + slack);
        prop_assert!(bounds.lower - slack <= eps && eps <= bounds.upper + slack);
        prop_assert!(eps.abs() <= bounds.abs_bound + slack);
    }

    #[test]
    fn gamma_enclosures_contain_reference(
        nu in 0.05f64..8.0,
        x in 0.0f64..20.0,
        m in 1u32..8,
        q in 0u32..3,
    ) {
        let reference = gamma_reference(nu, x, ORACLE_TOL).unwrap().value;
        let slack = slack_for(reference);
        let taylor = taylor_enclosure_gamma(nu, x, m).unwrap();
        prop_assert!(taylor.contains_with_slack(reference, slack));
        let matched = matched_enclosure_gamma(nu, x, m, q).unwrap();
        prop_assert!(matched.contains_with_slack(reference, slack));
        if nu < 1.0 && x > 0.0 {
            let pade = pade_enclosure_gamma(nu, x, q).unwrap();
            prop_assert!(pade.contains_with_slack(reference, slack));
        }
    }

    #[test]
    fn beta_enclosure_contains_beta(
        alpha in 0.1f64..8.0,
        delta in -0.95f64..8.0,
        n in 1u32..12,
    ) {
        let p = KummerParams::new(alpha, delta).unwrap();
        let value = beta(alpha, delta + 1.0).unwrap();
        let enc = beta_enclosure(p, n).unwrap();
        prop_assert!(enc.contains_with_slack(value, 1e-12 * value.abs().max(1.0)));
    }

    #[test]
    fn standard_m_contains_integral(
        alpha in 0.1f64..4.0,
        gap in 0.1f64..4.0,
        x in -6.0f64..6.0,
    ) {
        let s = StandardParams::new(alpha, alpha + gap).unwrap();
        // reference straight from the defining Euler integral of M,
        // independent of the axis conversion used by the enclosure
        let b = beta(alpha, gap).unwrap();
        let reference = kummer_bounds::oracle::tanh_sinh_unit(
            |t, one_minus_t| {
                t.powf(alpha - 1.0) * one_minus_t.powf(gap - 1.0) * (x * t).exp()
            },
            ORACLE_TOL,
        )
        .unwrap()
        .value
            / b;
        let enc = standard_m_enclosure(s, x, 6, 6).unwrap();
        prop_assert!(enc.contains_with_slack(reference, 1e-8 * reference.abs().max(1.0)));
    }
}
