//! The five table-producing commands. Each returns a fully built table;
//! errors are classified as usage (bad parameters) or numerical
//! (enclosure collapse, oracle tolerance miss).

use crate::table::{Cell, Table};
use kummer_bounds::incgamma::{
    matched_enclosure_gamma, pade_enclosure_gamma, taylor_enclosure_gamma,
};
use kummer_bounds::kummer::{
    elementary_enclosure_n, error_bounds, expansion_enclosure, gamma_partial_sum,
    matched_enclosure_n, sup_norm_error_bound, taylor_enclosure_n,
};
use kummer_bounds::oracle::{gamma_reference, n_reference};
use kummer_bounds::sweep::{argmax_bracket, sign_change, Bracket};
use kummer_bounds::{Error, KummerParams};

const ORACLE_TOL: f64 = 1e-12;

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Numeric(String),
}

impl From<Error> for AppError {
    fn from(e: Error) -> AppError {
        match e {
            Error::Domain(_) | Error::UnsupportedOrder(_) => AppError::Usage(e.to_string()),
            Error::Pole(_) | Error::Collapse { .. } | Error::ToleranceNotMet { .. } => {
                AppError::Numeric(e.to_string())
            }
        }
    }
}

/// Inclusive a:b:c grid; endpoints count when within half a step.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, AppError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(AppError::Usage(format!(
            "grid must be start:stop:step, got '{spec}'"
        )));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| AppError::Usage(format!("invalid grid number '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !(step > 0.0) {
        return Err(AppError::Usage(format!("grid step must be > 0, got {step}")));
    }
    if stop < start {
        return Err(AppError::Usage(format!(
            "grid start {start} exceeds stop {stop}"
        )));
    }
    let count = ((stop - start) / step).round();
    if count > 1e7 {
        return Err(AppError::Usage(format!(
            "grid has {count} steps, limit is 1e7"
        )));
    }
    Ok((0..=count as u64)
        .map(|i| start + i as f64 * step)
        .collect())
}

fn uncertainty_cell(enc: &kummer_bounds::Enclosure) -> Cell {
    Cell::num(enc.relative_uncertainty())
}

pub fn cmd_enclose(
    alpha: f64,
    delta: f64,
    n: u32,
    m: u32,
    grid: &str,
) -> Result<Table, AppError> {
    let p = KummerParams::new(alpha, delta)?;
    let xs = parse_grid(grid)?;
    let mut table = Table::new(vec![
        "x", "g", "G", "t", "T", "j", "J", "oracle", "xi", "eta",
    ]);
    for x in xs {
        let expansion = expansion_enclosure(p, n, x)?;
        let taylor = taylor_enclosure_n(p, m, x)?;
        let matched = matched_enclosure_n(p, n, m, x)?;
        let reference = n_reference(p, x, ORACLE_TOL)?;
        table.push(vec![
            Cell::num(x),
            Cell::num(expansion.lo()),
            Cell::num(expansion.hi()),
            Cell::num(taylor.lo()),
            Cell::num(taylor.hi()),
            Cell::num(matched.lo()),
            Cell::num(matched.hi()),
            Cell::num(reference.value),
            uncertainty_cell(&expansion),
            uncertainty_cell(&matched),
        ]);
    }
    Ok(table)
}

pub fn cmd_gamma(nu: f64, m: u32, q: u32, grid: &str) -> Result<Table, AppError> {
    if nu <= 0.0 {
        return Err(AppError::Usage(format!("nu must be > 0, got {nu}")));
    }
    let xs = parse_grid(grid)?;
    let mut table = Table::new(vec![
        "x",
        "taylor_lo",
        "taylor_hi",
        "pade_lo",
        "pade_hi",
        "matched_lo",
        "matched_hi",
        "oracle",
        "uncertainty",
    ]);
    for x in xs {
        let taylor = taylor_enclosure_gamma(nu, x, m)?;
        // the Padé family only exists for fractional order and x > 0
        let pade = if 0.0 < nu && nu < 1.0 && x > 0.0 {
            Some(pade_enclosure_gamma(nu, x, q)?)
        } else {
            None
        };
        let matched = matched_enclosure_gamma(nu, x, m, q)?;
        let reference = gamma_reference(nu, x, ORACLE_TOL)?;
        table.push(vec![
            Cell::num(x),
            Cell::num(taylor.lo()),
            Cell::num(taylor.hi()),
            pade.map_or(Cell::Empty, |e| Cell::num(e.lo())),
            pade.map_or(Cell::Empty, |e| Cell::num(e.hi())),
            Cell::num(matched.lo()),
            Cell::num(matched.hi()),
            Cell::num(reference.value),
            uncertainty_cell(&matched),
        ]);
    }
    Ok(table)
}

pub fn cmd_error_ratio(
    alpha: f64,
    delta: f64,
    xs: &[f64],
    n_max: u32,
) -> Result<Table, AppError> {
    if xs.is_empty() {
        return Err(AppError::Usage("at least one --x value is required".into()));
    }
    if n_max == 0 || n_max > 200 {
        return Err(AppError::Usage(format!(
            "n-max must be in 1..=200, got {n_max}"
        )));
    }
    let p = KummerParams::new(alpha, delta)?;
    let references: Vec<f64> = xs
        .iter()
        .map(|&x| n_reference(p, x, ORACLE_TOL).map(|r| r.value))
        .collect::<Result<_, _>>()?;
    let mut table = Table::new(vec!["n", "x", "abs_eps", "cal_e", "ratio"]);
    for n in 1..=n_max {
        for (&x, &reference) in xs.iter().zip(&references) {
            let cal = error_bounds(p, n, x)?.abs_bound;
            if cal == 0.0 {
                // the expansion is exact here; epsilon is exactly 0 too
                table.push(vec![
                    Cell::num(n as f64),
                    Cell::num(x),
                    Cell::num(0.0),
                    Cell::num(0.0),
                    Cell::Empty,
                ]);
                continue;
            }
            let eps = (reference - gamma_partial_sum(p, n, x)?).abs();
            table.push(vec![
                Cell::num(n as f64),
                Cell::num(x),
                Cell::num(eps),
                Cell::num(cal),
                Cell::num(eps / cal),
            ]);
        }
    }
    Ok(table)
}

pub fn cmd_norm(alpha: f64, delta: f64, sigma: f64, n_max: u32) -> Result<Table, AppError> {
    if n_max == 0 || n_max > 200 {
        return Err(AppError::Usage(format!(
            "n-max must be in 1..=200, got {n_max}"
        )));
    }
    let p = KummerParams::new(alpha, delta)?;
    let xs: Vec<f64> = (0..=200).map(|i| i as f64 * 0.5).collect();
    let references: Vec<f64> = xs
        .iter()
        .map(|&x| n_reference(p, x, ORACLE_TOL).map(|r| r.value))
        .collect::<Result<_, _>>()?;
    let mut table = Table::new(vec!["n", "bound", "empirical_sup", "ratio"]);
    for n in 1..=n_max {
        let bound = sup_norm_error_bound(p, sigma, n)?;
        let mut empirical: f64 = 0.0;
        for (&x, &reference) in xs.iter().zip(&references) {
            let eps = (reference - gamma_partial_sum(p, n, x)?).abs();
            empirical = empirical.max(x.powf(sigma) * eps);
        }
        let ratio = if bound == 0.0 {
            Cell::Empty
        } else {
            Cell::num(empirical / bound)
        };
        table.push(vec![
            Cell::num(n as f64),
            Cell::num(bound),
            Cell::num(empirical),
            ratio,
        ]);
    }
    Ok(table)
}

fn bracket_text(b: Bracket) -> String {
    format!("({:.2}..{:.2})", b.lo, b.hi)
}

fn row_rel(quantity: &str, published: &str, want: f64, got: f64) -> Vec<Cell> {
    let pass = (got - want).abs() <= 1e-14 * want.abs();
    vec![
        Cell::text(quantity),
        Cell::text(published),
        Cell::num(got),
        Cell::text(if pass { "PASS" } else { "FAIL" }),
    ]
}

fn row_below(quantity: &str, cap: f64, got: f64) -> Vec<Cell> {
    vec![
        Cell::text(quantity),
        Cell::text(format!("< {cap}")),
        Cell::num(got),
        Cell::text(if got < cap { "PASS" } else { "FAIL" }),
    ]
}

fn row_bracket(quantity: &str, lo: f64, hi: f64, got: Bracket) -> Vec<Cell> {
    vec![
        Cell::text(quantity),
        Cell::text(format!("({lo:.2}..{hi:.2})")),
        Cell::text(bracket_text(got)),
        Cell::text(if got.matches(lo, hi) { "PASS" } else { "FAIL" }),
    ]
}

fn examples_table() -> Table {
    Table::new(vec!["quantity", "published", "recomputed", "status"])
}

fn example_i() -> Result<Table, AppError> {
    let p = KummerParams::new(2.0, 1.5)?;
    let (n, m) = (2, 4);
    let mut t = examples_table();
    let at_zero = expansion_enclosure(p, n, 0.0)?;
    t.push(row_rel("g(0)", "3/32", 3.0 / 32.0, at_zero.lo()));
    t.push(row_rel("G(0)", "1/8", 1.0 / 8.0, at_zero.hi()));
    t.push(row_rel(
        "xi(0)",
        "1/7",
        1.0 / 7.0,
        at_zero.relative_uncertainty(),
    ));
    let xi = |x: f64| Ok::<_, AppError>(expansion_enclosure(p, n, x)?.relative_uncertainty());
    t.push(row_below("xi(1)", 0.098, xi(1.0)?));
    t.push(row_below("xi(3)", 0.045, xi(3.0)?));
    t.push(row_below("xi(7)", 0.012, xi(7.0)?));
    let lower = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().lo() - expansion_enclosure(p, n, x).unwrap().lo()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("j family switch", 1.92, 1.93, lower));
    let upper = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().hi() - expansion_enclosure(p, n, x).unwrap().hi()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("J family switch", 2.16, 2.17, upper));
    let eta = |x: f64| {
        matched_enclosure_n(p, n, m, x)
            .unwrap()
            .relative_uncertainty()
    };
    t.push(row_below("eta(1)", 0.0021, eta(1.0)));
    let (bracket, sup) = argmax_bracket(eta, 0.0, 10.0, 0.001);
    t.push(row_below("sup eta", 0.062, sup));
    t.push(row_bracket("argmax eta", 2.16, 2.17, bracket));
    Ok(t)
}

fn example_ii() -> Result<Table, AppError> {
    let p = KummerParams::new(0.5, 1.5)?;
    let (n, m, gm, gq) = (2, 4, 4, 1);
    let mut t = examples_table();
    let at_zero = expansion_enclosure(p, n, 0.0)?;
    t.push(row_rel("g(0)", "23/20", 23.0 / 20.0, at_zero.lo()));
    t.push(row_rel("G(0)", "6/5", 6.0 / 5.0, at_zero.hi()));
    let mut violations = 0u64;
    let mut x = 0.5;
    while x <= 20.0 + 1e-12 {
        let exact = expansion_enclosure(p, n, x)?;
        let elem = elementary_enclosure_n(p, n, gm, gq, x)?;
        if elem.lo() > exact.lo() + 1e-14 || exact.hi() > elem.hi() + 1e-14 {
            violations += 1;
        }
        x += 0.01;
    }
    t.push(vec![
        Cell::text("p<=g and G<=P on [0.5,20]"),
        Cell::text("0 violations"),
        Cell::num(violations as f64),
        Cell::text(if violations == 0 { "PASS" } else { "FAIL" }),
    ]);
    let theta = |x: f64| {
        let taylor = taylor_enclosure_n(p, m, x).unwrap();
        if x <= 0.0 {
            return taylor.relative_uncertainty();
        }
        let elem = elementary_enclosure_n(p, n, gm, gq, x).unwrap();
        taylor.intersect(&elem).unwrap().relative_uncertainty()
    };
    t.push(row_below("theta(1)", 0.00028, theta(1.0)));
    t.push(row_below("theta(3)", 0.0051, theta(3.0)));
    t.push(row_below("theta(7)", 0.0011, theta(7.0)));
    let (bracket, sup) = argmax_bracket(theta, 0.001, 10.0, 0.001);
    t.push(row_below("sup theta", 0.0074, sup));
    t.push(row_bracket("argmax theta", 2.41, 2.42, bracket));
    let lower = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().lo()
                - elementary_enclosure_n(p, n, gm, gq, x).unwrap().lo()
        },
        0.5,
        4.0,
        0.05,
    )?;
    t.push(row_bracket("lower family switch", 1.95, 1.96, lower));
    let upper = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().hi()
                - elementary_enclosure_n(p, n, gm, gq, x).unwrap().hi()
        },
        0.5,
        4.0,
        0.05,
    )?;
    t.push(row_bracket("upper family switch", 2.41, 2.42, upper));
    Ok(t)
}

fn example_iii() -> Result<Table, AppError> {
    let p = KummerParams::new(2.0, -0.5)?;
    let (n, m) = (4, 4);
    let mut t = examples_table();
    let at_zero = expansion_enclosure(p, n, 0.0)?;
    t.push(row_rel("g(0)", "667/768", 667.0 / 768.0, at_zero.lo()));
    t.push(row_rel("G(0)", "1087/768", 1087.0 / 768.0, at_zero.hi()));
    t.push(row_rel(
        "xi(0)",
        "210/877",
        210.0 / 877.0,
        at_zero.relative_uncertainty(),
    ));
    let xi = |x: f64| Ok::<_, AppError>(expansion_enclosure(p, n, x)?.relative_uncertainty());
    t.push(row_below("xi(1)", 0.22, xi(1.0)?));
    t.push(row_below("xi(3)", 0.15, xi(3.0)?));
    t.push(row_below("xi(7)", 0.046, xi(7.0)?));
    let lower = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().lo() - expansion_enclosure(p, n, x).unwrap().lo()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("j family switch", 1.57, 1.58, lower));
    let upper = sign_change(
        |x| {
            taylor_enclosure_n(p, m, x).unwrap().hi() - expansion_enclosure(p, n, x).unwrap().hi()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("J family switch", 1.54, 1.55, upper));
    let eta = |x: f64| {
        matched_enclosure_n(p, n, m, x)
            .unwrap()
            .relative_uncertainty()
    };
    let (bracket, sup) = argmax_bracket(eta, 0.0, 10.0, 0.001);
    t.push(row_below("sup eta", 0.20, sup));
    t.push(row_bracket("argmax eta", 1.57, 1.58, bracket));
    Ok(t)
}

fn example_gamma_half() -> Result<Table, AppError> {
    let (nu, m, q) = (0.5, 4, 1);
    let mut t = examples_table();
    let xi = |x: f64| {
        matched_enclosure_gamma(nu, x, m, q)
            .unwrap()
            .relative_uncertainty()
    };
    let (bracket, sup) = argmax_bracket(xi, 0.0, 10.0, 0.001);
    t.push(row_below("sup uncertainty", 0.005, sup));
    t.push(row_bracket("argmax uncertainty", 1.48, 1.49, bracket));
    let lower = sign_change(
        |x| {
            taylor_enclosure_gamma(nu, x, m).unwrap().lo()
                - pade_enclosure_gamma(nu, x, q).unwrap().lo()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("lower family switch", 1.16, 1.17, lower));
    let upper = sign_change(
        |x| {
            taylor_enclosure_gamma(nu, x, m).unwrap().hi()
                - pade_enclosure_gamma(nu, x, q).unwrap().hi()
        },
        0.5,
        3.0,
        0.05,
    )?;
    t.push(row_bracket("upper family switch", 1.48, 1.49, upper));
    Ok(t)
}

fn example_footnote() -> Result<Table, AppError> {
    let p = KummerParams::new(10.0, 10.0)?;
    let enc = expansion_enclosure(p, 1, 0.0)?;
    let sum = enc.hi() + enc.lo();
    let xi = enc.relative_uncertainty();
    let mut t = examples_table();
    t.push(vec![
        Cell::text("G1(10,10,0)+g1(10,10,0)"),
        Cell::text("< 0"),
        Cell::num(sum),
        Cell::text(if sum < 0.0 { "PASS" } else { "FAIL" }),
    ]);
    t.push(vec![
        Cell::text("xi1(10,10,0)"),
        Cell::text("finite and > 0"),
        Cell::num(xi),
        Cell::text(if xi.is_finite() && xi > 0.0 {
            "PASS"
        } else {
            "FAIL"
        }),
    ]);
    Ok(t)
}

pub fn cmd_examples(which: &str) -> Result<Table, AppError> {
    match which {
        "i" => example_i(),
        "ii" => example_ii(),
        "iii" => example_iii(),
        "gamma-half" => example_gamma_half(),
        "footnote" => example_footnote(),
        other => Err(AppError::Usage(format!(
            "unknown example '{other}' (expected i, ii, iii, gamma-half, footnote)"
        ))),
    }
}
