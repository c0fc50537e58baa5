//! Grid utilities for locating crossover points and suprema of scalar
//! quantities along the x axis: coarse scan, sign-change bisection, and
//! outward rounding of the result to 0.01-resolution brackets.

use crate::{Error, Result};

/// A pair of grid points bracketing a located feature (a crossover or an
/// argmax), reported at 0.01 resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// True when the bracket lies inside `[lo, hi]` up to grid rounding.
    pub fn matches(&self, lo: f64, hi: f64) -> bool {
        (self.lo - lo).abs() < 5e-3 && (self.hi - hi).abs() < 5e-3
    }
}

fn round_outward(lo: f64, hi: f64) -> Bracket {
    Bracket {
        lo: (lo * 100.0).floor() / 100.0,
        hi: (hi * 100.0).ceil() / 100.0,
    }
}

/// Inclusive uniform grid `a, a+step, …, b` (last point clamped to `b`).
pub fn grid(a: f64, b: f64, step: f64) -> Vec<f64> {
    debug_assert!(step > 0.0 && b >= a);
    let count = ((b - a) / step).round() as usize;
    let mut points: Vec<f64> = (0..=count).map(|i| a + i as f64 * step).collect();
    if let Some(last) = points.last_mut() {
        if (*last - b).abs() < 0.5 * step {
            *last = b;
        }
    }
    points
}

/// Locate the sign change of `f` on `[a, b]`: a coarse scan with `step`
/// finds the first cell where the sign flips, bisection narrows it to
/// absolute width 1e−3, and the result is rounded outward to a 0.01
/// bracket. `f` must change sign exactly once on the interval.
pub fn sign_change<F>(f: F, a: f64, b: f64, step: f64) -> Result<Bracket>
where
    F: Fn(f64) -> f64,
{
    let points = grid(a, b, step);
    let mut cell = None;
    for w in points.windows(2) {
        let (fa, fb) = (f(w[0]), f(w[1]));
        if fa == 0.0 {
            return Ok(round_outward(w[0], w[0]));
        }
        if fa * fb < 0.0 {
            cell = Some((w[0], w[1], fa));
            break;
        }
    }
    let (mut lo, mut hi, f_lo) = cell.ok_or_else(|| {
        Error::Domain(format!("no sign change of f on [{a}, {b}] at step {step}"))
    })?;
    // Narrow to 1e-3, then keep going while the interval still straddles
    // a 0.01 boundary, so roots close to a grid line report the single
    // cell that contains them.
    let mut iterations = 0;
    while hi - lo > 1e-3 || (lo * 100.0).floor() != (hi * 100.0).floor() {
        iterations += 1;
        if iterations > 60 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(round_outward(mid, mid));
        }
        if f_lo * fm > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(round_outward(lo, hi))
}

/// Maximum of `f` over the inclusive grid, with its argument.
pub fn grid_max<F>(f: F, a: f64, b: f64, step: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut best_x = a;
    let mut best = f64::NEG_INFINITY;
    for x in grid(a, b, step) {
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    (best_x, best)
}

/// Grid maximum reported with a 0.01 bracket around the argmax. The
/// coarse grid argmax is refined by ternary search over its neighboring
/// cells, so a maximum sitting near a 0.01 boundary still resolves to
/// the cell that actually contains it.
pub fn argmax_bracket<F>(f: F, a: f64, b: f64, step: f64) -> (Bracket, f64)
where
    F: Fn(f64) -> f64,
{
    let (x, v) = grid_max(&f, a, b, step);
    let mut lo = (x - step).max(a);
    let mut hi = (x + step).min(b);
    while hi - lo > 1e-5 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) < f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let refined = 0.5 * (lo + hi);
    (round_outward(refined, refined), v.max(f(refined)))
}
