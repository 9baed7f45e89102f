//! Safeguarded Newton iteration inside a shrinking bisection bracket.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}] (f = {f_lo}, {f_hi})")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("no convergence after {iterations} iterations (last x = {x})")]
    NoConvergence { iterations: usize, x: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    pub x_tolerance: f64,
    pub f_tolerance: f64,
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            x_tolerance: 1e-12,
            f_tolerance: 1e-12,
            max_iterations: 200,
        }
    }
}

/// Finds a root of `f` on `[lo, hi]`. `f` returns `(value, derivative)`;
/// end-point values may be infinite as long as their signs differ.
pub fn newton_bisect<F>(f: F, lo: f64, hi: f64, options: RootOptions) -> Result<f64, RootError>
where
    F: Fn(f64) -> (f64, f64),
{
    let (f_lo, _) = f(lo);
    let (f_hi, _) = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() {
        return Err(RootError::NoBracket {
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }
    // Orient so that f(neg) < 0 < f(pos).
    let (mut neg, mut pos) = if f_lo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    let mut step_before_last = (hi - lo).abs();
    let mut last_step = step_before_last;
    for _ in 0..options.max_iterations {
        let (fx, dfx) = f(x);
        if fx.abs() <= options.f_tolerance {
            return Ok(x);
        }
        if fx < 0.0 {
            neg = x;
        } else {
            pos = x;
        }
        let newton = x - fx / dfx;
        let (a, b) = if neg < pos { (neg, pos) } else { (pos, neg) };
        let accept = newton.is_finite()
            && newton > a
            && newton < b
            && (newton - x).abs() < 0.5 * step_before_last;
        let next = if accept { newton } else { 0.5 * (neg + pos) };
        step_before_last = last_step;
        last_step = (next - x).abs();
        x = next;
        if last_step <= options.x_tolerance * x.abs().max(1.0) {
            return Ok(x);
        }
    }
    Err(RootError::NoConvergence {
        iterations: options.max_iterations,
        x,
    })
}
