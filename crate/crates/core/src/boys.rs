//! The Boys function `F_m(t) = ∫_0^1 u^{2m} exp(-t u²) du`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use thiserror::Error;

pub const MAX_ORDER: usize = 24;

/// Above this `t` the closed form `F_0 = ½√(π/t)` (erf saturated) plus upward
/// recursion is used; below it, a series at the top order plus downward
/// recursion.
const ASYMPTOTIC_T: f64 = 50.0;

/// Tabulation step and Taylor depth for `t <= ASYMPTOTIC_T`.
const TABLE_STEP: f64 = 0.05;
const TAYLOR_TERMS: usize = 8;
const TABLE_ORDERS: usize = MAX_ORDER + TAYLOR_TERMS + 1;
const TABLE_POINTS: usize = (ASYMPTOTIC_T / TABLE_STEP) as usize + 2;

/// `F_m(k·TABLE_STEP)` for all tabulated orders, row-major by point.
fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![0.0; TABLE_POINTS * TABLE_ORDERS];
        for (k, row) in t.chunks_mut(TABLE_ORDERS).enumerate() {
            direct_array(k as f64 * TABLE_STEP, row);
        }
        t
    })
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoysError {
    #[error("Boys order {m} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooHigh { m: usize },
    #[error("Boys argument {t} must be finite and non-negative")]
    InvalidArgument { t: f64 },
}

pub fn boys(m: usize, t: f64) -> Result<f64, BoysError> {
    if m > MAX_ORDER {
        return Err(BoysError::OrderTooHigh { m });
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(BoysError::InvalidArgument { t });
    }
    let mut out = [0.0; MAX_ORDER + 1];
    boys_array(m, t, &mut out[..=m]);
    Ok(out[m])
}

/// Fills `out[k] = F_k(t)` for `k = 0..=m_max`, `m_max = out.len() - 1`.
pub(crate) fn boys_array(m_max: usize, t: f64, out: &mut [f64]) {
    debug_assert_eq!(out.len(), m_max + 1);
    if t == 0.0 {
        for (k, v) in out.iter_mut().enumerate() {
            *v = 1.0 / (2 * k + 1) as f64;
        }
        return;
    }
    let et = (-t).exp();
    if t > ASYMPTOTIC_T {
        out[0] = 0.5 * (PI / t).sqrt();
        let inv2t = 0.5 / t;
        for k in 0..m_max {
            out[k + 1] = ((2 * k + 1) as f64 * out[k] - et) * inv2t;
        }
        return;
    }
    // Taylor expansion about the nearest tabulated point, using
    // dF_m/dt = -F_{m+1}, at the top order; then downward recursion.
    let k = (t / TABLE_STEP).round() as usize;
    let dt = k as f64 * TABLE_STEP - t;
    let row = &table()[k * TABLE_ORDERS..(k + 1) * TABLE_ORDERS];
    let mut top = 0.0;
    let mut coef = 1.0;
    for j in 0..TAYLOR_TERMS {
        top += coef * row[m_max + j];
        coef *= dt / (j + 1) as f64;
    }
    out[m_max] = top;
    downward(t, et, out);
}

fn downward(t: f64, et: f64, out: &mut [f64]) {
    for k in (0..out.len() - 1).rev() {
        out[k] = (2.0 * t * out[k + 1] + et) / (2 * k + 1) as f64;
    }
}

/// Series at the top order plus downward recursion, without the table.
fn direct_array(t: f64, out: &mut [f64]) {
    let m_max = out.len() - 1;
    let et = (-t).exp();
    out[m_max] = et * series(m_max, t);
    downward(t, et, out);
}

/// `Σ_k (2t)^k / ((2m+1)(2m+3)···(2m+2k+1))`; all terms positive.
fn series(m: usize, t: f64) -> f64 {
    let two_t = 2.0 * t;
    let mut denom = (2 * m + 1) as f64;
    let mut term = 1.0 / denom;
    let mut sum = term;
    loop {
        denom += 2.0;
        term *= two_t / denom;
        sum += term;
        if term < sum * 1e-17 {
            return sum;
        }
    }
}
