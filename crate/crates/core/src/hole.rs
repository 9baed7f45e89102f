//! Becke-Roussel model exchange hole with relaxed normalization.
//!
//! The model hole is `-N a³/(8π) exp(-a |r' - c|)`, centered a distance `b`
//! from the reference point, with `x = a b`. Three conditions fix it:
//!
//! * on-top depth: `N a³ e^{-x} = 8π ρ`
//! * curvature: `Q = ρ a² (x - 2) / (6x)`
//! * normalization `N`, either fixed at one (the standard hole) or relaxed so
//!   that the hole's potential at the reference point,
//!   `u = -N (1 - e^{-x}(1 + x/2)) / b`, equals the exact-exchange value
//!   `u_exact = 2 e_X / ρ`.
//!
//! Eliminating `a` from the first two gives `G(x) = y N^{2/3}` with
//! `G(x) = (x - 2) e^{2x/3} / x` and `y = Q / ((2/3) π^{2/3} ρ^{5/3})`.
//! `G` increases monotonically through zero at `x = 2`, so `Q > 0` puts
//! the root above two and `Q < 0` below. Both solves work with logarithms of
//! `|G|`, which are smooth and monotone on each side.
//!
//! Relaxed holes are clamped at `N = 1`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fields::SpinFields;
use crate::roots::{newton_bisect, RootError, RootOptions};

/// Upper end of the `Q > 0` bracket.
const X_MAX: f64 = 502.0;
/// Lower end of the `Q < 0` bracket.
const X_MIN: f64 = 1e-10;
/// Below this `|y|` the curvature is treated as zero and `x = 2`.
const FLAT_CURVATURE: f64 = 1e-14;

/// Log-residual below which `u_exact` counts as the `N = 1` potential.
const MATCH_TOLERANCE: f64 = 1e-13;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HoleError {
    #[error("spin density {rho:e} is below the negligible-density threshold")]
    NegligibleDensity { rho: f64 },
    #[error("density must be positive, got {rho}")]
    NonPositiveDensity { rho: f64 },
    #[error("normalization must lie in (0, 1], got {n}")]
    InvalidNormalization { n: f64 },
    #[error("exact-exchange hole potential must be finite and negative, got {u}")]
    InvalidExactPotential { u: f64 },
    #[error("hole equation has no bracketed root: {0}")]
    NoBracket(#[from] RootError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleStatus {
    Converged,
    ClampedToOne,
    NegligibleDensity,
    Fallback,
}

impl HoleStatus {
    pub const ALL: [HoleStatus; 4] = [
        HoleStatus::Converged,
        HoleStatus::ClampedToOne,
        HoleStatus::NegligibleDensity,
        HoleStatus::Fallback,
    ];

    pub fn label(self) -> &'static str {
        match self {
            HoleStatus::Converged => "converged",
            HoleStatus::ClampedToOne => "clamped_to_one",
            HoleStatus::NegligibleDensity => "negligible_density",
            HoleStatus::Fallback => "fallback",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HoleSolution {
    /// Decay constant, bohr⁻¹.
    pub a: f64,
    /// Displacement of the hole center, bohr.
    pub b: f64,
    pub x: f64,
    pub n_eff: f64,
    /// Hole potential at the reference point, hartree.
    pub u_model: f64,
    pub status: HoleStatus,
}

impl HoleSolution {
    /// Placeholder for points whose density is negligible; contributes nothing.
    pub fn negligible() -> Self {
        Self {
            a: 0.0,
            b: 0.0,
            x: 0.0,
            n_eff: 1.0,
            u_model: 0.0,
            status: HoleStatus::NegligibleDensity,
        }
    }
}

/// `(Q, D)` with `D = τ - |∇ρ|²/(4ρ)` and `Q = (∇²ρ - 2D)/6`.
pub fn br_curvature(fields: &SpinFields) -> Result<(f64, f64), HoleError> {
    if fields.is_negligible() {
        return Err(HoleError::NegligibleDensity { rho: fields.rho });
    }
    let g = fields.grad_rho;
    let g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    let dcurv = (fields.tau - g2 / (4.0 * fields.rho)).max(0.0);
    Ok(((fields.lap_rho - 2.0 * dcurv) / 6.0, dcurv))
}

/// `(2/3) π^{2/3} ρ^{5/3}`
fn curvature_scale(rho: f64) -> f64 {
    2.0 / 3.0 * PI.powf(2.0 / 3.0) * rho.powf(5.0 / 3.0)
}

/// `ln |G(x)|` and its derivative.
fn ln_abs_g(x: f64) -> (f64, f64) {
    (
        (x - 2.0).abs().ln() + 2.0 * x / 3.0 - x.ln(),
        1.0 / (x - 2.0) + 2.0 / 3.0 - 1.0 / x,
    )
}

/// Solves `G(x) = y`.
fn solve_x(y: f64) -> Result<f64, HoleError> {
    if y.abs() < FLAT_CURVATURE {
        return Ok(2.0);
    }
    let target = y.abs().ln();
    let f = |x: f64| {
        let (v, d) = ln_abs_g(x);
        (v - target, d)
    };
    let x = if y > 0.0 {
        newton_bisect(f, 2.0, X_MAX, RootOptions::default())?
    } else {
        newton_bisect(f, X_MIN, 2.0, RootOptions::default())?
    };
    Ok(x)
}

/// Assembles the hole from `x` and `N` via the on-top condition.
fn hole_from(rho: f64, x: f64, n: f64, status: HoleStatus) -> HoleSolution {
    let a = (((8.0 * PI * rho / n).ln() + x) / 3.0).exp();
    let b = x / a;
    let u_model = -n * a * potential_shape(x);
    HoleSolution {
        a,
        b,
        x,
        n_eff: n,
        u_model,
        status,
    }
}

/// `(1 - e^{-x}(1 + x/2)) / x`, so that `u = -N a · shape(x)`.
fn potential_shape(x: f64) -> f64 {
    // 1 - e^{-x}(1 + x/2) = -expm1(-x) - (x/2) e^{-x}
    (-(-x).exp_m1() - 0.5 * x * (-x).exp()) / x
}

/// Standard Becke-Roussel hole at fixed normalization `n`.
pub fn solve_br(rho: f64, q: f64, n: f64) -> Result<HoleSolution, HoleError> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(HoleError::NonPositiveDensity { rho });
    }
    if !(n > 0.0 && n <= 1.0) {
        return Err(HoleError::InvalidNormalization { n });
    }
    let y = q * n.powf(2.0 / 3.0) / curvature_scale(rho);
    let x = solve_x(y)?;
    Ok(hole_from(rho, x, n, HoleStatus::Converged))
}

/// Becke-Roussel hole whose normalization is relaxed until its potential
/// matches `u_exact`, capped at one.
pub fn relaxed_normalization(rho: f64, q: f64, u_exact: f64) -> Result<HoleSolution, HoleError> {
    if !(u_exact < 0.0) || !u_exact.is_finite() {
        return Err(HoleError::InvalidExactPotential { u: u_exact });
    }
    let full = solve_br(rho, q, 1.0)?;
    if u_exact <= full.u_model {
        return Ok(HoleSolution {
            status: HoleStatus::ClampedToOne,
            ..full
        });
    }
    let y0 = q / curvature_scale(rho);
    if y0.abs() < FLAT_CURVATURE {
        // x stays at 2 and u scales as N^{2/3}.
        let n = (u_exact / full.u_model).powf(1.5);
        return Ok(hole_from(rho, 2.0, n, HoleStatus::Converged));
    }
    // With N^{2/3} = G(x)/y0, the potential becomes
    // u(x) = -(8πρ)^{1/3} (x - 2)(e^x - 1 - x/2) / (x² y0).
    let kappa = -u_exact / (8.0 * PI * rho).cbrt();
    let target = (kappa * y0.abs()).ln();
    let f = |x: f64| {
        let em = x.exp_m1() - 0.5 * x;
        let v = (x - 2.0).abs().ln() + em.ln() - 2.0 * x.ln();
        let d = 1.0 / (x - 2.0) + (x.exp() - 0.5) / em - 2.0 / x;
        (v - target, d)
    };
    if f(full.x).0.abs() <= MATCH_TOLERANCE {
        return Ok(HoleSolution {
            status: HoleStatus::Converged,
            ..full
        });
    }
    let x = if y0 > 0.0 {
        newton_bisect(f, 2.0, full.x, RootOptions::default())?
    } else {
        newton_bisect(f, full.x, 2.0, RootOptions::default())?
    };
    let (ln_g, _) = ln_abs_g(x);
    let n = (1.5 * (ln_g - y0.abs().ln())).exp().min(1.0);
    Ok(hole_from(rho, x, n, HoleStatus::Converged))
}

/// Relaxed hole for one spin channel of a field sample; never fails.
///
/// Negligible densities give `N = 1`. Unusable exchange data or a failed
/// solve fall back to the standard hole with `N = 1`.
pub fn solve_spin(fields: &SpinFields, ex_density: f64) -> HoleSolution {
    let Ok((q, _)) = br_curvature(fields) else {
        return HoleSolution::negligible();
    };
    let u_exact = 2.0 * ex_density / fields.rho;
    match relaxed_normalization(fields.rho, q, u_exact) {
        Ok(sol) => sol,
        Err(_) => match solve_br(fields.rho, q, 1.0) {
            Ok(sol) => HoleSolution {
                status: HoleStatus::Fallback,
                ..sol
            },
            Err(_) => HoleSolution {
                status: HoleStatus::Fallback,
                ..HoleSolution::negligible()
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hydrogenic(r: f64) -> (f64, f64, f64) {
        // ρ = e^{-2r}/π, ∇²ρ = (4 - 4/r) ρ, one orbital so D = 0.
        let rho = (-2.0 * r).exp() / PI;
        let q = (4.0 - 4.0 / r) * rho / 6.0;
        let u = -(1.0 - (-2.0 * r).exp() * (1.0 + r)) / r;
        (rho, q, u)
    }

    #[test]
    fn one_orbital_curvature() {
        let f = SpinFields {
            rho: 0.3,
            grad_rho: [0.2, -0.1, 0.4],
            lap_rho: -1.2,
            tau: (0.04 + 0.01 + 0.16) / (4.0 * 0.3),
        };
        let (q, d) = br_curvature(&f).unwrap();
        assert!(d.abs() < 1e-15);
        assert!((q - f.lap_rho / 6.0).abs() < 1e-15);
    }

    #[test]
    fn homogeneous_curvature_is_negative() {
        let f = SpinFields {
            rho: 0.1,
            grad_rho: [0.0; 3],
            lap_rho: 0.0,
            tau: 0.6,
        };
        let (q, _) = br_curvature(&f).unwrap();
        assert!((q + 0.6 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn negligible_density_is_an_error() {
        let f = SpinFields::default();
        assert!(matches!(br_curvature(&f), Err(HoleError::NegligibleDensity { .. })));
        assert_eq!(solve_spin(&f, 0.0).status, HoleStatus::NegligibleDensity);
        assert_eq!(solve_spin(&f, 0.0).n_eff, 1.0);
    }

    #[test]
    fn forward_constructed_root() {
        let (rho, xs) = (0.1, 4.0);
        let a = (8.0 * PI * rho * f64::exp(xs)).cbrt();
        let q = rho * a * a * (xs - 2.0) / (6.0 * xs);
        let sol = solve_br(rho, q, 1.0).unwrap();
        assert!((sol.x - 4.0).abs() < 1e-10);
        assert!((sol.a - a).abs() < 1e-9);
    }

    #[test]
    fn bracket_side_follows_curvature_sign() {
        assert!(solve_br(0.2, 0.05, 1.0).unwrap().x > 2.0);
        assert!(solve_br(0.2, -0.05, 1.0).unwrap().x < 2.0);
        assert_eq!(solve_br(0.2, 0.0, 1.0).unwrap().x, 2.0);
    }

    #[test]
    fn hydrogen_hole_at_one_bohr() {
        let (rho, q, u) = hydrogenic(1.0);
        let sol = solve_br(rho, q, 1.0).unwrap();
        assert!((sol.u_model - u).abs() < 1e-6);
        assert!((u + 0.729_330).abs() < 1e-6);
        let relaxed = relaxed_normalization(rho, q, u).unwrap();
        assert!((relaxed.n_eff - 1.0).abs() < 1e-6);
    }

    #[test]
    fn shallower_exact_hole_lowers_normalization() {
        let (rho, q) = (0.05, 0.02);
        let full = solve_br(rho, q, 1.0).unwrap();
        let shallow = relaxed_normalization(rho, q, 0.7 * full.u_model).unwrap();
        assert_eq!(shallow.status, HoleStatus::Converged);
        assert!(shallow.n_eff < 1.0);
        assert!((shallow.u_model - 0.7 * full.u_model).abs() < 1e-10);
        let deep = relaxed_normalization(rho, q, 1.3 * full.u_model).unwrap();
        assert_eq!(deep.status, HoleStatus::ClampedToOne);
        assert_eq!(deep.n_eff, 1.0);
    }

    #[test]
    fn negative_curvature_relaxation() {
        let (rho, q) = (0.05, -0.02);
        let full = solve_br(rho, q, 1.0).unwrap();
        let sol = relaxed_normalization(rho, q, 0.5 * full.u_model).unwrap();
        assert!(sol.x < 2.0 && sol.n_eff < 1.0);
        assert!((sol.u_model - 0.5 * full.u_model).abs() < 1e-10);
    }

    #[test]
    fn flat_curvature_relaxation() {
        let sol = relaxed_normalization(0.05, 0.0, -0.1).unwrap();
        let full = solve_br(0.05, 0.0, 1.0).unwrap();
        assert_eq!(sol.x, 2.0);
        assert!((sol.u_model + 0.1).abs() < 1e-12 || full.u_model > -0.1);
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(solve_br(0.0, 1.0, 1.0), Err(HoleError::NonPositiveDensity { .. })));
        assert!(matches!(solve_br(1.0, 1.0, 1.5), Err(HoleError::InvalidNormalization { .. })));
        assert!(matches!(
            relaxed_normalization(1.0, 1.0, 0.1),
            Err(HoleError::InvalidExactPotential { .. })
        ));
    }

    #[test]
    fn unusable_exchange_falls_back() {
        let f = SpinFields {
            rho: 0.1,
            grad_rho: [0.0; 3],
            lap_rho: 0.3,
            tau: 0.0,
        };
        let sol = solve_spin(&f, 0.0);
        assert_eq!(sol.status, HoleStatus::Fallback);
        assert_eq!(sol.n_eff, 1.0);
    }
}
