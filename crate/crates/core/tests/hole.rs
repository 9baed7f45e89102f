mod common;

use std::f64::consts::PI;

use apele::apele::ele_density_point;
use apele::fields::{FieldSample, SpinFields};
use apele::hole::{br_curvature, relaxed_normalization, solve_br, solve_spin, HoleStatus};
use proptest::prelude::*;
use rand::Rng;

fn random_triple(rng: &mut impl Rng) -> (f64, f64, f64) {
    let rho = 10f64.powf(rng.gen_range(-3.0..1.0));
    let n = rng.gen_range(0.05..1.0);
    let q = rng.gen_range(-20.0..40.0) * rho.powf(5.0 / 3.0);
    (rho, q, n)
}

#[test]
fn br_hole_satisfies_its_conditions_by_quadrature() {
    let mut rng = common::rng(21);
    for i in 0..200 {
        let (rho, q, n) = random_triple(&mut rng);
        let (sol, target_n, target_u) = if i % 2 == 0 {
            let s = solve_br(rho, q, n).unwrap();
            (s, n, s.u_model)
        } else {
            let u1 = solve_br(rho, q, 1.0).unwrap().u_model;
            let u = u1 * rng.gen_range(0.2..0.999);
            let s = relaxed_normalization(rho, q, u).unwrap();
            assert_eq!(s.status, HoleStatus::Converged);
            (s, s.n_eff, u)
        };
        let m = common::br_hole_oracle(sol.a, sol.b, sol.n_eff);
        let ctx = format!("rho {rho} q {q} n {target_n}: {sol:?}");
        assert!((m.charge + target_n).abs() < 1e-8 * target_n, "charge {} {ctx}", m.charge);
        assert!((m.on_top + rho).abs() < 1e-8 * rho, "on-top {} {ctx}", m.on_top);
        assert!((m.potential - target_u).abs() < 1e-8 * target_u.abs(), "potential {} {ctx}", m.potential);
        let scale = q.abs() + rho * sol.a * sol.a;
        assert!((m.curvature + q).abs() < 1e-6 * scale, "curvature {} {ctx}", m.curvature);
    }
}

#[test]
fn hydrogenic_hole_is_exact() {
    for k in 1..=20 {
        let r = 0.25 * k as f64;
        let f = common::hydrogenic_fields(r, 1.0);
        let (q, dcurv) = br_curvature(&f).unwrap();
        assert!(dcurv.abs() < 1e-15 * f.rho.max(1e-300) + 1e-300);
        let sol = solve_br(f.rho, q, 1.0).unwrap();
        let exact = -common::hydrogenic_potential(r);
        assert!((sol.u_model - exact).abs() < 1e-6, "r = {r}: {} vs {exact}", sol.u_model);
        let relaxed = relaxed_normalization(f.rho, q, exact).unwrap();
        assert!((relaxed.n_eff - 1.0).abs() < 1e-6, "r = {r}: N = {}", relaxed.n_eff);
        // On the exact density the hole is centred on the nucleus.
        assert!((sol.b - r).abs() < 1e-6 * r.max(1.0));
    }
}

#[test]
fn normalization_grows_with_deeper_potential() {
    for &(rho, q) in &[(0.3, 0.05), (0.02, -0.001), (1.5, 2.0), (0.1, 0.0)] {
        let u1 = solve_br(rho, q, 1.0).unwrap().u_model;
        let mut last = 0.0;
        for k in 1..=50 {
            let u = u1 * k as f64 / 50.0;
            let s = relaxed_normalization(rho, q, u).unwrap();
            assert!(s.n_eff > last, "rho {rho} q {q}: N({u}) = {} after {last}", s.n_eff);
            assert!(s.n_eff <= 1.0);
            last = s.n_eff;
        }
        assert!((last - 1.0).abs() < 1e-9);
        let mut last_u = 0.0;
        for k in 1..=50 {
            let u = solve_br(rho, q, k as f64 / 50.0).unwrap().u_model;
            assert!(u < last_u);
            last_u = u;
        }
    }
}

proptest! {
    #[test]
    fn relaxed_hole_is_invariant_under_coordinate_scaling(
        log_rho in -2.0..0.5f64,
        r in -10.0..20.0f64,
        frac in 0.1..0.99f64,
        lambda in 0.3..3.0f64,
    ) {
        let rho = 10f64.powf(log_rho);
        let q = r * rho.powf(5.0 / 3.0);
        let u = frac * solve_br(rho, q, 1.0).unwrap().u_model;
        let base = relaxed_normalization(rho, q, u).unwrap();
        let scaled = relaxed_normalization(lambda.powi(3) * rho, lambda.powi(5) * q, lambda * u).unwrap();
        prop_assert!((base.n_eff - scaled.n_eff).abs() < 1e-9);
        prop_assert!((base.x - scaled.x).abs() < 1e-8 * base.x.max(1.0));
        prop_assert!((scaled.a / base.a - lambda).abs() < 1e-8 * lambda);
        prop_assert!((scaled.b * lambda - base.b).abs() < 1e-8 * base.b.max(1e-3));
    }
}

/// Spin fields and exact hole potential of the restricted σg orbital built
/// from 1s functions on nuclei at ±R/2 along z, at `p`, neglecting overlap.
fn sigma_g(p: [f64; 3], big_r: f64) -> (SpinFields, f64) {
    let centers = [[0.0, 0.0, -0.5 * big_r], [0.0, 0.0, 0.5 * big_r]];
    let norm = (2.0f64).sqrt().recip();
    let (mut phi, mut grad, mut lap, mut v) = (0.0, [0.0; 3], 0.0, 0.0);
    for c in centers {
        let d: [f64; 3] = std::array::from_fn(|k| p[k] - c[k]);
        let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        let f = norm * (-r).exp() / PI.sqrt();
        phi += f;
        for k in 0..3 {
            grad[k] -= f * d[k] / r;
        }
        lap += f * (1.0 - 2.0 / r);
        v += 0.5 * common::hydrogenic_potential(r);
    }
    let g2 = grad.iter().map(|g| g * g).sum::<f64>();
    let fields = SpinFields {
        rho: phi * phi,
        grad_rho: std::array::from_fn(|k| 2.0 * phi * grad[k]),
        lap_rho: 2.0 * g2 + 2.0 * phi * lap,
        tau: g2,
    };
    (fields, -v)
}

#[test]
fn dissociated_bond_localizes_one_electron_per_spin_on_each_atom() {
    for &big_r in &[1e3, 1e5] {
        for k in 1..=30 {
            let p = [0.1 * k as f64, 0.05 * k as f64, -0.5 * big_r + 0.07 * k as f64];
            let (f, u) = sigma_g(p, big_r);
            let sol = solve_spin(&f, 0.5 * f.rho * u);
            assert_eq!(sol.status, HoleStatus::Converged);
            let tol = 10.0 / big_r;
            assert!((sol.n_eff - 0.5).abs() < tol, "R {big_r} p {p:?}: N = {}", sol.n_eff);
            let sample = FieldSample {
                spin: [f, f],
                ex_density: Some([0.5 * f.rho * u; 2]),
            };
            let d = ele_density_point(&sample, &[sol, sol]);
            assert!((d / (2.0 * f.rho) - 1.0).abs() < 2.0 * tol);
        }
    }
}

#[test]
fn stretching_the_model_bond_raises_the_ele_fraction() {
    let p_off = [0.3, 0.2, 0.4];
    let mut last = 0.0;
    for big_r in [3.0, 6.0, 12.0, 24.0, 48.0, 96.0] {
        let p = [p_off[0], p_off[1], -0.5 * big_r + p_off[2]];
        let (f, u) = sigma_g(p, big_r);
        let sol = solve_spin(&f, 0.5 * f.rho * u);
        let frac = 1.0 - sol.n_eff;
        assert!(frac > last, "R = {big_r}: 1 - N = {frac}");
        last = frac;
    }
    assert!(last < 0.5);
}
