//! Shared fixtures and independent numerical oracles for the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use apele::basis::CartesianGaussian;
use apele::fields::{FieldEvaluator, SpinFields};
use apele::wfx::WavefunctionData;
use nalgebra::DMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const H2_SERIES: [&str; 5] = ["h2_0p74A", "h2_1p5A", "h2_2p5A", "h2_3p5A", "h2_5A"];

pub const ALL_FIXTURES: [&str; 9] = [
    "h_atom",
    "h2_0p74A",
    "h2_1p5A",
    "h2_2p5A",
    "h2_3p5A",
    "h2_5A",
    "h2_5A_pair",
    "h2o",
    "ethane",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.wfx"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture readable")
}

pub fn load(name: &str) -> WavefunctionData {
    apele::read_wfx(fixture_path(name)).expect("fixture parses")
}

pub fn manifest() -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/manifest.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- quadrature

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn fixed_rule(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rule: &[(f64, f64)]) -> f64 {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    half * rule.iter().map(|(x, w)| w * f(mid + half * x)).sum::<f64>()
}

/// Adaptive Gauss-Legendre (10 vs 20 points per panel) to an absolute tolerance.
pub fn adaptive_abs(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    thread_local! {
        static RULES: (Vec<(f64, f64)>, Vec<(f64, f64)>) = (gauss_legendre(10), gauss_legendre(20));
    }
    RULES.with(|(g10, g20)| {
        let mut total = 0.0;
        let mut stack = vec![(a, b, 0u32)];
        while let Some((lo, hi, depth)) = stack.pop() {
            let coarse = fixed_rule(f, lo, hi, g10);
            let fine = fixed_rule(f, lo, hi, g20);
            let share = tol * (hi - lo) / (b - a);
            let floor = 1e-13 * fixed_rule(&|x| f(x).abs(), lo, hi, g10);
            if (fine - coarse).abs() <= share.max(floor) || depth >= 30 {
                total += fine;
            } else {
                let mid = 0.5 * (lo + hi);
                stack.push((lo, mid, depth + 1));
                stack.push((mid, hi, depth + 1));
            }
        }
        total
    })
}

/// Adaptive quadrature to a tolerance relative to the integral itself.
pub fn adaptive_rel(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel: f64) -> f64 {
    adaptive_noisy(f, a, b, rel, 1e-14)
}

/// As [`adaptive_rel`], but never asking for more than `noise ∫|f|`, the
/// round-off level of an integrand that cancels internally.
pub fn adaptive_noisy(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel: f64, noise: f64) -> f64 {
    let g20 = gauss_legendre(20);
    let magnitude = adaptive_abs(&|x| f(x).abs(), a, b, 1e-3 * fixed_rule(&|x| f(x).abs(), a, b, &g20));
    let noise = noise * magnitude;
    let rough = adaptive_abs(f, a, b, (1e-6 * fixed_rule(f, a, b, &g20).abs()).max(noise));
    adaptive_abs(f, a, b, (rel * rough.abs()).max(noise).max(1e-300))
}

// ---------------------------------------------------------------- Boys

/// `F_m(t) = ∫_0^1 u^{2m} e^{-t u²} du` by quadrature.
pub fn boys_oracle(m: usize, t: f64) -> f64 {
    let f = move |u: f64| u.powi(2 * m as i32) * (-t * u * u).exp();
    adaptive_rel(&f, 0.0, 1.0, 1e-14)
}

// ---------------------------------------------------------------- ESP

fn double_factorial(n: i64) -> f64 {
    let mut v = 1.0;
    let mut k = n;
    while k > 1 {
        v *= k as f64;
        k -= 2;
    }
    v
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `∫ (x-A)^i (x-B)^j exp(-α(x-A)² - β(x-B)² - s²(x-C)²) dx`.
fn axis_integral(i: u8, j: u8, alpha: f64, beta: f64, a: f64, b: f64, c: f64, s2: f64) -> f64 {
    let q = alpha + beta + s2;
    let x0 = (alpha * a + beta * b + s2 * c) / q;
    let pre = (-(alpha * beta * (a - b).powi(2) + alpha * s2 * (a - c).powi(2) + beta * s2 * (b - c).powi(2)) / q).exp();
    let (da, db) = (x0 - a, x0 - b);
    let moment = |k: usize| {
        if k % 2 == 1 {
            0.0
        } else {
            double_factorial(k as i64 - 1) * (PI / q).sqrt() / (2.0 * q).powi(k as i32 / 2)
        }
    };
    let mut sum = 0.0;
    for k in 0..=i as usize {
        for l in 0..=j as usize {
            sum += binomial(i as usize, k)
                * binomial(j as usize, l)
                * da.powi(i as i32 - k as i32)
                * db.powi(j as i32 - l as i32)
                * moment(k + l);
        }
    }
    pre * sum
}

/// Coulomb potential at `c` of the product `ga·gb`, from
/// `1/r = (2/√π) ∫_0^∞ exp(-s² r²) ds` and one-dimensional moments.
pub fn esp_oracle(ga: &CartesianGaussian, gb: &CartesianGaussian, c: [f64; 3]) -> f64 {
    let integrand = |t: f64| {
        if t >= 1.0 {
            return 0.0;
        }
        let s = t / (1.0 - t);
        let s2 = s * s;
        let mut v = 1.0;
        for k in 0..3 {
            v *= axis_integral(
                ga.powers[k],
                gb.powers[k],
                ga.exponent,
                gb.exponent,
                ga.center[k],
                gb.center[k],
                c[k],
                s2,
            );
        }
        v / (1.0 - t).powi(2)
    };
    let raw = adaptive_noisy(&integrand, 0.0, 1.0, 1e-14, 1e-12);
    ga.coefficient * gb.coefficient * 2.0 / PI.sqrt() * raw
}

// ---------------------------------------------------------------- SVD

/// Singular values by one-sided Jacobi rotations.
pub fn jacobi_singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    let mut a = if m.nrows() >= m.ncols() { m.clone() } else { m.transpose() };
    let n = a.ncols();
    for _sweep in 0..100 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = a.column(p).norm_squared();
                let beta: f64 = a.column(q).norm_squared();
                let gamma: f64 = a.column(p).dot(&a.column(q));
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..a.nrows() {
                    let (x, y) = (a[(r, p)], a[(r, q)]);
                    a[(r, p)] = c * x - s * y;
                    a[(r, q)] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = (0..n).map(|k| a.column(k).norm()).collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

// ---------------------------------------------------------------- holes

/// Spherical average about the reference point of `e^{-a|r - b ẑ|}` at radius `s`,
/// by quadrature over the polar angle.
fn angular_average(a: f64, b: f64, s: f64) -> f64 {
    let f = |mu: f64| (-a * (s * s + b * b - 2.0 * s * b * mu).max(0.0).sqrt()).exp();
    0.5 * adaptive_rel(&f, -1.0, 1.0, 1e-13)
}

/// Same average minus its value at `s = 0`, without cancellation.
fn angular_excess(a: f64, b: f64, s: f64) -> f64 {
    let f = |mu: f64| {
        let d = (s * s + b * b - 2.0 * s * b * mu).max(0.0).sqrt();
        (-a * b).exp() * (-a * (s * s - 2.0 * s * b * mu) / (d + b)).exp_m1()
    };
    0.5 * adaptive_rel(&f, -1.0, 1.0, 1e-12)
}

/// Moments of the spherically averaged Becke-Roussel hole
/// `-(N a³/8π) e^{-a|r - b|}` obtained by brute-force quadrature.
pub struct HoleMoments {
    pub charge: f64,
    pub on_top: f64,
    /// Coefficient of `s²` in the small-`s` expansion.
    pub curvature: f64,
    pub potential: f64,
}

pub fn br_hole_oracle(a: f64, b: f64, n: f64) -> HoleMoments {
    let amp = -n * a.powi(3) / (8.0 * PI);
    let upper = b + 60.0 / a;
    let radial = |power: i32| {
        let f = |s: f64| 4.0 * PI * s.powi(power) * amp * angular_average(a, b, s);
        adaptive_rel(&f, 0.0, b, 1e-11) + adaptive_rel(&f, b, upper, 1e-11)
    };
    let s = 1e-4 * b.min(1.0 / a);
    HoleMoments {
        charge: radial(2),
        on_top: amp * angular_average(a, b, 0.0),
        curvature: amp * angular_excess(a, b, s) / (s * s),
        potential: radial(1),
    }
}

// ---------------------------------------------------------------- analytic fields

/// Spin fields of `scale · e^{-2r}/π` (a 1s orbital) at distance `r`.
pub fn hydrogenic_fields(r: f64, scale: f64) -> SpinFields {
    let rho = scale * (-2.0 * r).exp() / PI;
    SpinFields {
        rho,
        grad_rho: [0.0, 0.0, -2.0 * rho],
        lap_rho: (4.0 - 4.0 / r) * rho,
        tau: rho,
    }
}

/// Potential of the normalized 1s density at distance `r`.
pub fn hydrogenic_potential(r: f64) -> f64 {
    (1.0 - (-2.0 * r).exp() * (1.0 + r)) / r
}

// ---------------------------------------------------------------- finite differences

pub fn total_density(ev: &FieldEvaluator, p: [f64; 3]) -> f64 {
    let s = ev.evaluate(p).sample;
    s.spin[0].rho + s.spin[1].rho
}

pub fn total_gradient(ev: &FieldEvaluator, p: [f64; 3]) -> [f64; 3] {
    let s = ev.evaluate(p).sample;
    std::array::from_fn(|k| s.spin[0].grad_rho[k] + s.spin[1].grad_rho[k])
}

/// Five-point central difference of `f` along axis `k`.
pub fn central_difference(f: &dyn Fn([f64; 3]) -> f64, p: [f64; 3], k: usize, h: f64) -> f64 {
    let at = |d: f64| {
        let mut q = p;
        q[k] += d;
        f(q)
    };
    (at(-2.0 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2.0 * h)) / (12.0 * h)
}

/// Worst relative deviations (gradient, Laplacian) of analytic fields from
/// finite differences at `n` random points around the nuclei.
pub fn gradient_check(wfn: &WavefunctionData, n: usize, seed: u64) -> (f64, f64) {
    let ev = FieldEvaluator::new(wfn);
    let mut rng = rng(seed);
    let (mut worst_g, mut worst_l) = (0.0f64, 0.0f64);
    let h = 1e-4;
    for _ in 0..n {
        let nuc = &wfn.nuclei[rng.gen_range(0..wfn.nuclei.len())];
        let p: [f64; 3] = std::array::from_fn(|k| nuc.position[k] + rng.gen_range(-2.0..2.0));
        let sample = ev.evaluate(p).sample;
        let rho = sample.spin[0].rho + sample.spin[1].rho;
        let grad: [f64; 3] = std::array::from_fn(|k| sample.spin[0].grad_rho[k] + sample.spin[1].grad_rho[k]);
        let lap = sample.spin[0].lap_rho + sample.spin[1].lap_rho;

        let dens = |q: [f64; 3]| total_density(&ev, q);
        let fd_grad: [f64; 3] = std::array::from_fn(|k| central_difference(&dens, p, k, h));
        let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        let err: f64 = (0..3).map(|k| (fd_grad[k] - grad[k]).powi(2)).sum::<f64>().sqrt();
        worst_g = worst_g.max(err / gnorm.max(rho));

        let fd_lap: f64 = (0..3)
            .map(|k| central_difference(&|q| total_gradient(&ev, q)[k], p, k, h))
            .sum();
        worst_l = worst_l.max((fd_lap - lap).abs() / lap.abs().max(rho));
    }
    (worst_g, worst_l)
}
