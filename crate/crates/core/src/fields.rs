//! Per-spin density fields and the exact-exchange energy density at
//! arbitrary points.
//!
//! Conventions: `tau` is `Σ_i n_i |∇φ_i|²` without the factor ½, and the
//! exchange energy density is `e_X(r) = -½ Σ_ij n_i n_j φ_i(r) φ_j(r) V_ij(r)`
//! with `V_ij` the Coulomb potential of the orbital product `φ_i φ_j`.

use serde::{Deserialize, Serialize};

use crate::basis::{dot, CartesianGaussian, PrimitiveDerivs};
use crate::esp::{IntegralError, PairData};
use crate::wfx::WavefunctionData;

/// Spin densities below this are treated as zero by downstream consumers.
pub const NEGLIGIBLE_DENSITY: f64 = 1e-12;

/// Primitives with `α r²` above this are skipped (value below ~1e-22).
const PRIMITIVE_CUTOFF: f64 = 50.0;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SpinFields {
    pub rho: f64,
    pub grad_rho: [f64; 3],
    pub lap_rho: f64,
    pub tau: f64,
}

impl SpinFields {
    pub fn is_negligible(&self) -> bool {
        self.rho < NEGLIGIBLE_DENSITY
    }
}

/// Fields of both spin channels at one point; index 0 is alpha, 1 is beta.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub spin: [SpinFields; 2],
    pub ex_density: Option<[f64; 2]>,
}

impl FieldSample {
    pub fn rho(&self) -> [f64; 2] {
        [self.spin[0].rho, self.spin[1].rho]
    }
}

/// Orbital data rearranged for repeated point evaluation.
#[derive(Debug, Clone)]
pub struct FieldEvaluator {
    gaussians: Vec<CartesianGaussian>,
    /// Orbitals with any occupation: (per-spin occupations, coefficients).
    orbitals: Vec<([f64; 2], Vec<f64>)>,
}

/// Intermediate per-point quantities shared by the density and exchange paths.
#[derive(Debug, Clone)]
pub struct PointState {
    pub sample: FieldSample,
    /// `W^σ_p = Σ_i n_iσ φ_i(r) c_ip`, one vector per spin.
    pub exchange_weights: [Vec<f64>; 2],
}

impl FieldEvaluator {
    pub fn new(wfn: &WavefunctionData) -> Self {
        let orbitals = wfn
            .orbitals
            .iter()
            .filter(|o| o.occupation > 0.0)
            .map(|o| (o.spin_occupations(), o.coefficients.clone()))
            .collect();
        Self {
            gaussians: wfn.gaussians(),
            orbitals,
        }
    }

    pub fn gaussians(&self) -> &[CartesianGaussian] {
        &self.gaussians
    }

    pub fn evaluate(&self, point: [f64; 3]) -> PointState {
        let prims: Vec<PrimitiveDerivs> = self
            .gaussians
            .iter()
            .map(|g| {
                let d = [
                    point[0] - g.center[0],
                    point[1] - g.center[1],
                    point[2] - g.center[2],
                ];
                if g.exponent * dot(d, d) > PRIMITIVE_CUTOFF {
                    PrimitiveDerivs::default()
                } else {
                    g.derivatives(point)
                }
            })
            .collect();
        let n_prim = prims.len();
        let mut sample = FieldSample::default();
        let mut weights = [vec![0.0; n_prim], vec![0.0; n_prim]];
        for (occ, coefs) in &self.orbitals {
            let mut phi = 0.0;
            let mut grad = [0.0; 3];
            let mut lap = 0.0;
            for (c, d) in coefs.iter().zip(&prims) {
                phi += c * d.value;
                grad[0] += c * d.gradient[0];
                grad[1] += c * d.gradient[1];
                grad[2] += c * d.gradient[2];
                lap += c * d.laplacian;
            }
            let g2 = dot(grad, grad);
            for s in 0..2 {
                let n = occ[s];
                if n == 0.0 {
                    continue;
                }
                let f = &mut sample.spin[s];
                f.rho += n * phi * phi;
                for k in 0..3 {
                    f.grad_rho[k] += 2.0 * n * phi * grad[k];
                }
                f.lap_rho += n * (2.0 * phi * lap + 2.0 * g2);
                f.tau += n * g2;
                let np = n * phi;
                for (w, c) in weights[s].iter_mut().zip(coefs) {
                    *w += np * c;
                }
            }
        }
        for f in &mut sample.spin {
            f.rho = f.rho.max(0.0);
            f.tau = f.tau.max(0.0);
        }
        PointState {
            sample,
            exchange_weights: weights,
        }
    }
}

/// Density, gradient, Laplacian and kinetic-energy density at `point`.
pub fn eval_fields(wfn: &WavefunctionData, point: [f64; 3]) -> FieldSample {
    FieldEvaluator::new(wfn).evaluate(point).sample
}

/// Primitive-pair potentials reused at every point.
#[derive(Debug, Clone)]
pub struct ExchangeCache {
    /// (p, q, pair) with p <= q, screened pairs dropped.
    pairs: Vec<(usize, usize, PairData)>,
}

impl ExchangeCache {
    pub fn new(gaussians: &[CartesianGaussian]) -> Result<Self, IntegralError> {
        let mut pairs = Vec::new();
        for p in 0..gaussians.len() {
            for q in p..gaussians.len() {
                let pair = PairData::new(&gaussians[p], &gaussians[q])?;
                if !pair.is_negligible() {
                    pairs.push((p, q, pair));
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn n_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// `-½ Σ_pq W_p W_q V_pq(point)` for each spin.
    pub fn energy_density(&self, point: [f64; 3], weights: &[Vec<f64>; 2]) -> [f64; 2] {
        let mut acc = [0.0; 2];
        for (p, q, pair) in &self.pairs {
            let ww = [
                weights[0][*p] * weights[0][*q],
                weights[1][*p] * weights[1][*q],
            ];
            if ww[0] == 0.0 && ww[1] == 0.0 {
                continue;
            }
            let factor = if p == q { 1.0 } else { 2.0 };
            let v = factor * pair.potential(point);
            acc[0] += ww[0] * v;
            acc[1] += ww[1] * v;
        }
        [-0.5 * acc[0], -0.5 * acc[1]]
    }
}

/// Exact-exchange energy density of both spins at `point`.
pub fn exchange_energy_density(
    evaluator: &FieldEvaluator,
    point: [f64; 3],
    cache: &ExchangeCache,
) -> [f64; 2] {
    let state = evaluator.evaluate(point);
    cache.energy_density(point, &state.exchange_weights)
}
