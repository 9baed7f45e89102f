//! Becke fuzzy-cell partition of space among atoms.

use serde::{Deserialize, Serialize};

use super::{Center, GridError};
use crate::elements;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeckeOptions {
    /// Number of times the cell polynomial `p(μ) = (3μ - μ³)/2` is iterated.
    pub iterations: u32,
    /// Heteronuclear cell-size adjustment with Bragg-Slater radii.
    pub size_adjustment: bool,
}

impl Default for BeckeOptions {
    fn default() -> Self {
        Self {
            iterations: 3,
            size_adjustment: false,
        }
    }
}

/// Geometry-dependent data for evaluating cell weights at many points.
#[derive(Debug, Clone)]
pub struct BeckePartition {
    positions: Vec<[f64; 3]>,
    /// 1 / R_AB, row-major.
    inv_dist: Vec<f64>,
    /// Size-adjustment coefficients a_AB, row-major; zero when disabled.
    adjust: Vec<f64>,
    iterations: u32,
}

impl BeckePartition {
    pub fn new(centers: &[Center], options: BeckeOptions) -> Result<Self, GridError> {
        let n = centers.len();
        if n == 0 {
            return Err(GridError::EmptyGeometry);
        }
        let mut inv_dist = vec![0.0; n * n];
        let mut adjust = vec![0.0; n * n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let d = distance(centers[a].position, centers[b].position);
                if d == 0.0 {
                    return Err(GridError::CoincidentNuclei { a, b });
                }
                inv_dist[a * n + b] = 1.0 / d;
                if options.size_adjustment {
                    let ra = bragg(centers[a].atomic_number)?;
                    let rb = bragg(centers[b].atomic_number)?;
                    let chi = ra / rb;
                    let u = (chi - 1.0) / (chi + 1.0);
                    adjust[a * n + b] = if u == 0.0 {
                        0.0
                    } else {
                        (u / (u * u - 1.0)).clamp(-0.5, 0.5)
                    };
                }
            }
        }
        Ok(Self {
            positions: centers.iter().map(|c| c.position).collect(),
            inv_dist,
            adjust,
            iterations: options.iterations,
        })
    }

    pub fn n_atoms(&self) -> usize {
        self.positions.len()
    }

    /// Normalized cell weights of every atom at `point`, written to `out`.
    pub fn weights_into(&self, point: [f64; 3], out: &mut [f64]) {
        let n = self.n_atoms();
        debug_assert_eq!(out.len(), n);
        if n == 1 {
            out[0] = 1.0;
            return;
        }
        let dist: Vec<f64> = self.positions.iter().map(|&p| distance(point, p)).collect();
        out.fill(1.0);
        for a in 0..n {
            for b in 0..a {
                let mu = (dist[a] - dist[b]) * self.inv_dist[a * n + b];
                let s_ab = self.cell_function(mu, self.adjust[a * n + b]);
                let s_ba = self.cell_function(-mu, self.adjust[b * n + a]);
                out[a] *= s_ab;
                out[b] *= s_ba;
            }
        }
        let total: f64 = out.iter().sum();
        if total > 0.0 {
            for w in out.iter_mut() {
                *w /= total;
            }
        } else {
            // Every cell product underflowed; give the point to the nearest atom.
            let nearest = dist
                .iter()
                .enumerate()
                .min_by(|x, y| x.1.total_cmp(y.1))
                .map(|(i, _)| i)
                .unwrap_or(0);
            out.fill(0.0);
            out[nearest] = 1.0;
        }
    }

    fn cell_function(&self, mu: f64, a: f64) -> f64 {
        let mut f = mu + a * (1.0 - mu * mu);
        for _ in 0..self.iterations {
            f = 1.5 * f - 0.5 * f * f * f;
        }
        0.5 * (1.0 - f)
    }
}

fn bragg(z: u32) -> Result<f64, GridError> {
    elements::bragg_radius(z).ok_or(GridError::UnknownElement { atomic_number: z })
}

fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

/// Normalized per-atom cell weights at a single point.
pub fn becke_weights(
    point: [f64; 3],
    centers: &[Center],
    options: BeckeOptions,
) -> Result<Vec<f64>, GridError> {
    let partition = BeckePartition::new(centers, options)?;
    let mut out = vec![0.0; centers.len()];
    partition.weights_into(point, &mut out);
    Ok(out)
}
