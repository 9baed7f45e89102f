//! Electrostatic potential of Gaussian product charge distributions
//! (McMurchie-Davidson Hermite expansion).

use std::f64::consts::PI;

use thiserror::Error;

use crate::basis::{dot, sub, CartesianGaussian};
use crate::boys::boys_array;

/// Highest angular momentum per primitive (Cartesian f).
pub const MAX_L: usize = 3;
const MAX_PAIR_L: usize = 2 * MAX_L;
const DIM: usize = MAX_PAIR_L + 1;
const PACKED: usize = DIM * (DIM + 1) * (DIM + 2) / 6;

/// Pairs whose overlap-type prefactor falls below this are skipped.
pub const PAIR_SCREENING: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntegralError {
    #[error("unsupported primitive with angular momentum {l} (maximum {MAX_L})")]
    UnsupportedPrimitiveType { l: usize },
}

/// Geometry-only data of a primitive product, reused across field points.
#[derive(Debug, Clone)]
pub struct PairData {
    exponent: f64,
    center: [f64; 3],
    /// Hermite expansion coefficients per axis, `e[axis][t]`.
    e: [[f64; DIM]; 3],
    powers: [usize; 3],
    /// Coefficient product times 2π/p.
    scale: f64,
    magnitude: f64,
}

impl PairData {
    pub fn new(a: &CartesianGaussian, b: &CartesianGaussian) -> Result<Self, IntegralError> {
        for g in [a, b] {
            let l = g.angular_momentum();
            if l > MAX_L {
                return Err(IntegralError::UnsupportedPrimitiveType { l });
            }
        }
        let p = a.exponent + b.exponent;
        let mu = a.exponent * b.exponent / p;
        let center: [f64; 3] =
            std::array::from_fn(|k| (a.exponent * a.center[k] + b.exponent * b.center[k]) / p);
        let mut e = [[0.0; DIM]; 3];
        let mut powers = [0; 3];
        for k in 0..3 {
            let la = a.powers[k] as usize;
            let lb = b.powers[k] as usize;
            e[k] = hermite_coefficients(
                la,
                lb,
                p,
                a.center[k] - b.center[k],
                center[k] - a.center[k],
                center[k] - b.center[k],
                mu,
            );
            powers[k] = la + lb;
        }
        let ab = sub(a.center, b.center);
        let coef = a.coefficient * b.coefficient;
        let magnitude = (coef * (-mu * dot(ab, ab)).exp() * (PI / p).powf(1.5)).abs();
        Ok(Self {
            exponent: p,
            center,
            e,
            powers,
            scale: coef * 2.0 * PI / p,
            magnitude,
        })
    }

    /// Upper-bound scale of the charge distribution; used for screening.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn is_negligible(&self) -> bool {
        self.magnitude < PAIR_SCREENING
    }

    /// `∫ a(r') b(r') / |point - r'| dr'`.
    pub fn potential(&self, point: [f64; 3]) -> f64 {
        let l = self.powers[0] + self.powers[1] + self.powers[2];
        let pc = sub(self.center, point);
        if l == 0 {
            let mut f0 = [0.0];
            boys_array(0, self.exponent * dot(pc, pc), &mut f0);
            return self.scale * self.e[0][0] * self.e[1][0] * self.e[2][0] * f0[0];
        }
        let r = hermite_integrals(l, self.exponent, pc);
        let mut acc = 0.0;
        for t in 0..=self.powers[0] {
            let et = self.e[0][t];
            if et == 0.0 {
                continue;
            }
            for u in 0..=self.powers[1] {
                let eu = et * self.e[1][u];
                if eu == 0.0 {
                    continue;
                }
                for v in 0..=self.powers[2] {
                    acc += eu * self.e[2][v] * r[index(t, u, v)];
                }
            }
        }
        self.scale * acc
    }
}

/// Coulomb potential at `point` of the product `a·b` of two primitives.
pub fn esp_pair_integral(
    a: &CartesianGaussian,
    b: &CartesianGaussian,
    point: [f64; 3],
) -> Result<f64, IntegralError> {
    Ok(PairData::new(a, b)?.potential(point))
}

/// 1D Hermite coefficients `E^{la,lb}_t` for `t = 0..=la+lb`.
fn hermite_coefficients(
    la: usize,
    lb: usize,
    p: f64,
    xab: f64,
    xpa: f64,
    xpb: f64,
    mu: f64,
) -> [f64; DIM] {
    // table[i][j][t]
    let mut table = [[[0.0; DIM]; MAX_L + 1]; MAX_L + 1];
    table[0][0][0] = (-mu * xab * xab).exp();
    let half_p = 0.5 / p;
    for i in 0..=la {
        for j in 0..=lb {
            if i == 0 && j == 0 {
                continue;
            }
            let (prev, shift) = if j == 0 {
                (table[i - 1][0], xpa)
            } else {
                (table[i][j - 1], xpb)
            };
            for t in 0..=(i + j) {
                let mut v = shift * prev[t];
                if t > 0 {
                    v += half_p * prev[t - 1];
                }
                if t + 1 < DIM {
                    v += (t + 1) as f64 * prev[t + 1];
                }
                table[i][j][t] = v;
            }
        }
    }
    table[la][lb]
}

/// Position of `(t, u, v)` in a table ordered by total degree.
#[inline]
fn index(t: usize, u: usize, v: usize) -> usize {
    let n = t + u + v;
    let m = u + v;
    n * (n + 1) * (n + 2) / 6 + m * (m + 1) / 2 + v
}

/// Hermite Coulomb integrals `R^0_{tuv}` for `t + u + v <= l`.
fn hermite_integrals(l: usize, p: f64, pc: [f64; 3]) -> [f64; PACKED] {
    let mut fm = [0.0; DIM];
    boys_array(l, p * dot(pc, pc), &mut fm[..=l]);
    let mut cur = [0.0; PACKED];
    let mut next = [0.0; PACKED];
    let minus_2p = -2.0 * p;
    for n in (0..=l).rev() {
        std::mem::swap(&mut cur, &mut next);
        // `next` now holds level n + 1.
        cur[0] = minus_2p.powi(n as i32) * fm[n];
        let top = l - n;
        for t in 0..=top {
            for u in 0..=(top - t) {
                for v in 0..=(top - t - u) {
                    if t + u + v == 0 {
                        continue;
                    }
                    cur[index(t, u, v)] = if t > 0 {
                        let mut r = pc[0] * next[index(t - 1, u, v)];
                        if t > 1 {
                            r += (t - 1) as f64 * next[index(t - 2, u, v)];
                        }
                        r
                    } else if u > 0 {
                        let mut r = pc[1] * next[index(0, u - 1, v)];
                        if u > 1 {
                            r += (u - 1) as f64 * next[index(0, u - 2, v)];
                        }
                        r
                    } else {
                        let mut r = pc[2] * next[index(0, 0, v - 1)];
                        if v > 1 {
                            r += (v - 1) as f64 * next[index(0, 0, v - 2)];
                        }
                        r
                    };
                }
            }
        }
    }
    cur
}
