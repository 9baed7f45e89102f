//! Becke's radial quadrature: Gauss-Chebyshev (second kind) nodes mapped to
//! `r = rm (1 + x) / (1 - x)`.

use std::f64::consts::PI;

/// Radial nodes and weights for `∫_0^∞ f(r) r² dr`; the `r²` measure and the
/// mapping Jacobian `2 rm / (1 - x)²` are folded into the weights.
pub fn becke_radial(n: usize, rm: f64) -> Vec<(f64, f64)> {
    let step = PI / (n as f64 + 1.0);
    (1..=n)
        .map(|i| {
            let theta = i as f64 * step;
            let x = theta.cos();
            let sin = theta.sin();
            // Chebyshev-II weight divided by sqrt(1 - x²).
            let w_x = step * sin;
            let r = rm * (1.0 + x) / (1.0 - x);
            let jacobian = 2.0 * rm / ((1.0 - x) * (1.0 - x));
            (r, w_x * jacobian * r * r)
        })
        .collect()
}
