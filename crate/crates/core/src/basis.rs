//! Cartesian Gaussian primitives in the `.wfx` type-code convention.

use std::f64::consts::PI;

/// Highest supported `.wfx` primitive type code (Cartesian f).
pub const MAX_TYPE_CODE: u32 = 20;

/// Cartesian powers (l, m, n) for `.wfx` type codes 1..=20.
const POWERS: [[u8; 3]; 20] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [0, 2, 1],
    [1, 2, 0],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

/// Cartesian powers for a type code, or `None` outside 1..=20.
pub fn cartesian_powers(type_code: u32) -> Option<[u8; 3]> {
    if (1..=MAX_TYPE_CODE).contains(&type_code) {
        Some(POWERS[type_code as usize - 1])
    } else {
        None
    }
}

/// Inverse of [`cartesian_powers`].
pub fn type_code(powers: [u8; 3]) -> Option<u32> {
    POWERS
        .iter()
        .position(|p| *p == powers)
        .map(|i| i as u32 + 1)
}

fn double_factorial_odd(n: i32) -> f64 {
    // (2k-1)!! with (-1)!! = 1
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}

/// Normalization constant of `x^l y^m z^n exp(-alpha r^2)`.
pub fn normalization(powers: [u8; 3], alpha: f64) -> f64 {
    let [l, m, n] = powers.map(i32::from);
    let total = l + m + n;
    let df = double_factorial_odd(2 * l - 1)
        * double_factorial_odd(2 * m - 1)
        * double_factorial_odd(2 * n - 1);
    (2.0 * alpha / PI).powf(0.75) * (4.0 * alpha).powf(total as f64 / 2.0) / df.sqrt()
}

/// A scaled Cartesian Gaussian `coefficient * x^l y^m z^n exp(-alpha |r - center|^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianGaussian {
    pub center: [f64; 3],
    pub powers: [u8; 3],
    pub exponent: f64,
    pub coefficient: f64,
}

impl CartesianGaussian {
    /// Unit-normalized primitive.
    pub fn normalized(center: [f64; 3], powers: [u8; 3], exponent: f64) -> Self {
        Self {
            center,
            powers,
            exponent,
            coefficient: normalization(powers, exponent),
        }
    }

    pub fn angular_momentum(&self) -> usize {
        self.powers.iter().map(|&p| p as usize).sum()
    }

    pub fn value(&self, point: [f64; 3]) -> f64 {
        let d = sub(point, self.center);
        let r2 = dot(d, d);
        let mut v = self.coefficient * (-self.exponent * r2).exp();
        for k in 0..3 {
            v *= powi(d[k], self.powers[k] as i32);
        }
        v
    }

    /// Value, gradient and Laplacian at `point`.
    pub fn derivatives(&self, point: [f64; 3]) -> PrimitiveDerivs {
        let d = sub(point, self.center);
        let r2 = dot(d, d);
        let e = self.coefficient * (-self.exponent * r2).exp();
        if e == 0.0 {
            return PrimitiveDerivs::default();
        }
        let f: [[f64; 3]; 3] =
            std::array::from_fn(|k| axis_factors(d[k], self.powers[k] as i32, self.exponent));
        let value = e * f[0][0] * f[1][0] * f[2][0];
        let gradient = [
            e * f[0][1] * f[1][0] * f[2][0],
            e * f[0][0] * f[1][1] * f[2][0],
            e * f[0][0] * f[1][0] * f[2][1],
        ];
        let laplacian = e
            * (f[0][2] * f[1][0] * f[2][0]
                + f[0][0] * f[1][2] * f[2][0]
                + f[0][0] * f[1][0] * f[2][2]);
        PrimitiveDerivs {
            value,
            gradient,
            laplacian,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PrimitiveDerivs {
    pub value: f64,
    pub gradient: [f64; 3],
    pub laplacian: f64,
}

/// The polynomial factors of `x^l exp(-a x^2)` and its first two derivatives,
/// with the exponential divided out.
fn axis_factors(x: f64, l: i32, a: f64) -> [f64; 3] {
    let lf = l as f64;
    let xl = powi(x, l);
    let d1 = lf * powi(x, l - 1) - 2.0 * a * x * xl;
    let d2 = lf * (lf - 1.0) * powi(x, l - 2) - 2.0 * a * (2.0 * lf + 1.0) * xl
        + 4.0 * a * a * x * x * xl;
    [xl, d1, d2]
}

/// `x^n`, with negative powers returning zero (their coefficients vanish).
fn powi(x: f64, n: i32) -> f64 {
    if n < 0 {
        0.0
    } else {
        x.powi(n)
    }
}

pub(crate) fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_codes_cover_s_to_f() {
        assert_eq!(cartesian_powers(1), Some([0, 0, 0]));
        assert_eq!(cartesian_powers(4), Some([0, 0, 1]));
        assert_eq!(cartesian_powers(8), Some([1, 1, 0]));
        assert_eq!(cartesian_powers(20), Some([1, 1, 1]));
        assert_eq!(cartesian_powers(0), None);
        assert_eq!(cartesian_powers(21), None);
        for code in 1..=20 {
            assert_eq!(type_code(cartesian_powers(code).unwrap()), Some(code));
        }
    }

    #[test]
    fn s_normalization() {
        let n = normalization([0, 0, 0], 1.0);
        assert!((n - (2.0 / PI).powf(0.75)).abs() < 1e-15);
    }

    // The squared primitive factorizes into 1D integrals; trapezoid sums are
    // spectrally accurate for Gaussians.
    fn norm_by_quadrature(g: &CartesianGaussian) -> f64 {
        let h = 0.005;
        let axis = |l: i32| {
            (-4000..=4000)
                .map(|i| {
                    let x = i as f64 * h;
                    x.powi(2 * l) * (-2.0 * g.exponent * x * x).exp()
                })
                .sum::<f64>()
                * h
        };
        g.coefficient.powi(2) * g.powers.iter().map(|&l| axis(l as i32)).product::<f64>()
    }

    #[test]
    fn every_type_code_is_unit_normalized() {
        for code in 1..=20 {
            let g = CartesianGaussian::normalized([0.0; 3], cartesian_powers(code).unwrap(), 1.3);
            assert!((norm_by_quadrature(&g) - 1.0).abs() < 1e-12, "code {code}");
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = 1e-5;
        for code in 1..=20 {
            let g = CartesianGaussian::normalized(
                [0.1, -0.2, 0.3],
                cartesian_powers(code).unwrap(),
                0.7,
            );
            let p = [0.4, 0.25, -0.35];
            let d = g.derivatives(p);
            assert!((d.value - g.value(p)).abs() < 1e-14);
            let mut lap = 0.0;
            for k in 0..3 {
                let mut pp = p;
                let mut pm = p;
                pp[k] += h;
                pm[k] -= h;
                let fd = (g.value(pp) - g.value(pm)) / (2.0 * h);
                assert!((fd - d.gradient[k]).abs() < 1e-8, "code {code} axis {k}");
                lap += (g.value(pp) - 2.0 * g.value(p) + g.value(pm)) / (h * h);
            }
            assert!((lap - d.laplacian).abs() < 1e-4, "code {code}");
        }
    }
}
