//! Embedded Lebedev angular rules.

use super::lebedev_data::*;

/// Point counts of the embedded rules, with their polynomial degree.
pub const SUPPORTED_ORDERS: [(usize, u32); 6] =
    [(6, 3), (26, 7), (50, 11), (110, 17), (194, 23), (302, 29)];

/// Unit-sphere nodes `(x, y, z, w)` with weights summing to one.
pub fn rule(n_points: usize) -> Option<&'static [[f64; 4]]> {
    Some(match n_points {
        6 => &LEBEDEV_6[..],
        26 => &LEBEDEV_26[..],
        50 => &LEBEDEV_50[..],
        110 => &LEBEDEV_110[..],
        194 => &LEBEDEV_194[..],
        302 => &LEBEDEV_302[..],
        _ => return None,
    })
}

/// Highest polynomial degree integrated exactly by the `n_points` rule.
pub fn degree(n_points: usize) -> Option<u32> {
    SUPPORTED_ORDERS
        .iter()
        .find(|(n, _)| *n == n_points)
        .map(|(_, d)| *d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_on_unit_sphere_and_weights_normalized() {
        for (n, _) in SUPPORTED_ORDERS {
            let r = rule(n).unwrap();
            assert_eq!(r.len(), n);
            let total: f64 = r.iter().map(|p| p[3]).sum();
            assert!((total - 1.0).abs() < 1e-14);
            for p in r {
                let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                assert!((norm - 1.0).abs() < 1e-14);
            }
        }
        assert!(rule(7).is_none());
    }
}
