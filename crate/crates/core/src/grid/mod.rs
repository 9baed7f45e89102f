//! Multicenter molecular quadrature: radial × Lebedev grids around each atom,
//! glued together with Becke cell weights.
//!
//! Points are stored atom by atom, so the subgrid of atom `A` is a contiguous
//! slice. Basin integrals sum that slice with the cell weight of `A`; the
//! molecular integral is the sum of basin integrals in atom order, which
//! makes the basin decomposition exact in floating point.

mod becke;
pub mod lebedev;
#[rustfmt::skip]
mod lebedev_data;
mod radial;

use std::io::Write;
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use becke::{becke_weights, BeckeOptions, BeckePartition};
pub use radial::becke_radial;

use crate::elements;

pub const DEFAULT_RADIAL: usize = 128;
pub const DEFAULT_ANGULAR: usize = 302;
pub const MIN_RADIAL: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("unsupported Lebedev order {0} (supported: 6, 26, 50, 110, 194, 302)")]
    UnsupportedLebedevOrder(usize),
    #[error("at least {MIN_RADIAL} radial points are required, got {0}")]
    TooFewRadialPoints(usize),
    #[error("no Bragg-Slater radius for atomic number {atomic_number}")]
    UnknownElement { atomic_number: u32 },
    #[error("nuclei {a} and {b} coincide")]
    CoincidentNuclei { a: usize, b: usize },
    #[error("geometry has no atoms")]
    EmptyGeometry,
    #[error("{values} values supplied for a grid of {points} points")]
    LengthMismatch { values: usize, points: usize },
    #[error("basin {basin} requested on a grid of {atoms} atoms")]
    UnknownBasin { basin: usize, atoms: usize },
}

/// An atom as seen by the grid builder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Center {
    /// Bohr.
    pub position: [f64; 3],
    pub atomic_number: u32,
}

impl Center {
    pub fn new(position: [f64; 3], atomic_number: u32) -> Self {
        Self {
            position,
            atomic_number,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSettings {
    pub n_radial: usize,
    pub n_angular: usize,
    pub becke: BeckeOptions,
}

impl Default for GridSettings {
    fn default() -> Self {
        Self {
            n_radial: DEFAULT_RADIAL,
            n_angular: DEFAULT_ANGULAR,
            becke: BeckeOptions::default(),
        }
    }
}

impl GridSettings {
    pub fn new(n_radial: usize, n_angular: usize) -> Self {
        Self {
            n_radial,
            n_angular,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct MolecularGrid {
    pub points: Vec<[f64; 3]>,
    /// Radial × angular × Jacobian weights, bohr³.
    pub quad_weights: Vec<f64>,
    pub owner_atom: Vec<usize>,
    /// Cell weight of the owning atom at each point.
    pub becke_weights: Vec<f64>,
    pub settings: GridSettings,
    atom_ranges: Vec<Range<usize>>,
}

/// Radius that sets the radial scale: the full Bragg radius for hydrogen,
/// half of it otherwise.
pub fn radial_scale(atomic_number: u32) -> Result<f64, GridError> {
    let r = elements::bragg_radius(atomic_number)
        .ok_or(GridError::UnknownElement { atomic_number })?;
    Ok(if atomic_number == 1 { r } else { 0.5 * r })
}

pub fn build_grid(centers: &[Center], settings: GridSettings) -> Result<MolecularGrid, GridError> {
    if settings.n_radial < MIN_RADIAL {
        return Err(GridError::TooFewRadialPoints(settings.n_radial));
    }
    let angular = lebedev::rule(settings.n_angular)
        .ok_or(GridError::UnsupportedLebedevOrder(settings.n_angular))?;
    let partition = BeckePartition::new(centers, settings.becke)?;
    let scales = centers
        .iter()
        .map(|c| radial_scale(c.atomic_number))
        .collect::<Result<Vec<_>, _>>()?;

    let per_atom: Vec<Vec<([f64; 3], f64, f64)>> = centers
        .par_iter()
        .enumerate()
        .map(|(atom, center)| {
            let mut cell = vec![0.0; centers.len()];
            let radial = becke_radial(settings.n_radial, scales[atom]);
            let mut out = Vec::with_capacity(radial.len() * angular.len());
            for &(r, wr) in &radial {
                for node in angular {
                    let p = [
                        center.position[0] + r * node[0],
                        center.position[1] + r * node[1],
                        center.position[2] + r * node[2],
                    ];
                    partition.weights_into(p, &mut cell);
                    out.push((p, wr * node[3] * 4.0 * std::f64::consts::PI, cell[atom]));
                }
            }
            out
        })
        .collect();

    let total: usize = per_atom.iter().map(Vec::len).sum();
    let mut grid = MolecularGrid {
        points: Vec::with_capacity(total),
        quad_weights: Vec::with_capacity(total),
        owner_atom: Vec::with_capacity(total),
        becke_weights: Vec::with_capacity(total),
        settings,
        atom_ranges: Vec::with_capacity(centers.len()),
    };
    for (atom, pts) in per_atom.into_iter().enumerate() {
        let start = grid.points.len();
        for (p, w, b) in pts {
            grid.points.push(p);
            grid.quad_weights.push(w);
            grid.owner_atom.push(atom);
            grid.becke_weights.push(b);
        }
        grid.atom_ranges.push(start..grid.points.len());
    }
    Ok(grid)
}

impl MolecularGrid {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn n_atoms(&self) -> usize {
        self.atom_ranges.len()
    }

    /// Index range of the points generated by `atom`.
    pub fn atom_range(&self, atom: usize) -> Range<usize> {
        self.atom_ranges[atom].clone()
    }

    /// Full integration weight (quadrature × cell) of each point.
    pub fn total_weight(&self, index: usize) -> f64 {
        self.quad_weights[index] * self.becke_weights[index]
    }

    /// Writes `x,y,z,quad_weight,owner,becke_weight` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "x,y,z,quad_weight,owner,becke_weight")?;
        for i in 0..self.len() {
            let p = self.points[i];
            writeln!(
                out,
                "{:e},{:e},{:e},{:e},{},{:e}",
                p[0], p[1], p[2], self.quad_weights[i], self.owner_atom[i], self.becke_weights[i]
            )?;
        }
        Ok(())
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// `Σ quad_weight · becke_weight · value`, over one basin or the whole grid.
pub fn integrate(grid: &MolecularGrid, values: &[f64], basin: Option<usize>) -> Result<f64, GridError> {
    if values.len() != grid.len() {
        return Err(GridError::LengthMismatch {
            values: values.len(),
            points: grid.len(),
        });
    }
    let basin_sum = |atom: usize| {
        let mut acc = CompensatedSum::default();
        for i in grid.atom_range(atom) {
            acc.add(grid.total_weight(i) * values[i]);
        }
        acc.value()
    };
    match basin {
        Some(atom) if atom >= grid.n_atoms() => Err(GridError::UnknownBasin {
            basin: atom,
            atoms: grid.n_atoms(),
        }),
        Some(atom) => Ok(basin_sum(atom)),
        None => Ok((0..grid.n_atoms()).map(basin_sum).sum()),
    }
}

/// Basin integrals of every atom, in atom order.
pub fn integrate_basins(grid: &MolecularGrid, values: &[f64]) -> Result<Vec<f64>, GridError> {
    (0..grid.n_atoms())
        .map(|a| integrate(grid, values, Some(a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn hydrogen() -> Vec<Center> {
        vec![Center::new([0.0; 3], 1)]
    }

    fn radial_values(grid: &MolecularGrid, f: impl Fn(f64) -> f64) -> Vec<f64> {
        grid.points
            .iter()
            .map(|p| f((p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()))
            .collect()
    }

    #[test]
    fn single_hydrogen_counts() {
        let grid = build_grid(&hydrogen(), GridSettings::default()).unwrap();
        assert_eq!(grid.len(), 38_656);
        assert!(grid.owner_atom.iter().all(|&a| a == 0));
        assert!(grid.becke_weights.iter().all(|&w| w == 1.0));
        assert!(grid.quad_weights.iter().all(|&w| w >= 0.0));
    }

    #[test]
    fn gaussian_integral() {
        let grid = build_grid(&hydrogen(), GridSettings::default()).unwrap();
        let v = integrate(&grid, &radial_values(&grid, |r| (-r * r).exp()), None).unwrap();
        assert!((v - PI.powf(1.5)).abs() < 1e-8, "{v}");
    }

    #[test]
    fn hydrogenic_density_normalized() {
        let grid = build_grid(&hydrogen(), GridSettings::default()).unwrap();
        let v = integrate(&grid, &radial_values(&grid, |r| (-2.0 * r).exp() / PI), None).unwrap();
        assert!((v - 1.0).abs() < 1e-6, "{v}");
    }

    #[test]
    fn zero_values() {
        let grid = build_grid(&hydrogen(), GridSettings::new(16, 6)).unwrap();
        assert_eq!(integrate(&grid, &vec![0.0; grid.len()], None).unwrap(), 0.0);
    }

    #[test]
    fn two_atom_counts_and_partition() {
        let centers = vec![Center::new([0.0; 3], 1), Center::new([0.0, 0.0, 1.4], 8)];
        let grid = build_grid(&centers, GridSettings::new(32, 50)).unwrap();
        assert_eq!(grid.len(), 2 * 32 * 50);
        let partition = BeckePartition::new(&centers, BeckeOptions::default()).unwrap();
        let mut w = [0.0; 2];
        for (i, p) in grid.points.iter().enumerate() {
            partition.weights_into(*p, &mut w);
            assert!((w[0] + w[1] - 1.0).abs() < 1e-12);
            assert_eq!(w[grid.owner_atom[i]], grid.becke_weights[i]);
        }
    }

    #[test]
    fn basins_add_up_exactly() {
        let centers = vec![
            Center::new([0.0; 3], 8),
            Center::new([1.43, 1.1, 0.0], 1),
            Center::new([-1.43, 1.1, 0.0], 1),
        ];
        let grid = build_grid(&centers, GridSettings::new(40, 110)).unwrap();
        let values: Vec<f64> = grid
            .points
            .iter()
            .map(|p| (-(p[0] * p[0] + (p[1] - 0.3).powi(2) + p[2] * p[2])).exp())
            .collect();
        let total = integrate(&grid, &values, None).unwrap();
        let by_basin: f64 = (0..3).map(|a| integrate(&grid, &values, Some(a)).unwrap()).sum();
        assert_eq!(total, by_basin);
        assert!((total - PI.powf(1.5)).abs() < 1e-3, "{total}");
    }

    #[test]
    fn error_paths() {
        let grid = build_grid(&hydrogen(), GridSettings::new(8, 6)).unwrap();
        assert!(matches!(
            integrate(&grid, &[1.0], None),
            Err(GridError::LengthMismatch { .. })
        ));
        assert!(matches!(
            integrate(&grid, &vec![1.0; grid.len()], Some(1)),
            Err(GridError::UnknownBasin { .. })
        ));
        assert_eq!(
            build_grid(&hydrogen(), GridSettings::new(32, 38)).unwrap_err(),
            GridError::UnsupportedLebedevOrder(38)
        );
        assert_eq!(
            build_grid(&hydrogen(), GridSettings::new(4, 6)).unwrap_err(),
            GridError::TooFewRadialPoints(4)
        );
        assert_eq!(
            build_grid(&[Center::new([0.0; 3], 118)], GridSettings::new(8, 6)).unwrap_err(),
            GridError::UnknownElement { atomic_number: 118 }
        );
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        acc.add(1.0);
        for _ in 0..1000 {
            acc.add(1e-17);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-14).abs() < 1e-25);
    }
}
