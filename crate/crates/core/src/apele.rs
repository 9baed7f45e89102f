//! Density of effectively localized electrons and its atomic populations.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::esp::IntegralError;
use crate::fields::{ExchangeCache, FieldEvaluator, FieldSample};
use crate::grid::{build_grid, integrate_basins, Center, GridError, GridSettings, MolecularGrid};
use crate::hole::{br_curvature, solve_spin, HoleSolution, HoleStatus};
use crate::wfx::WavefunctionData;

/// Share of significant points allowed to end in fallback before the report
/// is flagged as degraded.
pub const DEGRADED_FRACTION: f64 = 0.01;

pub const ORBITAL_SOURCE_NOTE: &str = "absolute values depend on the orbitals supplied; \
compare trends and limits rather than digits from other functionals";

#[derive(Debug, Error)]
pub enum ApeleError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
    #[error("exchange data has {supplied} rows but the grid has {points} points")]
    ExchangeLength { supplied: usize, points: usize },
    #[error("non-finite value at grid point {index} ({position:?})")]
    NonFinite { index: usize, position: [f64; 3] },
    #[error("group '{group}' refers to atom {index}, but atoms are numbered 1..={atoms}")]
    UnknownAtomIndex {
        group: String,
        index: usize,
        atoms: usize,
    },
    #[error("malformed group definition '{0}' (expected NAME=i,j,...)")]
    MalformedGroup(String),
    #[error("group '{0}' is not defined")]
    UnknownGroup(String),
}

/// `D_u = 2 Σ_σ ρ_σ (1 - N_eff,σ)`; negligible spins contribute nothing.
pub fn ele_density_point(sample: &FieldSample, holes: &[HoleSolution; 2]) -> f64 {
    let mut d = 0.0;
    for s in 0..2 {
        if holes[s].status == HoleStatus::NegligibleDensity || sample.spin[s].is_negligible() {
            continue;
        }
        d += sample.spin[s].rho * (1.0 - holes[s].n_eff);
    }
    2.0 * d
}

/// Where the exact-exchange energy density comes from.
#[derive(Debug, Clone, Default)]
pub enum ExchangeSource {
    /// Evaluated from the orbitals.
    #[default]
    Orbitals,
    /// Supplied per grid point, `[alpha, beta]`, in grid order.
    Supplied(Vec<[f64; 2]>),
}

#[derive(Debug, Clone, Default)]
pub struct ApeleOptions {
    pub exchange: ExchangeSource,
    /// Keep per-point records on the report for debug dumps.
    pub keep_points: bool,
}

/// Everything known about one grid point after the hole solve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointRecord {
    pub position: [f64; 3],
    pub atom: usize,
    pub weight: f64,
    pub sample: FieldSample,
    pub q: [f64; 2],
    pub u_exact: [f64; 2],
    pub holes: [HoleSolution; 2],
    pub ele_density: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub wfx_path: Option<String>,
    pub title: String,
    pub grid: GridSettings,
    pub n_points: usize,
    /// Points where at least one spin density is above the negligible threshold.
    pub n_significant: usize,
    /// Per-spin hole statuses over all points.
    pub hole_statuses: BTreeMap<String, usize>,
    pub fallback_fraction: f64,
    pub exchange_source: String,
    pub note: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtomPopulation {
    /// 1-based, as in the input file.
    pub index: usize,
    pub symbol: String,
    pub apele: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApeleReport {
    pub atom_populations: Vec<AtomPopulation>,
    pub gross_ele: f64,
    /// Quadrature estimate of the electron count.
    pub integrated_electrons: f64,
    pub group_populations: BTreeMap<String, f64>,
    pub q_r: Option<QrIndex>,
    pub degraded: bool,
    pub provenance: Provenance,
    #[serde(skip)]
    pub points: Vec<PointRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct QrIndex {
    pub group: String,
    pub value: f64,
}

pub fn centers_of(wfn: &WavefunctionData) -> Vec<Center> {
    wfn.nuclei
        .iter()
        .map(|n| Center::new(n.position, n.atomic_number))
        .collect()
}

pub fn compute_apele(
    wfn: &WavefunctionData,
    settings: GridSettings,
    options: &ApeleOptions,
) -> Result<ApeleReport, ApeleError> {
    let grid = build_grid(&centers_of(wfn), settings)?;
    compute_apele_on_grid(wfn, &grid, options)
}

pub fn compute_apele_on_grid(
    wfn: &WavefunctionData,
    grid: &MolecularGrid,
    options: &ApeleOptions,
) -> Result<ApeleReport, ApeleError> {
    let evaluator = FieldEvaluator::new(wfn);
    let cache = match &options.exchange {
        ExchangeSource::Orbitals => Some(ExchangeCache::new(evaluator.gaussians())?),
        ExchangeSource::Supplied(rows) => {
            if rows.len() != grid.len() {
                return Err(ApeleError::ExchangeLength {
                    supplied: rows.len(),
                    points: grid.len(),
                });
            }
            None
        }
    };

    let records: Vec<PointRecord> = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let point = grid.points[i];
            let state = evaluator.evaluate(point);
            let mut sample = state.sample;
            let ex = match (&cache, &options.exchange) {
                (Some(c), _) => {
                    if sample.spin.iter().all(|s| s.is_negligible()) {
                        [0.0; 2]
                    } else {
                        c.energy_density(point, &state.exchange_weights)
                    }
                }
                (None, ExchangeSource::Supplied(rows)) => rows[i],
                (None, ExchangeSource::Orbitals) => unreachable!(),
            };
            sample.ex_density = Some(ex);
            let mut q = [0.0; 2];
            let mut u_exact = [0.0; 2];
            let holes: [HoleSolution; 2] = std::array::from_fn(|s| {
                let f = &sample.spin[s];
                if let Ok((qs, _)) = br_curvature(f) {
                    q[s] = qs;
                    u_exact[s] = 2.0 * ex[s] / f.rho;
                }
                solve_spin(f, ex[s])
            });
            let ele_density = ele_density_point(&sample, &holes);
            PointRecord {
                position: point,
                atom: grid.owner_atom[i],
                weight: grid.total_weight(i),
                sample,
                q,
                u_exact,
                holes,
                ele_density,
            }
        })
        .collect();

    for (i, r) in records.iter().enumerate() {
        if !r.ele_density.is_finite() || !r.sample.rho().iter().all(|v| v.is_finite()) {
            return Err(ApeleError::NonFinite {
                index: i,
                position: r.position,
            });
        }
    }

    let d_u: Vec<f64> = records.iter().map(|r| r.ele_density).collect();
    let rho: Vec<f64> = records.iter().map(|r| r.sample.rho().iter().sum()).collect();
    let basins = integrate_basins(grid, &d_u)?;
    let integrated_electrons = integrate_basins(grid, &rho)?.iter().sum();

    let mut hole_statuses: BTreeMap<String, usize> =
        HoleStatus::ALL.iter().map(|s| (s.label().to_string(), 0)).collect();
    let mut n_significant = 0;
    let mut n_fallback = 0;
    for r in &records {
        for h in &r.holes {
            *hole_statuses.entry(h.status.label().to_string()).or_default() += 1;
        }
        if r.sample.spin.iter().any(|s| !s.is_negligible()) {
            n_significant += 1;
            if r.holes.iter().any(|h| h.status == HoleStatus::Fallback) {
                n_fallback += 1;
            }
        }
    }
    let fallback_fraction = if n_significant == 0 {
        0.0
    } else {
        n_fallback as f64 / n_significant as f64
    };

    let atom_populations: Vec<AtomPopulation> = basins
        .iter()
        .enumerate()
        .map(|(a, &v)| AtomPopulation {
            index: a + 1,
            symbol: wfn.nuclei[a].symbol.clone(),
            apele: v,
        })
        .collect();
    let gross_ele = atom_populations.iter().map(|p| p.apele).sum();

    Ok(ApeleReport {
        atom_populations,
        gross_ele,
        integrated_electrons,
        group_populations: BTreeMap::new(),
        q_r: None,
        degraded: fallback_fraction > DEGRADED_FRACTION,
        provenance: Provenance {
            wfx_path: None,
            title: wfn.title.clone(),
            grid: grid.settings,
            n_points: grid.len(),
            n_significant,
            hole_statuses,
            fallback_fraction,
            exchange_source: match options.exchange {
                ExchangeSource::Orbitals => "orbitals".into(),
                ExchangeSource::Supplied(_) => "supplied".into(),
            },
            note: ORBITAL_SOURCE_NOTE.into(),
        },
        points: if options.keep_points { records } else { Vec::new() },
    })
}

/// A named set of atoms, 1-based as written by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomGroup {
    pub name: String,
    pub atoms: Vec<usize>,
}

impl std::str::FromStr for AtomGroup {
    type Err = ApeleError;

    /// Parses `NAME=i,j,...`; an empty list is allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ApeleError::MalformedGroup(s.to_string());
        let (name, list) = s.split_once('=').ok_or_else(bad)?;
        let name = name.trim();
        if name.is_empty() {
            return Err(bad());
        }
        let mut atoms = Vec::new();
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            atoms.push(tok.parse::<usize>().map_err(|_| bad())?);
        }
        Ok(Self {
            name: name.to_string(),
            atoms,
        })
    }
}

/// Adds group sums to the report and sets `q_r` for `q_r_group` (or the only
/// group, when there is exactly one). Returns warnings about overlaps.
pub fn group_apele(
    report: &mut ApeleReport,
    groups: &[AtomGroup],
    q_r_group: Option<&str>,
) -> Result<Vec<String>, ApeleError> {
    let n = report.atom_populations.len();
    let mut warnings = Vec::new();
    let mut owner: BTreeMap<usize, &str> = BTreeMap::new();
    for g in groups {
        let mut members = g.atoms.clone();
        members.sort_unstable();
        members.dedup();
        let mut sum = 0.0;
        for &i in &members {
            if i == 0 || i > n {
                return Err(ApeleError::UnknownAtomIndex {
                    group: g.name.clone(),
                    index: i,
                    atoms: n,
                });
            }
            sum += report.atom_populations[i - 1].apele;
            if let Some(prev) = owner.insert(i, &g.name) {
                if prev != g.name {
                    warnings.push(format!(
                        "atom {i} belongs to both '{prev}' and '{}'",
                        g.name
                    ));
                }
            }
        }
        report.group_populations.insert(g.name.clone(), sum);
    }
    let designated = match q_r_group {
        Some(name) => Some(name.to_string()),
        None if groups.len() == 1 => Some(groups[0].name.clone()),
        None => None,
    };
    if let Some(name) = designated {
        let value = *report
            .group_populations
            .get(&name)
            .ok_or_else(|| ApeleError::UnknownGroup(name.clone()))?;
        report.q_r = (report.gross_ele > 0.0).then(|| QrIndex {
            group: name,
            value: 2.0 * value / report.gross_ele,
        });
    }
    Ok(warnings)
}

impl ApeleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let p = &self.provenance;
        let _ = writeln!(s, "title        {}", p.title);
        if let Some(path) = &p.wfx_path {
            let _ = writeln!(s, "wfx          {path}");
        }
        let _ = writeln!(
            s,
            "grid         {}x{} (becke k={}, size adjustment {})",
            p.grid.n_radial,
            p.grid.n_angular,
            p.grid.becke.iterations,
            if p.grid.becke.size_adjustment { "on" } else { "off" }
        );
        let _ = writeln!(s, "electrons    {:.8}", self.integrated_electrons);
        let _ = writeln!(s);
        let _ = writeln!(s, "{:>5}  {:<4} {:>14}", "atom", "sym", "APELE");
        for a in &self.atom_populations {
            let _ = writeln!(s, "{:>5}  {:<4} {:>14.6}", a.index, a.symbol, a.apele);
        }
        let _ = writeln!(s, "{:>5}  {:<4} {:>14.6}", "", "sum", self.gross_ele);
        if !self.group_populations.is_empty() {
            let _ = writeln!(s);
            let _ = writeln!(s, "{:<12} {:>14}", "group", "APELE");
            for (name, v) in &self.group_populations {
                let _ = writeln!(s, "{name:<12} {v:>14.6}");
            }
        }
        if let Some(q) = &self.q_r {
            let _ = writeln!(s, "Q_r({}) = {:.4}", q.group, q.value);
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "hole statuses (per spin and point):");
        for (k, v) in &p.hole_statuses {
            let _ = writeln!(s, "  {k:<20} {v}");
        }
        if self.degraded {
            let _ = writeln!(
                s,
                "DEGRADED: {:.2}% of significant points fell back to N = 1",
                100.0 * p.fallback_fraction
            );
        }
        let _ = writeln!(s, "note: {}", p.note);
        s
    }

    /// Per-atom table.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["atom", "symbol", "apele"])?;
        for a in &self.atom_populations {
            w.write_record([a.index.to_string(), a.symbol.clone(), format!("{:.12e}", a.apele)])?;
        }
        for (name, v) in &self.group_populations {
            w.write_record(["group".to_string(), name.clone(), format!("{v:.12e}")])?;
        }
        w.write_record(["total".to_string(), String::new(), format!("{:.12e}", self.gross_ele)])?;
        w.flush()?;
        Ok(())
    }

    /// Per-point hole data: rho, Q, u_exact, x, n_eff and status per spin.
    pub fn write_hole_dump<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "x", "y", "z", "atom", "spin", "rho", "q", "u_exact", "hole_x", "n_eff", "status",
        ])?;
        for r in &self.points {
            for s in 0..2 {
                let h = &r.holes[s];
                w.write_record([
                    format!("{:.10e}", r.position[0]),
                    format!("{:.10e}", r.position[1]),
                    format!("{:.10e}", r.position[2]),
                    (r.atom + 1).to_string(),
                    if s == 0 { "alpha" } else { "beta" }.to_string(),
                    format!("{:.10e}", r.sample.spin[s].rho),
                    format!("{:.10e}", r.q[s]),
                    format!("{:.10e}", r.u_exact[s]),
                    format!("{:.10e}", h.x),
                    format!("{:.10e}", h.n_eff),
                    h.status.label().to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Per-point fields, exchange energy density and ELE density.
    pub fn write_field_dump<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "x", "y", "z", "weight", "rho_alpha", "rho_beta", "lap_alpha", "lap_beta", "tau_alpha",
            "tau_beta", "e_x_alpha", "e_x_beta", "ele_density",
        ])?;
        for r in &self.points {
            let f = &r.sample.spin;
            let ex = r.sample.ex_density.unwrap_or([0.0; 2]);
            let vals = [
                r.position[0],
                r.position[1],
                r.position[2],
                r.weight,
                f[0].rho,
                f[1].rho,
                f[0].lap_rho,
                f[1].lap_rho,
                f[0].tau,
                f[1].tau,
                ex[0],
                ex[1],
                r.ele_density,
            ];
            w.write_record(vals.iter().map(|v| format!("{v:.10e}")))?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::SpinFields;

    fn hole(n_eff: f64) -> HoleSolution {
        HoleSolution {
            a: 1.0,
            b: 1.0,
            x: 1.0,
            n_eff,
            u_model: -1.0,
            status: HoleStatus::Converged,
        }
    }

    fn sample(ra: f64, rb: f64) -> FieldSample {
        let mut s = FieldSample::default();
        s.spin[0] = SpinFields {
            rho: ra,
            ..Default::default()
        };
        s.spin[1] = SpinFields {
            rho: rb,
            ..Default::default()
        };
        s
    }

    fn report(pops: &[f64]) -> ApeleReport {
        ApeleReport {
            atom_populations: pops
                .iter()
                .enumerate()
                .map(|(i, &v)| AtomPopulation {
                    index: i + 1,
                    symbol: "C".into(),
                    apele: v,
                })
                .collect(),
            gross_ele: pops.iter().sum(),
            integrated_electrons: 0.0,
            group_populations: BTreeMap::new(),
            q_r: None,
            degraded: false,
            provenance: Provenance {
                wfx_path: None,
                title: String::new(),
                grid: GridSettings::default(),
                n_points: 0,
                n_significant: 0,
                hole_statuses: BTreeMap::new(),
                fallback_fraction: 0.0,
                exchange_source: "orbitals".into(),
                note: String::new(),
            },
            points: Vec::new(),
        }
    }

    #[test]
    fn ele_density_cases() {
        assert_eq!(ele_density_point(&sample(0.1, 0.1), &[hole(1.0), hole(1.0)]), 0.0);
        let d = ele_density_point(&sample(0.1, 0.1), &[hole(0.5), hole(0.5)]);
        assert!((d - 0.2).abs() < 1e-15);
        let d = ele_density_point(&sample(0.3, 0.3), &[hole(0.8), hole(0.8)]);
        assert!((d - 4.0 * 0.3 * 0.2).abs() < 1e-15);
        let d = ele_density_point(&sample(0.1, 0.0), &[hole(0.5), HoleSolution::negligible()]);
        assert!((d - 0.1).abs() < 1e-15);
    }

    #[test]
    fn group_parsing() {
        let g: AtomGroup = "CCH2 = 1, 2,5".parse().unwrap();
        assert_eq!(g.name, "CCH2");
        assert_eq!(g.atoms, vec![1, 2, 5]);
        let e: AtomGroup = "E=".parse().unwrap();
        assert!(e.atoms.is_empty());
        assert!("=1".parse::<AtomGroup>().is_err());
        assert!("A=1,x".parse::<AtomGroup>().is_err());
        assert!("A".parse::<AtomGroup>().is_err());
    }

    #[test]
    fn group_sums_and_qr() {
        let mut r = report(&[0.457, 0.284, 0.294, 0.1]);
        let groups = vec!["HCC=1,2,3".parse().unwrap(), "E=".parse().unwrap()];
        let warnings = group_apele(&mut r, &groups, Some("HCC")).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(r.group_populations["HCC"], 0.457 + 0.284 + 0.294);
        assert_eq!(r.group_populations["E"], 0.0);
        let q = r.q_r.unwrap();
        assert!((q.value - 2.0 * 1.035 / 1.135).abs() < 1e-12);
    }

    #[test]
    fn overlap_warns_and_bad_index_errors() {
        let mut r = report(&[0.1, 0.2]);
        let groups = vec!["A=1,2".parse().unwrap(), "B=2".parse().unwrap()];
        let w = group_apele(&mut r, &groups, None).unwrap();
        assert_eq!(w.len(), 1);
        assert!(r.q_r.is_none());
        let bad = vec!["A=3".parse().unwrap()];
        assert!(matches!(
            group_apele(&mut r, &bad, None),
            Err(ApeleError::UnknownAtomIndex { index: 3, .. })
        ));
        let zero = vec!["A=0".parse().unwrap()];
        assert!(group_apele(&mut r, &zero, None).is_err());
    }
}
