mod common;

use apele::apele::{
    centers_of, compute_apele, compute_apele_on_grid, group_apele, ApeleOptions, ApeleReport, ExchangeSource,
};
use apele::fields::{exchange_energy_density, ExchangeCache, FieldEvaluator};
use apele::grid::{build_grid, GridSettings};

fn run(name: &str, settings: GridSettings) -> ApeleReport {
    compute_apele(&common::load(name), settings, &ApeleOptions::default()).unwrap()
}

fn coarse(name: &str) -> GridSettings {
    match name {
        "h2o" | "ethane" => GridSettings::new(40, 50),
        _ => GridSettings::new(64, 110),
    }
}

#[test]
fn basins_add_up_to_the_gross_count_on_every_fixture() {
    for name in common::ALL_FIXTURES {
        let r = run(name, coarse(name));
        let sum: f64 = r.atom_populations.iter().map(|a| a.apele).sum();
        assert!((sum - r.gross_ele).abs() <= 1e-10, "{name}: {sum} vs {}", r.gross_ele);
        assert!(r.gross_ele >= 0.0);
        for a in &r.atom_populations {
            assert!(a.apele >= 0.0, "{name} atom {}", a.index);
        }
        assert!(!r.degraded, "{name}");
        assert_eq!(r.provenance.hole_statuses["fallback"], 0, "{name}");
        assert!(r.gross_ele <= r.integrated_electrons, "{name}");
    }
}

#[test]
fn supplied_exchange_reproduces_the_orbital_path() {
    let wfn = common::load("h2_2p5A");
    let grid = build_grid(&centers_of(&wfn), GridSettings::new(48, 110)).unwrap();
    let ev = FieldEvaluator::new(&wfn);
    let cache = ExchangeCache::new(ev.gaussians()).unwrap();
    let rows: Vec<[f64; 2]> = grid.points.iter().map(|&p| exchange_energy_density(&ev, p, &cache)).collect();
    let own = compute_apele_on_grid(&wfn, &grid, &ApeleOptions { keep_points: true, ..Default::default() }).unwrap();
    let supplied = compute_apele_on_grid(
        &wfn,
        &grid,
        &ApeleOptions {
            exchange: ExchangeSource::Supplied(rows.clone()),
            keep_points: false,
        },
    )
    .unwrap();
    assert_eq!(own.gross_ele, supplied.gross_ele);
    assert_ne!(own.provenance.exchange_source, supplied.provenance.exchange_source);

    // Per-point records integrate to the same totals.
    assert_eq!(own.points.len(), grid.len());
    let total: f64 = own.points.iter().map(|p| p.weight * p.ele_density).sum();
    assert!((total - own.gross_ele).abs() < 1e-12);

    assert!(compute_apele_on_grid(
        &wfn,
        &grid,
        &ApeleOptions { exchange: ExchangeSource::Supplied(rows[1..].to_vec()), keep_points: false },
    )
    .is_err());
    let densest = (0..grid.len())
        .max_by(|&i, &j| own.points[i].sample.spin[0].rho.total_cmp(&own.points[j].sample.spin[0].rho))
        .unwrap();
    let mut bad = rows;
    bad[densest][0] = f64::NAN;
    let r = compute_apele_on_grid(&wfn, &grid, &ApeleOptions { exchange: ExchangeSource::Supplied(bad), keep_points: false })
        .unwrap();
    assert_eq!(r.provenance.hole_statuses["fallback"], 1);
}

#[test]
fn h2_series_is_grid_stable_and_grows_with_stretch() {
    let mut last = -1.0;
    for name in common::H2_SERIES {
        let fine = run(name, GridSettings::default()).gross_ele;
        let medium = run(name, GridSettings::new(96, 302)).gross_ele;
        assert!((fine - medium).abs() < 1e-3, "{name}: {fine} vs {medium}");
        assert!(fine > last, "{name}: {fine} after {last}");
        last = fine;
    }
}

#[test]
fn groups_on_a_real_report() {
    let mut r = run("ethane", GridSettings::new(40, 50));
    let groups = ["CC=1,2".parse().unwrap(), "H=3,4,5,6,7,8".parse().unwrap()];
    let warnings = group_apele(&mut r, &groups, Some("CC")).unwrap();
    assert!(warnings.is_empty());
    let cc = r.group_populations["CC"];
    let h = r.group_populations["H"];
    assert!((cc + h - r.gross_ele).abs() < 1e-12);
    let qr = r.q_r.clone().unwrap();
    assert_eq!(qr.group, "CC");
    assert!((qr.value - 2.0 * cc / r.gross_ele).abs() < 1e-15);

    let json = r.to_json();
    let back: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(back["atom_populations"].as_array().unwrap().len(), 8);
    assert_eq!(back["gross_ele"].as_f64().unwrap(), r.gross_ele);
    let mut csv = Vec::new();
    r.write_csv(&mut csv).unwrap();
    assert!(String::from_utf8(csv).unwrap().lines().count() >= 1 + 8 + 2);
}
