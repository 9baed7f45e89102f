mod common;

use apele::diagnostics::{
    classify, d1_diagnostic, linear_regression, overlap_from_y, pearson, pearson_matrix, read_series_csv,
    t1_diagnostic, y_index, AmplitudeData, DiagnosticKind, DiagnosticSeries, ElementClass, Severity,
    A_LAMBDA_BANDS,
};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::Rng;

fn random_amplitudes(rng: &mut impl Rng) -> AmplitudeData {
    let (r, c) = (rng.gen_range(1..9), rng.gen_range(1..15));
    let m = DMatrix::from_fn(r, c, |_, _| rng.gen_range(-0.1..0.1));
    AmplitudeData::new(m, 2 * r).unwrap()
}

#[test]
fn d1_matches_jacobi_svd() {
    let mut rng = common::rng(41);
    for _ in 0..100 {
        let amps = random_amplitudes(&mut rng);
        let d1 = d1_diagnostic(&amps).unwrap();
        let oracle = common::jacobi_singular_values(&amps.t1)[0];
        assert!((d1 - oracle).abs() <= 1e-10 * oracle, "{d1} vs {oracle}");
    }
}

#[test]
fn norm_inequalities_hold() {
    let mut rng = common::rng(42);
    for _ in 0..100 {
        let amps = random_amplitudes(&mut rng);
        let t1 = t1_diagnostic(&amps).unwrap();
        let d1 = d1_diagnostic(&amps).unwrap();
        let n = amps.n_correlated as f64;
        let rank = amps.t1.nrows().min(amps.t1.ncols()) as f64;
        // ‖A‖₂ <= ‖A‖_F <= √rank ‖A‖₂
        assert!(d1 <= t1 * n.sqrt() * (1.0 + 1e-12));
        assert!(t1 * n.sqrt() <= rank.sqrt() * d1 * (1.0 + 1e-12));
    }
}

#[test]
fn t1_ignores_matrix_shape() {
    let mut rng = common::rng(43);
    let values: Vec<f64> = (0..24).map(|_| rng.gen_range(-0.05..0.05)).collect();
    let shapes = [(1, 24), (2, 12), (3, 8), (4, 6), (6, 4), (24, 1)];
    let t: Vec<f64> = shapes
        .iter()
        .map(|&(r, c)| t1_diagnostic(&AmplitudeData::new(DMatrix::from_row_slice(r, c, &values), 10).unwrap()).unwrap())
        .collect();
    for v in &t {
        assert!((v - t[0]).abs() < 1e-15);
    }
}

proptest! {
    #[test]
    fn pearson_is_affine_invariant(
        xs in prop::collection::vec(-10.0..10.0f64, 3..12),
        noise in prop::collection::vec(-1.0..1.0f64, 12),
        scale in 0.1..50.0f64,
        shift in -100.0..100.0f64,
    ) {
        let ys: Vec<f64> = xs.iter().zip(&noise).map(|(x, e)| 0.5 * x + e).collect();
        let Some(r) = pearson(&xs, &ys) else { return Ok(()); };
        let moved: Vec<f64> = ys.iter().map(|y| scale * y + shift).collect();
        prop_assert!((pearson(&xs, &moved).unwrap() - r).abs() < 1e-9);
        let neg: Vec<f64> = ys.iter().map(|y| -y).collect();
        prop_assert!((pearson(&xs, &neg).unwrap() + r).abs() < 1e-12);
        prop_assert!((pearson(&ys, &xs).unwrap() - r).abs() < 1e-12);
        prop_assert!(r.abs() <= 1.0);
    }

    #[test]
    fn regression_recovers_exact_lines(
        xs in prop::collection::hash_set(-100i32..100, 2..10),
        slope in -5.0..5.0f64,
        intercept in -5.0..5.0f64,
    ) {
        let xs: Vec<f64> = xs.into_iter().map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| intercept + slope * x).collect();
        let fit = linear_regression(&DiagnosticSeries::from_values("x", &xs), &DiagnosticSeries::from_values("y", &ys)).unwrap();
        prop_assert!((fit.slope - slope).abs() < 1e-9);
        prop_assert!((fit.intercept - intercept).abs() < 1e-7);
    }

    #[test]
    fn y_and_overlap_are_inverse(t in 0.0..=1.0f64) {
        let y = y_index(t).unwrap();
        prop_assert!((0.0..=1.0).contains(&y));
        prop_assert!((overlap_from_y(y).unwrap() - t).abs() < 1e-7);
    }
}

#[test]
fn classification_steps_at_thresholds() {
    use DiagnosticKind::*;
    use ElementClass::*;
    let cases = [
        (T1, Organic, 0.02),
        (T1, ThreeD, 0.05),
        (T1, FourD, 0.045),
        (D1, ThreeD, 0.15),
        (D1, FourD, 0.12),
        (PercentTae, Organic, 5.0),
        (PercentTae, Organic, 10.0),
        (ALambda, Organic, A_LAMBDA_BANDS[0]),
        (ALambda, Organic, A_LAMBDA_BANDS[1]),
        (ALambda, Organic, A_LAMBDA_BANDS[2]),
    ];
    for (kind, class, edge) in cases {
        let below = classify(kind, edge - 1e-9, class);
        let above = classify(kind, edge + 1e-9, class);
        assert_ne!(below, above, "{kind:?} {class:?} at {edge}");
    }
    assert_eq!(classify(D1, 0.5, Organic), Severity::NoThreshold);
}

#[test]
fn series_from_csv_with_tags_in_any_order() {
    let table = "tag,A,B\n# comment\nr1,1,2\nr2,2,4.5\nr3,3,5.5\n";
    let series = read_series_csv(table.as_bytes()).unwrap();
    let shuffled = DiagnosticSeries::new(
        "C",
        vec![("r3".into(), 3.0), ("r1".into(), 1.0), ("r2".into(), 2.0)],
    )
    .unwrap();
    let mut all = series.clone();
    all.push(shuffled);
    let m = pearson_matrix(&all).unwrap();
    assert!((m.get("A", "C").unwrap() - 100.0).abs() < 1e-12);
    let missing = DiagnosticSeries::new("D", vec![("r1".into(), 1.0), ("r9".into(), 2.0), ("r2".into(), 0.0)]).unwrap();
    assert!(pearson_matrix(&[series[0].clone(), missing]).is_err());
    assert!(read_series_csv("tag,A\nr1,abc\n".as_bytes()).is_err());
}
