//! Nondynamic-correlation diagnostics computed from supplied amplitudes,
//! energies and occupations, plus the correlation and regression analyses
//! used to compare them.

use std::collections::HashSet;
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DiagnosticsError {
    #[error("amplitude matrix is empty")]
    EmptyMatrix,
    #[error("number of correlated electrons must be positive")]
    NoCorrelatedElectrons,
    #[error("D1 is zero; T1/D1 is undefined")]
    DivisionByZeroDomain,
    #[error("{0} is zero")]
    ZeroDenominator(&'static str),
    #[error("exact-exchange fraction {0} is outside (0, 1]")]
    LambdaOutOfRange(f64),
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("missing field '{0}'")]
    MissingField(&'static str),
    #[error("unknown diagnostic kind '{0}'")]
    UnknownKind(String),
    #[error("unknown element class '{0}' (expected organic, 3d or 4d)")]
    UnknownClass(String),
    #[error("series '{series}' does not share tags with '{reference}': {tags:?}")]
    TagMismatch {
        series: String,
        reference: String,
        tags: Vec<String>,
    },
    #[error("series '{series}' repeats tag '{tag}'")]
    DuplicateTag { series: String, tag: String },
    #[error("at least 2 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("predictor series is constant")]
    ConstantPredictor,
    #[error("malformed amplitude data: {0}")]
    MalformedAmplitudes(String),
    #[error("malformed series table at row {row}: {message}")]
    MalformedSeries { row: usize, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Singles amplitudes (occupied × virtual).
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeData {
    pub t1: DMatrix<f64>,
    /// Valence electrons only.
    pub n_correlated: usize,
}

#[derive(Deserialize)]
struct AmplitudeJson {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
    n_correlated: usize,
}

impl AmplitudeData {
    pub fn new(t1: DMatrix<f64>, n_correlated: usize) -> Result<Self, DiagnosticsError> {
        if t1.is_empty() {
            return Err(DiagnosticsError::EmptyMatrix);
        }
        if n_correlated == 0 {
            return Err(DiagnosticsError::NoCorrelatedElectrons);
        }
        Ok(Self { t1, n_correlated })
    }

    /// `{rows, cols, values (row-major), n_correlated}`
    pub fn from_json(text: &str) -> Result<Self, DiagnosticsError> {
        let raw: AmplitudeJson = serde_json::from_str(text)?;
        if raw.values.len() != raw.rows * raw.cols {
            return Err(DiagnosticsError::MalformedAmplitudes(format!(
                "values has {} entries, rows × cols = {}",
                raw.values.len(),
                raw.rows * raw.cols
            )));
        }
        Self::new(
            DMatrix::from_row_slice(raw.rows, raw.cols, &raw.values),
            raw.n_correlated,
        )
    }

    /// Headerless CSV, one matrix row per line.
    pub fn from_csv<R: Read>(reader: R, n_correlated: usize) -> Result<Self, DiagnosticsError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut values = Vec::new();
        let mut cols = None;
        let mut rows = 0;
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            if cols.is_some_and(|c| c != rec.len()) {
                return Err(DiagnosticsError::MalformedAmplitudes(format!(
                    "row {} has {} columns, expected {}",
                    i + 1,
                    rec.len(),
                    cols.unwrap_or(0)
                )));
            }
            cols = Some(rec.len());
            for field in rec.iter() {
                values.push(field.parse::<f64>().map_err(|_| {
                    DiagnosticsError::MalformedAmplitudes(format!(
                        "row {}: '{field}' is not a number",
                        i + 1
                    ))
                })?);
            }
            rows += 1;
        }
        Self::new(
            DMatrix::from_row_slice(rows, cols.unwrap_or(0), &values),
            n_correlated,
        )
    }
}

/// `‖t₁‖_F / √n`
pub fn t1_diagnostic(amps: &AmplitudeData) -> Result<f64, DiagnosticsError> {
    if amps.t1.is_empty() {
        return Err(DiagnosticsError::EmptyMatrix);
    }
    if amps.n_correlated == 0 {
        return Err(DiagnosticsError::NoCorrelatedElectrons);
    }
    Ok(amps.t1.norm() / (amps.n_correlated as f64).sqrt())
}

/// Largest singular value of the amplitude matrix.
pub fn d1_diagnostic(amps: &AmplitudeData) -> Result<f64, DiagnosticsError> {
    if amps.t1.is_empty() {
        return Err(DiagnosticsError::EmptyMatrix);
    }
    let sv = amps.t1.clone().svd(false, false).singular_values;
    Ok(sv.iter().copied().fold(0.0, f64::max))
}

pub fn t1_d1_ratio(t1: f64, d1: f64) -> Result<f64, DiagnosticsError> {
    if d1 == 0.0 {
        return Err(DiagnosticsError::DivisionByZeroDomain);
    }
    Ok(t1 / d1)
}

/// Atomization energies from several methods. Any field may be absent;
/// each diagnostic asks only for what it needs.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergyRecord {
    pub tae_ccsd_t: Option<f64>,
    pub tae_ccsd: Option<f64>,
    pub tae_hybrid: Option<f64>,
    pub tae_hf100: Option<f64>,
    pub lambda: Option<f64>,
    #[serde(default)]
    pub unit: Option<String>,
}

/// `100 (TAE[CCSD(T)] - TAE[CCSD]) / TAE[CCSD(T)]`
pub fn percent_tae(rec: &EnergyRecord) -> Result<f64, DiagnosticsError> {
    let full = rec.tae_ccsd_t.ok_or(DiagnosticsError::MissingField("tae_ccsd_t"))?;
    let ccsd = rec.tae_ccsd.ok_or(DiagnosticsError::MissingField("tae_ccsd"))?;
    if full == 0.0 {
        return Err(DiagnosticsError::ZeroDenominator("tae_ccsd_t"));
    }
    Ok(100.0 * (full - ccsd) / full)
}

/// `(1 - TAE[hybrid] / TAE[100% exact exchange]) / λ`
pub fn a_lambda(rec: &EnergyRecord) -> Result<f64, DiagnosticsError> {
    let hybrid = rec.tae_hybrid.ok_or(DiagnosticsError::MissingField("tae_hybrid"))?;
    let hf = rec.tae_hf100.ok_or(DiagnosticsError::MissingField("tae_hf100"))?;
    let lambda = rec.lambda.ok_or(DiagnosticsError::MissingField("lambda"))?;
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(DiagnosticsError::LambdaOutOfRange(lambda));
    }
    if hf == 0.0 {
        return Err(DiagnosticsError::ZeroDenominator("tae_hf100"));
    }
    Ok((1.0 - hybrid / hf) / lambda)
}

/// Diradical character `y = 1 - 2T/(1 + T²)` from the HOMO-LUMO overlap `T`.
pub fn y_index(t: f64) -> Result<f64, DiagnosticsError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(DiagnosticsError::OutOfRange {
            what: "T",
            value: t,
        });
    }
    Ok(1.0 - 2.0 * t / (1.0 + t * t))
}

/// `y` with `T = (n_homo - n_lumo) / 2`.
pub fn y_from_occupations(n_homo: f64, n_lumo: f64) -> Result<f64, DiagnosticsError> {
    for (what, value) in [("n_homo", n_homo), ("n_lumo", n_lumo)] {
        if !(0.0..=2.0).contains(&value) {
            return Err(DiagnosticsError::OutOfRange { what, value });
        }
    }
    if n_homo < n_lumo {
        return Err(DiagnosticsError::OutOfRange {
            what: "n_homo - n_lumo",
            value: n_homo - n_lumo,
        });
    }
    y_index(0.5 * (n_homo - n_lumo))
}

/// Inverse of [`y_index`] on `[0, 1]`.
pub fn overlap_from_y(y: f64) -> Result<f64, DiagnosticsError> {
    if !(0.0..=1.0).contains(&y) {
        return Err(DiagnosticsError::OutOfRange {
            what: "y",
            value: y,
        });
    }
    // T² - (2/(1-y)) T + 1 = 0, smaller root.
    if y == 1.0 {
        return Ok(0.0);
    }
    let k = 1.0 / (1.0 - y);
    Ok(1.0 / (k + (k * k - 1.0).max(0.0).sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagnosticKind {
    T1,
    D1,
    PercentTae,
    ALambda,
}

impl FromStr for DiagnosticKind {
    type Err = DiagnosticsError;

    /// Accepts decorated names such as `%TAE[(T)]` or `A_lambda[M06]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let base = s.split('[').next().unwrap_or("").trim().to_ascii_lowercase();
        match base.as_str() {
            "t1" => Ok(Self::T1),
            "d1" => Ok(Self::D1),
            "%tae" | "percent_tae" | "tae" => Ok(Self::PercentTae),
            "a_lambda" | "alambda" | "a" => Ok(Self::ALambda),
            _ => Err(DiagnosticsError::UnknownKind(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementClass {
    Organic,
    #[serde(rename = "3d")]
    ThreeD,
    #[serde(rename = "4d")]
    FourD,
}

impl FromStr for ElementClass {
    type Err = DiagnosticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "organic" => Ok(Self::Organic),
            "3d" => Ok(Self::ThreeD),
            "4d" => Ok(Self::FourD),
            _ => Err(DiagnosticsError::UnknownClass(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    BelowThreshold,
    DynamicDominated,
    Mild,
    Moderate,
    Severe,
    Strong,
    /// No published threshold for this kind and element class.
    NoThreshold,
}

impl Severity {
    pub fn label(self) -> &'static str {
        match self {
            Severity::BelowThreshold => "below_threshold",
            Severity::DynamicDominated => "dynamic_dominated",
            Severity::Mild => "mild",
            Severity::Moderate => "moderate",
            Severity::Severe => "severe",
            Severity::Strong => "strong",
            Severity::NoThreshold => "no_threshold",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A_λ band edges. The inner edge sits halfway between the "mild" (0.15) and
/// "moderate" (0.30) anchor values.
pub const A_LAMBDA_BANDS: [f64; 3] = [0.10, 0.225, 0.50];

pub fn classify(kind: DiagnosticKind, value: f64, class: ElementClass) -> Severity {
    let exceeds = |hit: bool| {
        if hit {
            Severity::Severe
        } else {
            Severity::BelowThreshold
        }
    };
    match kind {
        DiagnosticKind::T1 => exceeds(
            value
                > match class {
                    ElementClass::Organic => 0.02,
                    ElementClass::ThreeD => 0.05,
                    ElementClass::FourD => 0.045,
                },
        ),
        DiagnosticKind::D1 => match class {
            ElementClass::Organic => Severity::NoThreshold,
            ElementClass::ThreeD => exceeds(value > 0.15),
            ElementClass::FourD => exceeds(value >= 0.12),
        },
        DiagnosticKind::PercentTae => {
            if value < 5.0 {
                Severity::Mild
            } else if value <= 10.0 {
                Severity::Moderate
            } else {
                Severity::Severe
            }
        }
        DiagnosticKind::ALambda => {
            let [lo, mid, hi] = A_LAMBDA_BANDS;
            if value < lo {
                Severity::DynamicDominated
            } else if value < mid {
                Severity::Mild
            } else if value <= hi {
                Severity::Moderate
            } else {
                Severity::Strong
            }
        }
    }
}

/// A named series of tagged values (a table row such as "APELE" over bond
/// lengths).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticSeries {
    pub name: String,
    pub points: Vec<(String, f64)>,
}

impl DiagnosticSeries {
    pub fn new(name: impl Into<String>, points: Vec<(String, f64)>) -> Result<Self, DiagnosticsError> {
        let name = name.into();
        let mut seen = HashSet::new();
        for (tag, _) in &points {
            if !seen.insert(tag.as_str()) {
                return Err(DiagnosticsError::DuplicateTag {
                    series: name,
                    tag: tag.clone(),
                });
            }
        }
        Ok(Self { name, points })
    }

    /// Builds a series from values tagged `0, 1, 2, ...`.
    pub fn from_values(name: impl Into<String>, values: &[f64]) -> Self {
        Self {
            name: name.into(),
            points: values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i.to_string(), v))
                .collect(),
        }
    }

    pub fn tags(&self) -> impl Iterator<Item = &str> {
        self.points.iter().map(|(t, _)| t.as_str())
    }

    fn value(&self, tag: &str) -> Option<f64> {
        self.points.iter().find(|(t, _)| t == tag).map(|(_, v)| *v)
    }

    /// Values ordered by `tags`; errors name the tags that are missing.
    fn aligned(&self, reference: &DiagnosticSeries) -> Result<Vec<f64>, DiagnosticsError> {
        let mine: HashSet<&str> = self.tags().collect();
        let theirs: HashSet<&str> = reference.tags().collect();
        if mine != theirs {
            let mut tags: Vec<String> = mine
                .symmetric_difference(&theirs)
                .map(|s| s.to_string())
                .collect();
            tags.sort();
            return Err(DiagnosticsError::TagMismatch {
                series: self.name.clone(),
                reference: reference.name.clone(),
                tags,
            });
        }
        Ok(reference
            .tags()
            .map(|t| self.value(t).expect("tag sets are equal"))
            .collect())
    }
}

/// Reads a table whose first column holds tags and whose other columns are
/// series; the header row names them.
pub fn read_series_csv<R: Read>(reader: R) -> Result<Vec<DiagnosticSeries>, DiagnosticsError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.len() < 2 {
        return Err(DiagnosticsError::MalformedSeries {
            row: 1,
            message: "need a tag column and at least one series".into(),
        });
    }
    let mut columns: Vec<Vec<(String, f64)>> = vec![Vec::new(); headers.len() - 1];
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        let tag = rec.get(0).unwrap_or("").to_string();
        for (k, col) in columns.iter_mut().enumerate() {
            let field = rec.get(k + 1).unwrap_or("");
            let v = field.parse::<f64>().map_err(|_| DiagnosticsError::MalformedSeries {
                row,
                message: format!("'{field}' in column '{}' is not a number", &headers[k + 1]),
            })?;
            col.push((tag.clone(), v));
        }
    }
    headers
        .iter()
        .skip(1)
        .zip(columns)
        .map(|(name, points)| DiagnosticSeries::new(name, points))
        .collect()
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Pearson r with sample covariances; `None` when either input is constant.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n < 2 {
        return None;
    }
    let (mx, my) = (mean(x), mean(y));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    let d = (n - 1) as f64;
    let (sxy, sxx, syy) = (sxy / d, sxx / d, syy / d);
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Pairwise correlations in percent; undefined entries are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    pub names: Vec<String>,
    pub values: Vec<Vec<Option<f64>>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        self.values[i][j]
    }

    /// Full square matrix; undefined entries are empty cells.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.names.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (name, row) in self.names.iter().zip(&self.values) {
            let mut rec = vec![name.clone()];
            rec.extend(row.iter().map(|v| v.map(|x| format!("{x:.3}")).unwrap_or_default()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Lower triangle without the diagonal, as in published correlation tables.
    pub fn to_text(&self) -> String {
        let width = self
            .names
            .iter()
            .map(|n| n.len())
            .max()
            .unwrap_or(0)
            .max(9);
        let mut s = format!("{:<width$}", "");
        for n in &self.names[..self.names.len().saturating_sub(1)] {
            s.push_str(&format!(" {n:>width$}"));
        }
        s.push('\n');
        for i in 1..self.names.len() {
            s.push_str(&format!("{:<width$}", self.names[i]));
            for j in 0..i {
                let cell = self.values[i][j]
                    .map(|v| format!("{v:.3}"))
                    .unwrap_or_else(|| "n/a".into());
                s.push_str(&format!(" {cell:>width$}"));
            }
            s.push('\n');
        }
        s
    }
}

pub fn pearson_matrix(series: &[DiagnosticSeries]) -> Result<CorrelationMatrix, DiagnosticsError> {
    let Some(reference) = series.first() else {
        return Err(DiagnosticsError::TooFewPoints(0));
    };
    if reference.points.len() < 2 {
        return Err(DiagnosticsError::TooFewPoints(reference.points.len()));
    }
    let data: Vec<Vec<f64>> = series
        .iter()
        .map(|s| s.aligned(reference))
        .collect::<Result<_, _>>()?;
    let n = series.len();
    let mut values = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let r = if i == j {
                pearson(&data[i], &data[i]).map(|_| 100.0)
            } else {
                pearson(&data[i], &data[j]).map(|r| 100.0 * r)
            };
            values[i][j] = r;
            values[j][i] = r;
        }
    }
    Ok(CorrelationMatrix {
        names: series.iter().map(|s| s.name.clone()).collect(),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Regression {
    pub intercept: f64,
    pub slope: f64,
    pub correlation: f64,
}

/// Ordinary least squares `y = intercept + slope·x`, plus Pearson r.
pub fn linear_regression(
    x: &DiagnosticSeries,
    y: &DiagnosticSeries,
) -> Result<Regression, DiagnosticsError> {
    let xs: Vec<f64> = x.points.iter().map(|(_, v)| *v).collect();
    let ys = y.aligned(x)?;
    if xs.len() < 2 {
        return Err(DiagnosticsError::TooFewPoints(xs.len()));
    }
    let (mx, my) = (mean(&xs), mean(&ys));
    let sxx: f64 = xs.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx == 0.0 {
        return Err(DiagnosticsError::ConstantPredictor);
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    Ok(Regression {
        intercept: my - slope * mx,
        slope,
        correlation: pearson(&xs, &ys).unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t1_cases() {
        let zero = AmplitudeData::new(DMatrix::zeros(2, 3), 8).unwrap();
        assert_eq!(t1_diagnostic(&zero).unwrap(), 0.0);
        let a = AmplitudeData::new(DMatrix::from_element(2, 2, 0.1), 4).unwrap();
        assert!((t1_diagnostic(&a).unwrap() - 0.1).abs() < 1e-15);
        let row = AmplitudeData::new(DMatrix::from_element(1, 4, 0.1), 4).unwrap();
        assert_eq!(t1_diagnostic(&row).unwrap(), t1_diagnostic(&a).unwrap());
        assert!(AmplitudeData::new(DMatrix::zeros(0, 0), 4).is_err());
        assert!(AmplitudeData::new(DMatrix::zeros(1, 1), 0).is_err());
    }

    #[test]
    fn d1_cases() {
        let zero = AmplitudeData::new(DMatrix::zeros(3, 3), 2).unwrap();
        assert_eq!(d1_diagnostic(&zero).unwrap(), 0.0);
        let diag = AmplitudeData::new(DMatrix::from_row_slice(2, 2, &[3.0, 0.0, 0.0, 1.0]), 2).unwrap();
        assert!((d1_diagnostic(&diag).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn ratio_cases() {
        assert!((t1_d1_ratio(0.02, 0.1).unwrap() - 0.2).abs() < 1e-15);
        assert_eq!(t1_d1_ratio(0.0, 0.1).unwrap(), 0.0);
        assert!(matches!(t1_d1_ratio(0.1, 0.0), Err(DiagnosticsError::DivisionByZeroDomain)));
    }

    #[test]
    fn energy_diagnostics() {
        let rec = EnergyRecord {
            tae_ccsd_t: Some(1000.0),
            tae_ccsd: Some(950.0),
            tae_hybrid: Some(1.15),
            tae_hf100: Some(1.0),
            lambda: Some(0.5),
            unit: None,
        };
        assert!((percent_tae(&rec).unwrap() - 5.0).abs() < 1e-12);
        assert!((a_lambda(&rec).unwrap() + 0.3).abs() < 1e-12);
        let same = EnergyRecord {
            tae_ccsd: Some(1000.0),
            tae_hybrid: Some(1.0),
            lambda: Some(1.0),
            ..rec.clone()
        };
        assert_eq!(percent_tae(&same).unwrap(), 0.0);
        assert_eq!(a_lambda(&same).unwrap(), 0.0);
        let bad = EnergyRecord {
            lambda: Some(1.5),
            ..rec.clone()
        };
        assert!(matches!(a_lambda(&bad), Err(DiagnosticsError::LambdaOutOfRange(_))));
        let zero = EnergyRecord {
            tae_ccsd_t: Some(0.0),
            ..rec
        };
        assert!(matches!(percent_tae(&zero), Err(DiagnosticsError::ZeroDenominator(_))));
        assert!(matches!(
            percent_tae(&EnergyRecord::default()),
            Err(DiagnosticsError::MissingField("tae_ccsd_t"))
        ));
    }

    #[test]
    fn diradical_index() {
        assert_eq!(y_index(1.0).unwrap(), 0.0);
        assert_eq!(y_index(0.0).unwrap(), 1.0);
        assert!((y_index(0.5617).unwrap() - 0.146).abs() < 1e-3);
        assert!((y_from_occupations(1.5617, 0.4383).unwrap() - y_index(0.5617).unwrap()).abs() < 1e-12);
        let t = overlap_from_y(0.146).unwrap();
        assert!((y_index(t).unwrap() - 0.146).abs() < 1e-14);
        assert!((t - 0.5617).abs() < 5e-4);
        assert!(y_index(1.2).is_err());
        assert!(y_from_occupations(0.5, 1.0).is_err());
    }

    #[test]
    fn classification_examples() {
        use DiagnosticKind::*;
        assert_eq!(classify(T1, 0.03, ElementClass::Organic), Severity::Severe);
        assert_eq!(classify(T1, 0.03, ElementClass::ThreeD), Severity::BelowThreshold);
        assert_eq!(classify(PercentTae, 5.3, ElementClass::Organic), Severity::Moderate);
        assert_eq!(classify(ALambda, 0.05, ElementClass::Organic), Severity::DynamicDominated);
        assert_eq!(classify(D1, 0.3, ElementClass::Organic), Severity::NoThreshold);
        assert_eq!(classify(D1, 0.12, ElementClass::FourD), Severity::Severe);
        assert_eq!("%TAE[(T)]".parse::<DiagnosticKind>().unwrap(), PercentTae);
        assert_eq!("A_lambda[M06]".parse::<DiagnosticKind>().unwrap(), ALambda);
        assert!("B1".parse::<DiagnosticKind>().is_err());
    }

    #[test]
    fn series_csv_and_matrix() {
        let text = "tag,a,b,c\n1,1,2,5\n2,2,4,5\n3,3,6.5,5\n";
        let s = read_series_csv(text.as_bytes()).unwrap();
        assert_eq!(s.len(), 3);
        let m = pearson_matrix(&s).unwrap();
        assert_eq!(m.get("a", "a"), Some(100.0));
        assert!(m.get("a", "b").unwrap() > 99.0);
        assert_eq!(m.get("a", "c"), None);
        assert!(m.to_csv().starts_with(",a,b,c"));
        assert!(m.to_text().contains("n/a"));
    }

    #[test]
    fn tag_problems() {
        let a = DiagnosticSeries::new("a", vec![("x".into(), 1.0), ("y".into(), 2.0)]).unwrap();
        let b = DiagnosticSeries::new("b", vec![("x".into(), 1.0), ("z".into(), 2.0)]).unwrap();
        match pearson_matrix(&[a, b]) {
            Err(DiagnosticsError::TagMismatch { tags, .. }) => assert_eq!(tags, vec!["y", "z"]),
            other => panic!("{other:?}"),
        }
        assert!(DiagnosticSeries::new("d", vec![("x".into(), 1.0), ("x".into(), 2.0)]).is_err());
    }

    #[test]
    fn exact_line() {
        let x = DiagnosticSeries::from_values("x", &[0.0, 1.0, 2.0, 3.0, 4.0]);
        let y = DiagnosticSeries::from_values("y", &[1.0, 3.0, 5.0, 7.0, 9.0]);
        let r = linear_regression(&x, &y).unwrap();
        assert!((r.intercept - 1.0).abs() < 1e-12);
        assert!((r.slope - 2.0).abs() < 1e-12);
        assert!((r.correlation - 1.0).abs() < 1e-12);
        let c = DiagnosticSeries::from_values("c", &[2.0; 5]);
        assert!(matches!(linear_regression(&c, &y), Err(DiagnosticsError::ConstantPredictor)));
    }

    #[test]
    fn amplitude_readers() {
        let a = AmplitudeData::from_csv("0.1, 0.2\n0.3, 0.4\n".as_bytes(), 4).unwrap();
        assert_eq!(a.t1[(1, 0)], 0.3);
        let j = AmplitudeData::from_json(r#"{"rows":2,"cols":2,"values":[0.1,0.2,0.3,0.4],"n_correlated":4}"#)
            .unwrap();
        assert_eq!(a, j);
        assert!(AmplitudeData::from_csv("0.1,0.2\n0.3\n".as_bytes(), 4).is_err());
        assert!(AmplitudeData::from_json(r#"{"rows":2,"cols":2,"values":[0.1],"n_correlated":4}"#).is_err());
    }
}
