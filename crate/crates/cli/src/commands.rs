use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use apele::apele::{compute_apele, group_apele, ApeleOptions, AtomGroup, ExchangeSource};
use apele::diagnostics::{
    a_lambda, classify, d1_diagnostic, linear_regression, pearson_matrix, percent_tae,
    read_series_csv, t1_d1_ratio, t1_diagnostic, y_from_occupations, y_index, AmplitudeData,
    DiagnosticKind, ElementClass, EnergyRecord,
};
use apele::elements::{self, ANGSTROM_TO_BOHR};
use apele::grid::{build_grid, BeckeOptions, Center, GridSettings};
use apele::wfx::{parse_wfx_with, ParseOptions};

use crate::{
    ApeleArgs, ClassArg, Cli, Command, CorrArgs, DiagArgs, Format, GridArgs, GridDumpArgs,
    EXIT_DEGRADED, EXIT_OK,
};

pub fn run(cli: Cli) -> Result<u8> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .context("cannot start worker threads")?;
    pool.install(|| match cli.command {
        Command::Apele(args) => run_apele(args),
        Command::Diag(args) => run_diag(args),
        Command::Corr(args) => run_corr(args),
        Command::GridDump(args) => run_grid_dump(args),
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
    ))
}

fn emit(output: &Option<PathBuf>, body: &str) -> Result<()> {
    match output {
        Some(path) => {
            let mut w = create(path)?;
            w.write_all(body.as_bytes())?;
            w.flush()?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn grid_settings(args: &GridArgs) -> Result<GridSettings> {
    let (nr, na) = args
        .grid
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("--grid must look like 128x302, got '{}'", args.grid))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("--grid must look like 128x302, got '{}'", args.grid))
    };
    Ok(GridSettings {
        n_radial: parse(nr)?,
        n_angular: parse(na)?,
        becke: BeckeOptions {
            iterations: args.becke_iterations,
            size_adjustment: args.size_adjustment,
        },
    })
}

fn read_ex_grid(path: &Path, points: &[[f64; 3]]) -> Result<Vec<[f64; 2]>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut rows = Vec::with_capacity(points.len());
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.with_context(|| format!("{}: row {}", path.display(), i + 2))?;
        let vals: Vec<f64> = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| anyhow!("{}: row {} has a non-numeric field", path.display(), i + 2))?;
        if vals.len() != 5 {
            bail!("{}: row {} needs x,y,z,e_x_alpha,e_x_beta", path.display(), i + 2);
        }
        let Some(p) = points.get(i) else {
            bail!("{}: more rows than grid points ({})", path.display(), points.len());
        };
        let off = (0..3).map(|k| (vals[k] - p[k]).abs()).fold(0.0, f64::max);
        if off > 1e-8 * (1.0 + p.iter().map(|c| c.abs()).fold(0.0, f64::max)) {
            bail!(
                "{}: row {} is at ({}, {}, {}) but grid point {} is at {:?}",
                path.display(),
                i + 2,
                vals[0],
                vals[1],
                vals[2],
                i,
                p
            );
        }
        rows.push([vals[3], vals[4]]);
    }
    if rows.len() != points.len() {
        bail!(
            "{}: {} rows for a grid of {} points",
            path.display(),
            rows.len(),
            points.len()
        );
    }
    Ok(rows)
}

fn run_apele(args: ApeleArgs) -> Result<u8> {
    let settings = grid_settings(&args.grid)?;
    let text = read(&args.wfx)?;
    let wfn = parse_wfx_with(
        &text,
        ParseOptions {
            normalized_primitives: !args.bare_primitives,
        },
    )
    .with_context(|| format!("in {}", args.wfx.display()))?;
    let groups: Vec<AtomGroup> = args
        .groups
        .iter()
        .map(|g| g.parse())
        .collect::<Result<_, _>>()?;

    let exchange = match &args.ex_grid {
        Some(path) => {
            let centers: Vec<Center> = apele::apele::centers_of(&wfn);
            let grid = build_grid(&centers, settings)?;
            ExchangeSource::Supplied(read_ex_grid(path, &grid.points)?)
        }
        None => ExchangeSource::Orbitals,
    };
    let options = ApeleOptions {
        exchange,
        keep_points: args.dump_fields.is_some() || args.dump_holes.is_some(),
    };
    let mut report = compute_apele(&wfn, settings, &options)?;
    report.provenance.wfx_path = Some(args.wfx.display().to_string());
    for w in group_apele(&mut report, &groups, args.qr_group.as_deref())? {
        eprintln!("warning: {w}");
    }

    if let Some(path) = &args.dump_fields {
        let mut w = create(path)?;
        report.write_field_dump(&mut w)?;
        w.flush()?;
    }
    if let Some(path) = &args.dump_holes {
        let mut w = create(path)?;
        report.write_hole_dump(&mut w)?;
        w.flush()?;
    }

    let body = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            String::from_utf8(buf)?
        }
    };
    emit(&args.output, &body)?;
    if report.degraded {
        eprintln!(
            "warning: {:.2}% of significant points fell back to N = 1; report is degraded",
            100.0 * report.provenance.fallback_fraction
        );
        return Ok(EXIT_DEGRADED);
    }
    Ok(EXIT_OK)
}

fn element_class(c: ClassArg) -> ElementClass {
    match c {
        ClassArg::Organic => ElementClass::Organic,
        ClassArg::ThreeD => ElementClass::ThreeD,
        ClassArg::FourD => ElementClass::FourD,
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read(path)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        anyhow!("{}: at '{}': {}", path.display(), at, e.inner())
    })
}

fn entry(value: f64, severity: Option<&str>) -> Value {
    match severity {
        Some(s) => json!({ "value": value, "severity": s }),
        None => json!({ "value": value }),
    }
}

fn run_diag(args: DiagArgs) -> Result<u8> {
    if args.amplitudes.is_none()
        && args.energies.is_none()
        && args.occupations.is_none()
        && args.overlap.is_none()
    {
        bail!("diag needs at least one of --amplitudes, --energies, --occupations, --overlap");
    }
    let class = element_class(args.class);
    let not_provided = || Value::String("not provided".into());
    let mut out = Map::new();

    let (mut t1, mut d1, mut ratio) = (not_provided(), not_provided(), not_provided());
    if let Some(path) = &args.amplitudes {
        let amps = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
            AmplitudeData::from_json(&read(path)?)
        } else {
            let n = args
                .n_correlated
                .context("--n-correlated is required with CSV amplitudes")?;
            AmplitudeData::from_csv(
                File::open(path).with_context(|| format!("cannot read {}", path.display()))?,
                n,
            )
        }
        .with_context(|| format!("in {}", path.display()))?;
        let t = t1_diagnostic(&amps)?;
        let d = d1_diagnostic(&amps)?;
        t1 = entry(t, Some(classify(DiagnosticKind::T1, t, class).label()));
        d1 = entry(d, Some(classify(DiagnosticKind::D1, d, class).label()));
        ratio = match t1_d1_ratio(t, d) {
            Ok(r) => entry(r, None),
            Err(e) => Value::String(format!("undefined: {e}")),
        };
    }
    out.insert("T1".into(), t1);
    out.insert("D1".into(), d1);
    out.insert("T1/D1".into(), ratio);

    let (mut tae, mut al) = (not_provided(), not_provided());
    if let Some(path) = &args.energies {
        let rec: EnergyRecord = read_json(path)?;
        if rec.tae_ccsd_t.is_some() || rec.tae_ccsd.is_some() {
            let v = percent_tae(&rec).with_context(|| format!("in {}", path.display()))?;
            tae = entry(v, Some(classify(DiagnosticKind::PercentTae, v, class).label()));
        }
        if rec.tae_hybrid.is_some() || rec.tae_hf100.is_some() || rec.lambda.is_some() {
            let v = a_lambda(&rec).with_context(|| format!("in {}", path.display()))?;
            al = entry(v, Some(classify(DiagnosticKind::ALambda, v, class).label()));
        }
    }
    out.insert("%TAE[(T)]".into(), tae);
    out.insert("A_lambda".into(), al);

    let y = match (&args.occupations, args.overlap) {
        (Some(occ), _) => {
            let [h, l] = occ[..] else {
                bail!("--occupations takes two values, N_HOMO,N_LUMO");
            };
            json!({ "value": y_from_occupations(h, l)?, "overlap": 0.5 * (h - l) })
        }
        (None, Some(t)) => json!({ "value": y_index(t)?, "overlap": t }),
        (None, None) => not_provided(),
    };
    out.insert("y".into(), y);

    let body = match args.format {
        Format::Json => serde_json::to_string_pretty(&Value::Object(out))? + "\n",
        Format::Csv | Format::Text => {
            let csv = args.format == Format::Csv;
            let mut s = if csv {
                "diagnostic,value,severity\n".to_string()
            } else {
                String::new()
            };
            for (k, v) in &out {
                let (val, sev) = match v {
                    Value::Object(o) => (
                        o["value"].as_f64().map(|x| format!("{x:.6}")).unwrap_or_default(),
                        o.get("severity").and_then(Value::as_str).unwrap_or("").to_string(),
                    ),
                    Value::String(s) => (s.clone(), String::new()),
                    _ => (String::new(), String::new()),
                };
                if csv {
                    s.push_str(&format!("{k},{val},{sev}\n"));
                } else {
                    s.push_str(&format!("{k:<10} {val:>14} {sev}\n"));
                }
            }
            s
        }
    };
    emit(&args.output, &body)?;
    Ok(EXIT_OK)
}

fn run_corr(args: CorrArgs) -> Result<u8> {
    let file = File::open(&args.series)
        .with_context(|| format!("cannot read {}", args.series.display()))?;
    let series = read_series_csv(file).with_context(|| format!("in {}", args.series.display()))?;
    let matrix = pearson_matrix(&series)?;

    let regression = match &args.regress {
        None => None,
        Some(pair) => {
            let mut x = None;
            let mut y = None;
            for item in pair {
                match item.split_once('=') {
                    Some(("x", name)) => x = Some(name.to_string()),
                    Some(("y", name)) => y = Some(name.to_string()),
                    _ => bail!("--regress expects x=NAME y=NAME, got '{item}'"),
                }
            }
            let (x, y) = x.zip(y).context("--regress expects x=NAME y=NAME")?;
            let find = |name: &str| {
                series
                    .iter()
                    .find(|s| s.name == name)
                    .ok_or_else(|| anyhow!("no series named '{name}'"))
            };
            let fit = linear_regression(find(&x)?, find(&y)?)?;
            Some((x, y, fit))
        }
    };

    let body = match args.format {
        Format::Json => {
            let mut v = json!({ "correlation_percent": matrix });
            if let Some((x, y, fit)) = &regression {
                v["regression"] = json!({
                    "x": x, "y": y,
                    "intercept": fit.intercept, "slope": fit.slope, "correlation": fit.correlation,
                });
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Csv => {
            let mut s = matrix.to_csv();
            if let Some((x, y, fit)) = &regression {
                s.push_str(&format!(
                    "\nx,y,intercept,slope,correlation\n{x},{y},{},{},{}\n",
                    fit.intercept, fit.slope, fit.correlation
                ));
            }
            s
        }
        Format::Text => {
            let mut s = matrix.to_text();
            if let Some((x, y, fit)) = &regression {
                s.push_str(&format!(
                    "\n{y} vs {x}: intercept {:.4}  slope {:.4}  correlation {:.4}\n",
                    fit.intercept, fit.slope, fit.correlation
                ));
            }
            s
        }
    };
    emit(&args.output, &body)?;
    Ok(EXIT_OK)
}

/// Reads an XYZ file (angstrom) into grid centers (bohr).
pub fn read_xyz(text: &str) -> Result<Vec<Center>> {
    let mut lines = text.lines();
    let n: usize = lines
        .next()
        .and_then(|l| l.trim().parse().ok())
        .context("first line of an XYZ file must be the atom count")?;
    lines.next();
    let mut centers = Vec::with_capacity(n);
    for (i, line) in lines.filter(|l| !l.trim().is_empty()).take(n).enumerate() {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() < 4 {
            bail!("atom line {} needs a symbol and three coordinates", i + 1);
        }
        let z = elements::atomic_number(f[0])
            .or_else(|| f[0].parse().ok())
            .with_context(|| format!("atom line {}: unknown element '{}'", i + 1, f[0]))?;
        let mut pos = [0.0; 3];
        for k in 0..3 {
            pos[k] = f[k + 1]
                .parse::<f64>()
                .with_context(|| format!("atom line {}: bad coordinate '{}'", i + 1, f[k + 1]))?
                * ANGSTROM_TO_BOHR;
        }
        centers.push(Center::new(pos, z));
    }
    if centers.len() != n {
        bail!("XYZ file declares {n} atoms but lists {}", centers.len());
    }
    Ok(centers)
}

fn run_grid_dump(args: GridDumpArgs) -> Result<u8> {
    let settings = grid_settings(&args.grid)?;
    let centers = match (&args.geometry.wfx, &args.geometry.xyz) {
        (Some(path), _) => {
            let wfn = apele::wfx::parse_wfx(&read(path)?)
                .with_context(|| format!("in {}", path.display()))?;
            apele::apele::centers_of(&wfn)
        }
        (None, Some(path)) => read_xyz(&read(path)?).with_context(|| format!("in {}", path.display()))?,
        (None, None) => unreachable!("clap requires one geometry source"),
    };
    let grid = build_grid(&centers, settings)?;
    match &args.output {
        Some(path) => {
            let mut w = create(path)?;
            grid.write_csv(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(std::io::stdout().lock());
            grid.write_csv(&mut w)?;
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}
