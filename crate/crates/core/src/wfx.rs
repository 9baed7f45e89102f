//! Reading and writing AIM `.wfx` wavefunction files.
//!
//! A `.wfx` file is a sequence of tagged sections, `<Name>` ... `</Name>`,
//! each holding whitespace-separated values. Only the sections needed to
//! rebuild the orbitals are interpreted; everything else is skipped.
//!
//! MO coefficients are taken to multiply unit-normalized Cartesian
//! primitives unless [`ParseOptions::normalized_primitives`] is cleared, in
//! which case they multiply the bare `x^l y^m z^n exp(-a r^2)` functions and
//! are rescaled on input.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{self, CartesianGaussian};
use crate::elements;

const OCCUPATION_TOLERANCE: f64 = 1e-6;

const SEC_COORDS: &str = "Nuclear Cartesian Coordinates";
const SEC_NAMES: &str = "Nuclear Names";
const SEC_ATOMIC_NUMBERS: &str = "Atomic Numbers";
const SEC_CENTERS: &str = "Primitive Centers";
const SEC_TYPES: &str = "Primitive Types";
const SEC_EXPONENTS: &str = "Primitive Exponents";
const SEC_OCCUPATIONS: &str = "Molecular Orbital Occupation Numbers";
const SEC_ENERGIES: &str = "Molecular Orbital Energies";
const SEC_SPINS: &str = "Molecular Orbital Spin Types";
const SEC_COEFFICIENTS: &str = "Molecular Orbital Primitive Coefficients";
const SEC_ELECTRONS: &str = "Number of Electrons";
const SEC_MO_NUMBER: &str = "MO Number";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WfxError {
    #[error("missing required section <{section}>")]
    MissingSection { section: String },
    #[error("malformed number {token:?} in <{section}> at line {line}")]
    MalformedNumber {
        section: String,
        line: usize,
        token: String,
    },
    #[error("invariant violated in <{section}> at line {line}: {message}")]
    InvariantViolation {
        section: String,
        line: usize,
        message: String,
    },
    #[error("unsupported primitive type {code} in <{section}> at line {line} (only s, p, d, f Cartesian types 1-20)")]
    UnsupportedPrimitiveType {
        section: String,
        line: usize,
        code: i64,
    },
    #[error("unterminated section <{section}> opened at line {line}")]
    UnterminatedSection { section: String, line: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinTag {
    Alpha,
    Beta,
    /// Doubly occupiable restricted orbital; occupation splits evenly.
    Paired,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Nucleus {
    pub symbol: String,
    pub atomic_number: u32,
    /// Bohr.
    pub position: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Primitive {
    /// Zero-based nucleus index.
    pub center: usize,
    pub type_code: u32,
    /// Bohr^-2.
    pub exponent: f64,
}

impl Primitive {
    pub fn powers(&self) -> [u8; 3] {
        basis::cartesian_powers(self.type_code).expect("validated on construction")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Orbital {
    pub occupation: f64,
    pub spin: SpinTag,
    /// Hartree.
    pub energy: f64,
    /// Coefficients over normalized primitives.
    pub coefficients: Vec<f64>,
}

impl Orbital {
    /// Occupation carried by each spin channel.
    pub fn spin_occupations(&self) -> [f64; 2] {
        match self.spin {
            SpinTag::Alpha => [self.occupation, 0.0],
            SpinTag::Beta => [0.0, self.occupation],
            SpinTag::Paired => [0.5 * self.occupation; 2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionData {
    pub title: String,
    pub nuclei: Vec<Nucleus>,
    pub primitives: Vec<Primitive>,
    pub orbitals: Vec<Orbital>,
    pub declared_electron_count: u32,
    /// Normalization constant of each primitive.
    #[serde(skip)]
    pub norms: Vec<f64>,
}

impl WavefunctionData {
    /// Assembles and validates a wavefunction from its parts.
    pub fn new(
        title: impl Into<String>,
        nuclei: Vec<Nucleus>,
        primitives: Vec<Primitive>,
        orbitals: Vec<Orbital>,
        declared_electron_count: u32,
    ) -> Result<Self, WfxError> {
        let norms = primitives
            .iter()
            .map(|p| {
                basis::cartesian_powers(p.type_code)
                    .map(|pw| basis::normalization(pw, p.exponent))
                    .ok_or(WfxError::UnsupportedPrimitiveType {
                        section: SEC_TYPES.into(),
                        line: 0,
                        code: p.type_code as i64,
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let wfn = Self {
            title: title.into(),
            nuclei,
            primitives,
            orbitals,
            declared_electron_count,
            norms,
        };
        wfn.validate(&HashMap::new())?;
        Ok(wfn)
    }

    /// Primitives as positioned, normalized Gaussians.
    pub fn gaussians(&self) -> Vec<CartesianGaussian> {
        self.primitives
            .iter()
            .zip(&self.norms)
            .map(|(p, &norm)| CartesianGaussian {
                center: self.nuclei[p.center].position,
                powers: p.powers(),
                exponent: p.exponent,
                coefficient: norm,
            })
            .collect()
    }

    pub fn positions(&self) -> Vec<[f64; 3]> {
        self.nuclei.iter().map(|n| n.position).collect()
    }

    pub fn atomic_numbers(&self) -> Vec<u32> {
        self.nuclei.iter().map(|n| n.atomic_number).collect()
    }

    fn validate(&self, lines: &HashMap<&'static str, usize>) -> Result<(), WfxError> {
        let at = |s: &'static str| lines.get(s).copied().unwrap_or(0);
        let violation = |section: &'static str, message: String| WfxError::InvariantViolation {
            section: section.into(),
            line: at(section),
            message,
        };
        for (i, p) in self.primitives.iter().enumerate() {
            if p.center >= self.nuclei.len() {
                return Err(violation(
                    SEC_CENTERS,
                    format!(
                        "primitive {} centered on nucleus {} of {}",
                        i + 1,
                        p.center + 1,
                        self.nuclei.len()
                    ),
                ));
            }
            if !(p.exponent > 0.0 && p.exponent.is_finite()) {
                return Err(violation(
                    SEC_EXPONENTS,
                    format!("primitive {} has non-positive exponent {}", i + 1, p.exponent),
                ));
            }
        }
        for (i, orb) in self.orbitals.iter().enumerate() {
            if orb.coefficients.len() != self.primitives.len() {
                return Err(violation(
                    SEC_COEFFICIENTS,
                    format!(
                        "orbital {} has {} coefficients for {} primitives",
                        i + 1,
                        orb.coefficients.len(),
                        self.primitives.len()
                    ),
                ));
            }
            if !(0.0..=2.0).contains(&orb.occupation) {
                return Err(violation(
                    SEC_OCCUPATIONS,
                    format!("orbital {} occupation {} outside [0, 2]", i + 1, orb.occupation),
                ));
            }
        }
        let total: f64 = self.orbitals.iter().map(|o| o.occupation).sum();
        if (total - self.declared_electron_count as f64).abs() > OCCUPATION_TOLERANCE {
            return Err(violation(
                SEC_OCCUPATIONS,
                format!(
                    "occupations sum to {total} but {} electrons are declared",
                    self.declared_electron_count
                ),
            ));
        }
        Ok(())
    }
}

/// Per-spin electron counts; paired orbitals give half to each spin.
pub fn electron_counts(wfn: &WavefunctionData) -> (f64, f64) {
    wfn.orbitals.iter().fold((0.0, 0.0), |(a, b), o| {
        let [na, nb] = o.spin_occupations();
        (a + na, b + nb)
    })
}

#[derive(Debug, Clone, Copy)]
pub struct ParseOptions {
    /// Coefficients multiply normalized primitives (`true`) or bare ones.
    pub normalized_primitives: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            normalized_primitives: true,
        }
    }
}

pub fn parse_wfx(text: &str) -> Result<WavefunctionData, WfxError> {
    parse_wfx_with(text, ParseOptions::default())
}

struct Section<'a> {
    line: usize,
    /// (line number, trimmed content) of each body line.
    body: Vec<(usize, &'a str)>,
}

impl Section<'_> {
    fn tokens(&self) -> impl Iterator<Item = (usize, &str)> {
        self.body
            .iter()
            .flat_map(|&(ln, text)| text.split_whitespace().map(move |t| (ln, t)))
    }
}

fn split_sections(text: &str) -> Result<HashMap<String, Section<'_>>, WfxError> {
    let mut sections = HashMap::new();
    let mut open: Option<(String, Section)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some((name, section)) = open.as_mut() {
            if trimmed.starts_with("</") && trimmed.ends_with('>') && trimmed[2..trimmed.len() - 1].trim() == name.as_str() {
                let (name, section) = open.take().unwrap();
                sections.entry(name).or_insert(section);
            } else {
                section.body.push((line, trimmed));
            }
            continue;
        }
        if trimmed.starts_with('<') && !trimmed.starts_with("</") && trimmed.ends_with('>') {
            let name = trimmed[1..trimmed.len() - 1].trim().to_string();
            open = Some((name, Section { line, body: Vec::new() }));
        }
    }
    if let Some((section, s)) = open {
        return Err(WfxError::UnterminatedSection {
            section,
            line: s.line,
        });
    }
    Ok(sections)
}

fn required<'s, 'a>(
    sections: &'s HashMap<String, Section<'a>>,
    name: &str,
) -> Result<&'s Section<'a>, WfxError> {
    sections.get(name).ok_or_else(|| WfxError::MissingSection {
        section: name.into(),
    })
}

fn parse_reals(section: &Section, name: &str) -> Result<Vec<(usize, f64)>, WfxError> {
    section
        .tokens()
        .map(|(ln, tok)| parse_real(tok).map(|v| (ln, v)).ok_or_else(|| malformed(name, ln, tok)))
        .collect()
}

fn parse_ints(section: &Section, name: &str) -> Result<Vec<(usize, i64)>, WfxError> {
    section
        .tokens()
        .map(|(ln, tok)| tok.parse::<i64>().map(|v| (ln, v)).map_err(|_| malformed(name, ln, tok)))
        .collect()
}

fn parse_real(tok: &str) -> Option<f64> {
    // Fortran exporters sometimes write `1.0D+00`.
    let v = if tok.contains(['D', 'd']) {
        tok.replace(['D', 'd'], "E").parse::<f64>().ok()?
    } else {
        tok.parse::<f64>().ok()?
    };
    v.is_finite().then_some(v)
}

fn malformed(section: &str, line: usize, token: &str) -> WfxError {
    WfxError::MalformedNumber {
        section: section.into(),
        line,
        token: token.into(),
    }
}

fn count_mismatch(section: &str, line: usize, message: String) -> WfxError {
    WfxError::InvariantViolation {
        section: section.into(),
        line,
        message,
    }
}

pub fn parse_wfx_with(text: &str, options: ParseOptions) -> Result<WavefunctionData, WfxError> {
    let sections = split_sections(text)?;

    let coords_sec = required(&sections, SEC_COORDS)?;
    let centers_sec = required(&sections, SEC_CENTERS)?;
    let types_sec = required(&sections, SEC_TYPES)?;
    let exps_sec = required(&sections, SEC_EXPONENTS)?;
    let occ_sec = required(&sections, SEC_OCCUPATIONS)?;
    let coef_sec = required(&sections, SEC_COEFFICIENTS)?;

    let coords = parse_reals(coords_sec, SEC_COORDS)?;
    if coords.len() % 3 != 0 {
        return Err(count_mismatch(
            SEC_COORDS,
            coords_sec.line,
            format!("{} coordinates is not a multiple of 3", coords.len()),
        ));
    }
    let n_nuclei = coords.len() / 3;

    let atomic_numbers: Vec<u32> = match sections.get(SEC_ATOMIC_NUMBERS) {
        Some(sec) => {
            let values = parse_ints(sec, SEC_ATOMIC_NUMBERS)?;
            if values.len() != n_nuclei {
                return Err(count_mismatch(
                    SEC_ATOMIC_NUMBERS,
                    sec.line,
                    format!("{} atomic numbers for {n_nuclei} nuclei", values.len()),
                ));
            }
            values
                .into_iter()
                .map(|(ln, z)| {
                    u32::try_from(z)
                        .ok()
                        .filter(|z| elements::symbol(*z).is_some())
                        .ok_or_else(|| {
                            count_mismatch(SEC_ATOMIC_NUMBERS, ln, format!("unknown atomic number {z}"))
                        })
                })
                .collect::<Result<_, _>>()?
        }
        None => {
            let sec = sections.get(SEC_NAMES).ok_or_else(|| WfxError::MissingSection {
                section: SEC_ATOMIC_NUMBERS.into(),
            })?;
            let names: Vec<_> = sec.tokens().collect();
            if names.len() != n_nuclei {
                return Err(count_mismatch(
                    SEC_NAMES,
                    sec.line,
                    format!("{} names for {n_nuclei} nuclei", names.len()),
                ));
            }
            names
                .into_iter()
                .map(|(ln, name)| {
                    elements::atomic_number(name).ok_or_else(|| {
                        count_mismatch(SEC_NAMES, ln, format!("cannot infer element from {name:?}"))
                    })
                })
                .collect::<Result<_, _>>()?
        }
    };

    let nuclei: Vec<Nucleus> = atomic_numbers
        .iter()
        .enumerate()
        .map(|(i, &z)| Nucleus {
            symbol: elements::symbol(z).unwrap_or("X").to_string(),
            atomic_number: z,
            position: [coords[3 * i].1, coords[3 * i + 1].1, coords[3 * i + 2].1],
        })
        .collect();

    let centers = parse_ints(centers_sec, SEC_CENTERS)?;
    let types = parse_ints(types_sec, SEC_TYPES)?;
    let exponents = parse_reals(exps_sec, SEC_EXPONENTS)?;
    let n_prim = centers.len();
    if types.len() != n_prim || exponents.len() != n_prim {
        return Err(count_mismatch(
            SEC_TYPES,
            types_sec.line,
            format!(
                "{} centers, {} types, {} exponents",
                n_prim,
                types.len(),
                exponents.len()
            ),
        ));
    }
    let mut primitives = Vec::with_capacity(n_prim);
    for i in 0..n_prim {
        let (cl, center) = centers[i];
        if center < 1 || center as usize > n_nuclei {
            return Err(count_mismatch(
                SEC_CENTERS,
                cl,
                format!("primitive {} centered on nucleus {center} of {n_nuclei}", i + 1),
            ));
        }
        let (tl, code) = types[i];
        if !(1..=basis::MAX_TYPE_CODE as i64).contains(&code) {
            return Err(WfxError::UnsupportedPrimitiveType {
                section: SEC_TYPES.into(),
                line: tl,
                code,
            });
        }
        let (el, exponent) = exponents[i];
        if exponent <= 0.0 {
            return Err(count_mismatch(
                SEC_EXPONENTS,
                el,
                format!("primitive {} has non-positive exponent {exponent}", i + 1),
            ));
        }
        primitives.push(Primitive {
            center: center as usize - 1,
            type_code: code as u32,
            exponent,
        });
    }

    let occupations = parse_reals(occ_sec, SEC_OCCUPATIONS)?;
    let n_orb = occupations.len();
    let energies = match sections.get(SEC_ENERGIES) {
        Some(sec) => {
            let e = parse_reals(sec, SEC_ENERGIES)?;
            if e.len() != n_orb {
                return Err(count_mismatch(
                    SEC_ENERGIES,
                    sec.line,
                    format!("{} energies for {n_orb} orbitals", e.len()),
                ));
            }
            e.into_iter().map(|(_, v)| v).collect()
        }
        None => vec![0.0; n_orb],
    };
    let spins = match sections.get(SEC_SPINS) {
        Some(sec) => parse_spins(sec)?,
        None => vec![SpinTag::Paired; n_orb],
    };
    if spins.len() != n_orb {
        return Err(count_mismatch(
            SEC_SPINS,
            sections[SEC_SPINS].line,
            format!("{} spin types for {n_orb} orbitals", spins.len()),
        ));
    }

    let coefficients = parse_coefficients(coef_sec, n_prim)?;
    if coefficients.len() != n_orb {
        return Err(count_mismatch(
            SEC_COEFFICIENTS,
            coef_sec.line,
            format!("{} coefficient blocks for {n_orb} orbitals", coefficients.len()),
        ));
    }

    let norms: Vec<f64> = primitives
        .iter()
        .map(|p| basis::normalization(p.powers(), p.exponent))
        .collect();
    let orbitals: Vec<Orbital> = (0..n_orb)
        .map(|i| {
            let mut coefficients = coefficients[i].clone();
            if !options.normalized_primitives {
                for (c, n) in coefficients.iter_mut().zip(&norms) {
                    *c /= n;
                }
            }
            Orbital {
                occupation: occupations[i].1,
                spin: spins[i],
                energy: energies[i],
                coefficients,
            }
        })
        .collect();

    let declared_electron_count = match sections.get(SEC_ELECTRONS) {
        Some(sec) => {
            let vals = parse_reals(sec, SEC_ELECTRONS)?;
            let &(ln, v) = vals.first().ok_or_else(|| {
                count_mismatch(SEC_ELECTRONS, sec.line, "empty section".into())
            })?;
            if v < 0.0 || v.fract() != 0.0 {
                return Err(count_mismatch(SEC_ELECTRONS, ln, format!("electron count {v} is not a whole number")));
            }
            v as u32
        }
        None => orbitals.iter().map(|o| o.occupation).sum::<f64>().round() as u32,
    };

    let title = sections
        .get("Title")
        .map(|s| s.body.iter().map(|(_, t)| *t).collect::<Vec<_>>().join(" "))
        .unwrap_or_default();

    let mut lines = HashMap::new();
    for name in [SEC_CENTERS, SEC_EXPONENTS, SEC_OCCUPATIONS, SEC_COEFFICIENTS] {
        if let Some(s) = sections.get(name) {
            lines.insert(name, s.line);
        }
    }
    let wfn = WavefunctionData {
        title,
        nuclei,
        primitives,
        orbitals,
        declared_electron_count,
        norms,
    };
    wfn.validate(&lines)?;
    Ok(wfn)
}

fn parse_spins(sec: &Section) -> Result<Vec<SpinTag>, WfxError> {
    sec.body
        .iter()
        .filter(|(_, t)| !t.is_empty())
        .map(|&(ln, t)| {
            let lower = t.to_ascii_lowercase();
            let words: Vec<&str> = lower.split_whitespace().collect();
            match words.as_slice() {
                ["alpha", "and", "beta"] => Ok(SpinTag::Paired),
                ["alpha"] => Ok(SpinTag::Alpha),
                ["beta"] => Ok(SpinTag::Beta),
                _ => Err(count_mismatch(SEC_SPINS, ln, format!("unknown spin type {t:?}"))),
            }
        })
        .collect()
}

fn parse_coefficients(sec: &Section, n_prim: usize) -> Result<Vec<Vec<f64>>, WfxError> {
    let mut blocks: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut in_number = false;
    for &(ln, text) in &sec.body {
        if text.starts_with('<') {
            let tag = text.trim_matches(|c| c == '<' || c == '>' || c == '/').trim();
            if tag == SEC_MO_NUMBER {
                in_number = !text.starts_with("</");
                if in_number {
                    blocks.push((ln, Vec::new()));
                }
                continue;
            }
            return Err(count_mismatch(SEC_COEFFICIENTS, ln, format!("unexpected tag {text:?}")));
        }
        if in_number {
            continue;
        }
        let (_, block) = blocks.last_mut().ok_or_else(|| {
            count_mismatch(SEC_COEFFICIENTS, ln, "coefficients before any <MO Number>".into())
        })?;
        for tok in text.split_whitespace() {
            block.push(parse_real(tok).ok_or_else(|| malformed(SEC_COEFFICIENTS, ln, tok))?);
        }
    }
    blocks
        .into_iter()
        .enumerate()
        .map(|(i, (ln, block))| {
            if block.len() == n_prim {
                Ok(block)
            } else {
                Err(count_mismatch(
                    SEC_COEFFICIENTS,
                    ln,
                    format!("orbital {} has {} coefficients for {n_prim} primitives", i + 1, block.len()),
                ))
            }
        })
        .collect()
}

/// Formats a value with 16 significant digits.
pub fn format_real(v: f64) -> String {
    format!("{v:.15E}")
}

/// Serializes to `.wfx`. Coefficients are written over normalized primitives.
pub fn write_wfx(wfn: &WavefunctionData) -> String {
    let mut out = String::new();
    let mut section = |name: &str, body: &str| {
        let _ = writeln!(out, "<{name}>");
        out.push_str(body);
        if !body.is_empty() && !body.ends_with('\n') {
            out.push('\n');
        }
        let _ = writeln!(out, "</{name}>");
    };
    let column = |vals: Vec<String>| vals.join("\n");
    let rows = |vals: Vec<String>| {
        vals.chunks(5)
            .map(|c| c.join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    };

    let (na, nb) = electron_counts(wfn);
    section("Title", &wfn.title);
    section("Keywords", "GTO");
    section("Number of Nuclei", &wfn.nuclei.len().to_string());
    section(
        "Number of Occupied Molecular Orbitals",
        &wfn.orbitals.len().to_string(),
    );
    section("Number of Perturbations", "0");
    section(SEC_ELECTRONS, &wfn.declared_electron_count.to_string());
    section("Number of Alpha Electrons", &format!("{}", na.round()));
    section("Number of Beta Electrons", &format!("{}", nb.round()));
    section(
        SEC_NAMES,
        &column(
            wfn.nuclei
                .iter()
                .enumerate()
                .map(|(i, n)| format!("{}{}", n.symbol, i + 1))
                .collect(),
        ),
    );
    section(
        SEC_ATOMIC_NUMBERS,
        &column(wfn.nuclei.iter().map(|n| n.atomic_number.to_string()).collect()),
    );
    section(
        "Nuclear Charges",
        &column(
            wfn.nuclei
                .iter()
                .map(|n| format_real(n.atomic_number as f64))
                .collect(),
        ),
    );
    section(
        SEC_COORDS,
        &column(
            wfn.nuclei
                .iter()
                .map(|n| n.position.map(format_real).join(" "))
                .collect(),
        ),
    );
    section("Number of Primitives", &wfn.primitives.len().to_string());
    section(
        SEC_CENTERS,
        &rows(wfn.primitives.iter().map(|p| (p.center + 1).to_string()).collect()),
    );
    section(
        SEC_TYPES,
        &rows(wfn.primitives.iter().map(|p| p.type_code.to_string()).collect()),
    );
    section(
        SEC_EXPONENTS,
        &rows(wfn.primitives.iter().map(|p| format_real(p.exponent)).collect()),
    );
    section(
        SEC_OCCUPATIONS,
        &column(wfn.orbitals.iter().map(|o| format_real(o.occupation)).collect()),
    );
    section(
        SEC_ENERGIES,
        &column(wfn.orbitals.iter().map(|o| format_real(o.energy)).collect()),
    );
    section(
        SEC_SPINS,
        &column(
            wfn.orbitals
                .iter()
                .map(|o| {
                    match o.spin {
                        SpinTag::Alpha => "Alpha",
                        SpinTag::Beta => "Beta",
                        SpinTag::Paired => "Alpha and Beta",
                    }
                    .to_string()
                })
                .collect(),
        ),
    );
    let mut coefs = String::new();
    for (i, o) in wfn.orbitals.iter().enumerate() {
        let _ = writeln!(coefs, "<{SEC_MO_NUMBER}>\n{}\n</{SEC_MO_NUMBER}>", i + 1);
        coefs.push_str(&rows(o.coefficients.iter().map(|&c| format_real(c)).collect()));
        coefs.push('\n');
    }
    section(SEC_COEFFICIENTS, &coefs);
    out
}
