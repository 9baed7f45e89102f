//! Atomic populations of effectively localized electrons (APELE) from
//! single-determinant wavefunctions, and the usual nondynamic-correlation
//! diagnostics for comparison.
//!
//! The pipeline: [`wfx`] reads orbitals, [`grid`] builds a Becke molecular
//! grid, [`fields`] evaluates densities and the exact-exchange energy density
//! at each point, [`hole`] relaxes a Becke-Roussel hole against it, and
//! [`apele`] integrates the resulting ELE density per atom.
//!
//! All quantities are in atomic units.

pub mod apele;
pub mod basis;
pub mod boys;
pub mod diagnostics;
pub mod elements;
pub mod esp;
pub mod fields;
pub mod grid;
pub mod hole;
pub mod roots;
pub mod wfx;

use thiserror::Error;

/// Any error the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Wfx(#[from] wfx::WfxError),
    #[error(transparent)]
    Grid(#[from] grid::GridError),
    #[error(transparent)]
    Integral(#[from] esp::IntegralError),
    #[error(transparent)]
    Boys(#[from] boys::BoysError),
    #[error(transparent)]
    Hole(#[from] hole::HoleError),
    #[error(transparent)]
    Apele(#[from] apele::ApeleError),
    #[error(transparent)]
    Diagnostics(#[from] diagnostics::DiagnosticsError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reads and parses a `.wfx` file.
pub fn read_wfx(path: impl AsRef<std::path::Path>) -> Result<wfx::WavefunctionData> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(wfx::parse_wfx(&text)?)
}
