//! Element symbols and Bragg-Slater radii.

/// Bohr per Angstrom.
pub const ANGSTROM_TO_BOHR: f64 = 1.8897261254578281;

/// (symbol, Bragg-Slater radius in Angstrom), indexed by atomic number - 1.
static ELEMENTS: [(&str, f64); 86] = [
    ("H", 0.35),
    ("He", 1.40),
    ("Li", 1.45),
    ("Be", 1.05),
    ("B", 0.85),
    ("C", 0.70),
    ("N", 0.65),
    ("O", 0.60),
    ("F", 0.50),
    ("Ne", 1.50),
    ("Na", 1.80),
    ("Mg", 1.50),
    ("Al", 1.25),
    ("Si", 1.10),
    ("P", 1.00),
    ("S", 1.00),
    ("Cl", 1.00),
    ("Ar", 1.80),
    ("K", 2.20),
    ("Ca", 1.80),
    ("Sc", 1.60),
    ("Ti", 1.40),
    ("V", 1.35),
    ("Cr", 1.40),
    ("Mn", 1.40),
    ("Fe", 1.40),
    ("Co", 1.35),
    ("Ni", 1.35),
    ("Cu", 1.35),
    ("Zn", 1.35),
    ("Ga", 1.30),
    ("Ge", 1.25),
    ("As", 1.15),
    ("Se", 1.15),
    ("Br", 1.15),
    ("Kr", 1.90),
    ("Rb", 2.35),
    ("Sr", 2.00),
    ("Y", 1.80),
    ("Zr", 1.55),
    ("Nb", 1.45),
    ("Mo", 1.45),
    ("Tc", 1.35),
    ("Ru", 1.30),
    ("Rh", 1.35),
    ("Pd", 1.40),
    ("Ag", 1.60),
    ("Cd", 1.55),
    ("In", 1.55),
    ("Sn", 1.45),
    ("Sb", 1.45),
    ("Te", 1.40),
    ("I", 1.40),
    ("Xe", 2.10),
    ("Cs", 2.60),
    ("Ba", 2.15),
    ("La", 1.95),
    ("Ce", 1.85),
    ("Pr", 1.85),
    ("Nd", 1.85),
    ("Pm", 1.85),
    ("Sm", 1.85),
    ("Eu", 1.85),
    ("Gd", 1.80),
    ("Tb", 1.75),
    ("Dy", 1.75),
    ("Ho", 1.75),
    ("Er", 1.75),
    ("Tm", 1.75),
    ("Yb", 1.75),
    ("Lu", 1.75),
    ("Hf", 1.55),
    ("Ta", 1.45),
    ("W", 1.35),
    ("Re", 1.35),
    ("Os", 1.30),
    ("Ir", 1.35),
    ("Pt", 1.35),
    ("Au", 1.35),
    ("Hg", 1.50),
    ("Tl", 1.90),
    ("Pb", 1.80),
    ("Bi", 1.60),
    ("Po", 1.90),
    ("At", 1.45),
    ("Rn", 2.10),
];

pub fn symbol(atomic_number: u32) -> Option<&'static str> {
    let idx = (atomic_number as usize).checked_sub(1)?;
    ELEMENTS.get(idx).map(|e| e.0)
}

/// Looks up an atomic number from a symbol, ignoring case and trailing labels
/// such as the digits in `C12`.
pub fn atomic_number(symbol: &str) -> Option<u32> {
    let letters: String = symbol
        .trim()
        .chars()
        .take_while(|c| c.is_ascii_alphabetic())
        .collect();
    if letters.is_empty() {
        return None;
    }
    // Two-letter symbols win over one-letter prefixes ("Cl" before "C").
    let find = |sym: &str| {
        ELEMENTS
            .iter()
            .position(|(s, _)| s.eq_ignore_ascii_case(sym))
            .map(|p| p as u32 + 1)
    };
    letters
        .get(..2)
        .and_then(find)
        .or_else(|| find(&letters[..1]))
}

/// Bragg-Slater radius in bohr.
pub fn bragg_radius(atomic_number: u32) -> Option<f64> {
    let idx = (atomic_number as usize).checked_sub(1)?;
    ELEMENTS.get(idx).map(|e| e.1 * ANGSTROM_TO_BOHR)
}
