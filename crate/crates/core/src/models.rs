//! Hamiltonian builders.

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum};

/// Open transverse-field Ising chain
/// `Σ_i J_i Z_i Z_{i+1} + Σ_i h_i X_i` on `n = h.len()` sites.
pub fn ising_chain(couplings: &[f64], fields: &[f64]) -> Result<PauliSum> {
    let n = fields.len();
    if n < 2 {
        return Err(Error::validation(
            "h",
            "an Ising chain needs at least 2 sites",
        ));
    }
    if couplings.len() != n - 1 {
        return Err(Error::validation(
            "j",
            format!(
                "expected {} couplings for {n} sites, got {}",
                n - 1,
                couplings.len()
            ),
        ));
    }
    let mut terms = Vec::with_capacity(2 * n - 1);
    for (k, &j) in couplings.iter().enumerate() {
        let s = PauliString::from_sites(n, &[(k + 1, Pauli::Z), (k + 2, Pauli::Z)])?;
        terms.push((j, s));
    }
    for (k, &h) in fields.iter().enumerate() {
        terms.push((h, PauliString::single(n, k + 1, Pauli::X)?));
    }
    PauliSum::new(n, terms)
}

/// Three-site chain with the field only on the middle site:
/// `J1·ZZI + J2·IZZ + h2·IXI`.
pub fn ising_three_site(j1: f64, j2: f64, h2: f64) -> Result<PauliSum> {
    ising_chain(&[j1, j2], &[0.0, h2, 0.0])
}

/// Two-qubit anisotropic exchange with a Dzyaloshinskii–Moriya term:
/// `J1·XX + J2·YY + D·(XY − YX)`.
pub fn heisenberg_dm(j1: f64, j2: f64, d: f64) -> Result<PauliSum> {
    let p = |s: &str| s.parse::<PauliString>();
    PauliSum::new(
        2,
        [
            (j1, p("XX")?),
            (j2, p("YY")?),
            (d, p("XY")?),
            (-d, p("YX")?),
        ],
    )
}
