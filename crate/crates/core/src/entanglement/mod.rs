//! Concurrence-vector entanglement of pure qubit states.
//!
//! For a pair of sites `(i, j)` the component is
//! `C^{ij} = sqrt(<ψ| M ρ^{T_ij} M |ψ>)` with `ρ = |ψ><ψ|`, `ρ^{T_ij}` the
//! partial transpose over both sites and `M` carrying `S = iσy` on sites `i`
//! and `j`. The concurrence vector norm is the root of the sum of squared
//! components over all pairs.

pub mod closed;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::StateVector;

pub use closed::{ClosedFormParams, GFunctions, Mode, Pair};

const IMAG_TOL: f64 = 1e-10;
const CLAMP_TOL: f64 = 1e-10;

/// Generators of `SO(dim)` used to build the `M` operators.
///
/// Only qubits are supported, where the single generator is `S = iσy`.
pub fn so_generators(dim: usize) -> Result<Vec<DMatrix<C64>>> {
    match dim {
        2 => Ok(vec![DMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(-1.0, 0.0),
                C64::new(0.0, 0.0),
            ],
        )]),
        _ => Err(Error::Unsupported(format!(
            "concurrence vector for local dimension {dim}; only qubits are implemented"
        ))),
    }
}

/// Squared pairwise component `<ψ| M ρ^{T_ij} M |ψ>` before the square root.
///
/// Evaluated without forming `ρ`: with `φ = Mψ`, the value is
/// `Σ_{a,b} conj(φ_a) ψ_{a'} conj(ψ_{b'}) φ_b`, where `a'` and `b'` swap the
/// bits of sites `i` and `j` between `a` and `b`.
pub fn pairwise_expectation(psi: &StateVector, i: usize, j: usize) -> Result<C64> {
    let n = psi.num_qubits();
    if i == j {
        return Err(Error::invalid(format!(
            "pair ({i}, {j}) needs distinct sites"
        )));
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::invalid(format!(
            "pair ({i}, {j}) out of range for {n} qubits"
        )));
    }
    let (bi, bj) = (1usize << (n - i), 1usize << (n - j));
    let pair_mask = bi | bj;
    let amps = psi.amplitudes();
    let dim = psi.dim();

    // S|0> = -|1>, S|1> = |0>, so (Mψ)_a = s(a_i) s(a_j) ψ_{a ⊕ mask} with s(0)=+1, s(1)=-1.
    let phi: Vec<C64> = (0..dim)
        .map(|a| {
            let flips = (a & bi != 0) as u32 + (a & bj != 0) as u32;
            let v = amps[a ^ pair_mask];
            if flips.is_multiple_of(2) {
                v
            } else {
                -v
            }
        })
        .collect();

    let mut total = C64::new(0.0, 0.0);
    for a in 0..dim {
        let pa = phi[a].conj();
        if pa == C64::new(0.0, 0.0) {
            continue;
        }
        let a_keep = a & !pair_mask;
        let a_pair = a & pair_mask;
        let mut row = C64::new(0.0, 0.0);
        for (b, pb) in phi.iter().enumerate() {
            if *pb == C64::new(0.0, 0.0) {
                continue;
            }
            let a_t = a_keep | (b & pair_mask);
            let b_t = (b & !pair_mask) | a_pair;
            row += amps[a_t] * amps[b_t].conj() * pb;
        }
        total += pa * row;
    }
    Ok(total)
}

/// Square root of a real expectation value, clamping noise-level negatives.
pub(crate) fn checked_sqrt(value: C64, what: &str) -> Result<f64> {
    if value.im.abs() > IMAG_TOL {
        return Err(Error::Numerical(format!(
            "{what} has imaginary part {:e}",
            value.im
        )));
    }
    if value.re < -CLAMP_TOL {
        return Err(Error::Numerical(format!(
            "{what} is negative ({:e})",
            value.re
        )));
    }
    Ok(value.re.max(0.0).sqrt())
}

/// `C^{ij}` for 1-based sites `i < j`.
pub fn pairwise_concurrence(psi: &StateVector, i: usize, j: usize) -> Result<f64> {
    if i >= j {
        return Err(Error::invalid(format!(
            "pair ({i}, {j}) must satisfy i < j"
        )));
    }
    let v = pairwise_expectation(psi, i, j)?;
    checked_sqrt(v, &format!("C^{{{i}{j}}} radicand"))
}

/// All components `((i, j), C^{ij})` for `i < j`, in lexicographic pair order.
pub fn pairwise_all(psi: &StateVector) -> Result<Vec<((usize, usize), f64)>> {
    let n = psi.num_qubits();
    if n < 2 {
        return Err(Error::invalid("concurrence needs at least two qubits"));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(((i, j), pairwise_concurrence(psi, i, j)?));
        }
    }
    Ok(out)
}

/// `|CV| = sqrt(Σ_{i<j} (C^{ij})²)`
pub fn concurrence_vector(psi: &StateVector) -> Result<f64> {
    let pairs = pairwise_all(psi)?;
    Ok(pairs.iter().map(|(_, c)| c * c).sum::<f64>().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::ghz_state;
    use nalgebra::DVector;

    #[test]
    fn ghz_components() {
        let g = ghz_state(3).unwrap();
        for (_, c) in pairwise_all(&g).unwrap() {
            assert!((c - 0.5f64.sqrt()).abs() < 1e-15);
        }
        let cv = concurrence_vector(&g).unwrap();
        assert!((cv - 1.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn product_state_is_unentangled() {
        let s = StateVector::from_bits("000").unwrap();
        assert_eq!(concurrence_vector(&s).unwrap(), 0.0);
    }

    #[test]
    fn bell_state_has_unit_concurrence() {
        let bell = ghz_state(2).unwrap();
        assert!((pairwise_concurrence(&bell, 1, 2).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn w_state_pair() {
        let a = C64::new(1.0 / 3f64.sqrt(), 0.0);
        let mut v = DVector::zeros(8);
        v[1] = a;
        v[2] = a;
        v[4] = a;
        let w = StateVector::new(3, v).unwrap();
        assert!((pairwise_concurrence(&w, 1, 2).unwrap() - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn bad_pairs() {
        let g = ghz_state(3).unwrap();
        assert!(pairwise_concurrence(&g, 2, 2).is_err());
        assert!(pairwise_concurrence(&g, 3, 1).is_err());
        assert!(pairwise_concurrence(&g, 0, 1).is_err());
        assert!(pairwise_concurrence(&g, 1, 4).is_err());
    }

    #[test]
    fn sqrt_guard() {
        assert_eq!(checked_sqrt(C64::new(-5e-11, 0.0), "x").unwrap(), 0.0);
        assert!(matches!(
            checked_sqrt(C64::new(-1e-6, 0.0), "x"),
            Err(Error::Numerical(_))
        ));
        assert!(checked_sqrt(C64::new(0.5, 1e-6), "x").is_err());
    }

    #[test]
    fn only_qubit_generators() {
        assert_eq!(so_generators(2).unwrap().len(), 1);
        assert!(matches!(so_generators(3), Err(Error::Unsupported(_))));
    }
}
