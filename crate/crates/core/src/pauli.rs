//! Pauli-group algebra in binary symplectic form.
//!
//! A string on `n` qubits is stored as two bit masks plus a phase that is a
//! fourth root of unity. Bit `k` of each mask belongs to site `k + 1`; sites
//! are 1-based everywhere in the public interface, with site 1 the leftmost
//! tensor factor (and the most significant bit of a basis index).
//!
//! Single-site letters follow the usual matrices, so `Y = i·X·Z`. A string
//! with `phase = +1` and letters `YZY` is exactly the Hermitian matrix
//! `σy ⊗ σz ⊗ σy`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::{DenseOperator, DENSE_QUBIT_CAP};

/// Largest register a [`PauliString`] can describe (one bit per site in a `u64`).
pub const MAX_STRING_QUBITS: usize = 64;

/// Largest register [`anticommutant`] will enumerate (`4^n` candidates).
pub const ENUMERATION_QUBIT_CAP: usize = 12;

/// A fourth root of unity, stored as the exponent `k` of `i^k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    pub fn exponent(self) -> u32 {
        self.0 as u32
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_complex(self) -> C64 {
        match self.0 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    }

    pub fn times(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    fn prefix(self) -> &'static str {
        match self.0 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        }
    }
}

/// Single-site Pauli letter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// An `n`-qubit Pauli operator `phase · P_1 ⊗ … ⊗ P_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x_mask: u64,
    z_mask: u64,
    phase: Phase,
}

fn mask_for(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_masks(n, 0, 0, Phase::ONE)
    }

    /// Builds a string from raw masks. Bit `k` refers to site `k + 1`.
    pub fn from_masks(n: usize, x_mask: u64, z_mask: u64, phase: Phase) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a pauli string needs at least one qubit"));
        }
        if n > MAX_STRING_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                cap: MAX_STRING_QUBITS,
            });
        }
        let m = mask_for(n);
        if x_mask & !m != 0 || z_mask & !m != 0 {
            return Err(Error::invalid(format!(
                "mask bits set beyond the {n}-qubit register"
            )));
        }
        Ok(PauliString {
            n,
            x_mask,
            z_mask,
            phase,
        })
    }

    /// A single letter at `site` (1-based) with identities elsewhere.
    pub fn single(n: usize, site: usize, p: Pauli) -> Result<Self> {
        Self::from_sites(n, &[(site, p)])
    }

    /// Letters at the given 1-based sites; unlisted sites carry identity.
    pub fn from_sites(n: usize, sites: &[(usize, Pauli)]) -> Result<Self> {
        let mut s = Self::identity(n)?;
        for &(site, p) in sites {
            if site == 0 || site > n {
                return Err(Error::invalid(format!("site {site} out of range 1..={n}")));
            }
            let bit = 1u64 << (site - 1);
            if (s.x_mask | s.z_mask) & bit != 0 {
                return Err(Error::invalid(format!("site {site} given twice")));
            }
            let (x, z) = p.bits();
            if x {
                s.x_mask |= bit;
            }
            if z {
                s.z_mask |= bit;
            }
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        PauliString {
            phase,
            ..self.clone()
        }
    }

    /// Letter at a 1-based site.
    pub fn letter(&self, site: usize) -> Pauli {
        assert!(site >= 1 && site <= self.n, "site {site} out of range");
        let bit = 1u64 << (site - 1);
        Pauli::from_bits(self.x_mask & bit != 0, self.z_mask & bit != 0)
    }

    pub fn is_identity(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> u32 {
        (self.x_mask | self.z_mask).count_ones()
    }

    /// Letters only, site 1 first, without the phase prefix.
    pub fn letters(&self) -> String {
        (1..=self.n).map(|s| self.letter(s).letter()).collect()
    }

    fn check_size(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Group product `self · other` with exact phase.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_size(other)?;
        // Each site is i^{xz} X^x Z^z. Moving Z^{z1} past X^{x2} costs (-1)^{z1 x2},
        // and the result is re-expressed with the i^{-x3 z3} correction.
        let x3 = self.x_mask ^ other.x_mask;
        let z3 = self.z_mask ^ other.z_mask;
        let k = self.phase.exponent()
            + other.phase.exponent()
            + (self.x_mask & self.z_mask).count_ones()
            + (other.x_mask & other.z_mask).count_ones()
            + 2 * (self.z_mask & other.x_mask).count_ones()
            + 3 * (x3 & z3).count_ones();
        Ok(PauliString {
            n: self.n,
            x_mask: x3,
            z_mask: z3,
            phase: Phase::from_exponent(k),
        })
    }

    /// Symplectic form parity; phases do not matter.
    pub fn anticommutes(&self, other: &PauliString) -> Result<bool> {
        self.check_size(other)?;
        let form = (self.x_mask & other.z_mask) ^ (self.z_mask & other.x_mask);
        Ok(form.count_ones() % 2 == 1)
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.anticommutes(other).map(|a| !a)
    }

    /// Dense `2^n × 2^n` matrix, site 1 the most significant tensor factor.
    pub fn to_matrix(&self) -> Result<DenseOperator> {
        if self.n > DENSE_QUBIT_CAP {
            return Err(Error::TooManyQubits {
                n: self.n,
                cap: DENSE_QUBIT_CAP,
            });
        }
        let dim = 1usize << self.n;
        let (bx, bz) = (self.basis_mask(self.x_mask), self.basis_mask(self.z_mask));
        let y_count = (self.x_mask & self.z_mask).count_ones();
        let base = self.phase.times(Phase::from_exponent(y_count)).to_complex();
        let mut m = DMatrix::<C64>::zeros(dim, dim);
        // P|c> = phase · i^{#Y} · (-1)^{z·c} |c ⊕ x>
        for c in 0..dim {
            let r = c ^ bx;
            let sign = if (bz & c).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            m[(r, c)] = base * sign;
        }
        DenseOperator::from_matrix(self.n, m)
    }

    /// Re-indexes a site mask into basis-index bit order.
    fn basis_mask(&self, mask: u64) -> usize {
        let mut out = 0usize;
        for k in 0..self.n {
            if mask >> k & 1 == 1 {
                out |= 1 << (self.n - 1 - k);
            }
        }
        out
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PauliString {
    /// Canonical order: qubit count, then x mask, then z mask, then phase.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.x_mask, self.z_mask, self.phase).cmp(&(
            other.n,
            other.x_mask,
            other.z_mask,
            other.phase,
        ))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.phase.prefix(), self.letters())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `"YZY"`, `"-IXI"`, `"+iZZ"`, `"-iXY"`. One letter per site.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PauliParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (sign, rest) = match trimmed.strip_prefix('-') {
            Some(r) => (Phase::MINUS_ONE, r),
            None => (Phase::ONE, trimmed.strip_prefix('+').unwrap_or(trimmed)),
        };
        let (phase, letters) = match rest.strip_prefix('i') {
            Some(r) => (sign.times(Phase::I), r),
            None => (sign, rest),
        };
        if letters.is_empty() {
            return Err(fail("no site letters"));
        }
        let paulis = letters
            .chars()
            .map(|c| Pauli::from_letter(c).ok_or_else(|| fail("letters must be I, X, Y or Z")))
            .collect::<Result<Vec<_>>>()?;
        let n = paulis.len();
        let sites: Vec<(usize, Pauli)> = paulis
            .into_iter()
            .enumerate()
            .filter(|(_, p)| *p != Pauli::I)
            .map(|(k, p)| (k + 1, p))
            .collect();
        let s = PauliString::from_sites(n, &sites).map_err(|e| fail(&e.to_string()))?;
        Ok(s.with_phase(phase))
    }
}

/// A real-weighted sum of distinct phase-(+1) Pauli strings; always Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: Vec<(f64, PauliString)>,
}

impl PauliSum {
    /// Builds a sum, folding real phases into the coefficients and merging
    /// duplicate strings. Terms whose coefficient ends up exactly zero are
    /// dropped, so they never constrain the anticommutant.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (f64, PauliString)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a pauli sum needs at least one qubit"));
        }
        let mut merged: Vec<(f64, PauliString)> = Vec::new();
        for (coef, s) in terms {
            if s.num_qubits() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: s.num_qubits(),
                });
            }
            if !coef.is_finite() {
                return Err(Error::invalid(format!("non-finite coefficient on {s}")));
            }
            let coef = match s.phase() {
                Phase::ONE => coef,
                Phase::MINUS_ONE => -coef,
                _ => {
                    return Err(Error::invalid(format!(
                        "term {s} has an imaginary phase; the sum would not be Hermitian"
                    )))
                }
            };
            let s = s.with_phase(Phase::ONE);
            match merged.iter_mut().find(|(_, t)| *t == s) {
                Some((c, _)) => *c += coef,
                None => merged.push((coef, s)),
            }
        }
        merged.retain(|(c, _)| *c != 0.0);
        Ok(PauliSum { n, terms: merged })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn to_matrix(&self) -> Result<DenseOperator> {
        if self.n > DENSE_QUBIT_CAP {
            return Err(Error::TooManyQubits {
                n: self.n,
                cap: DENSE_QUBIT_CAP,
            });
        }
        let dim = 1usize << self.n;
        let mut m = DMatrix::<C64>::zeros(dim, dim);
        for (c, s) in &self.terms {
            m += s.to_matrix()?.matrix() * C64::new(*c, 0.0);
        }
        DenseOperator::from_matrix(self.n, m)
    }

    /// First term that commutes with `kick`, if any.
    pub fn first_commuting_term(&self, kick: &PauliString) -> Result<Option<&PauliString>> {
        for (_, s) in &self.terms {
            if s.commutes(kick)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, s)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{s}")?;
        }
        Ok(())
    }
}

/// Every phase-(+1) non-identity Pauli string that anti-commutes with each
/// term of `h`, in canonical order.
///
/// A Pauli string conjugates every Pauli term to plus or minus itself, so for
/// a sum of distinct strings termwise anti-commutation is equivalent to
/// `AH = -HA` for the whole operator.
pub fn anticommutant(h: &PauliSum) -> Result<Vec<PauliString>> {
    if h.is_empty() {
        return Err(Error::invalid("anticommutant of an empty hamiltonian"));
    }
    let n = h.num_qubits();
    if n > ENUMERATION_QUBIT_CAP {
        return Err(Error::TooManyQubits {
            n,
            cap: ENUMERATION_QUBIT_CAP,
        });
    }
    let masks: Vec<(u64, u64)> = h
        .terms()
        .iter()
        .map(|(_, s)| (s.x_mask(), s.z_mask()))
        .collect();
    let top = 1u64 << n;
    let mut out = Vec::new();
    for x in 0..top {
        for z in 0..top {
            if x == 0 && z == 0 {
                continue;
            }
            let all_anti = masks
                .iter()
                .all(|&(tx, tz)| ((x & tz) ^ (z & tx)).count_ones() % 2 == 1);
            if all_anti {
                out.push(PauliString {
                    n,
                    x_mask: x,
                    z_mask: z,
                    phase: Phase::ONE,
                });
            }
        }
    }
    Ok(out)
}
