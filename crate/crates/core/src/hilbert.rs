//! Dense states and operators on `2^n`-dimensional registers.
//!
//! Basis index bits are ordered with site 1 as the most significant bit, so
//! `|b1 b2 … bn>` has index `b1·2^{n-1} + … + bn`. `ħ = 1` throughout.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest register the dense routines accept.
pub const DENSE_QUBIT_CAP: usize = 12;

const NORM_DRIFT_TOL: f64 = 1e-12;
const HERMITIAN_TOL: f64 = 1e-12;

/// Largest entry modulus of a complex matrix.
pub fn max_modulus(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_qubits(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("register needs at least one qubit"));
    }
    if n > DENSE_QUBIT_CAP {
        return Err(Error::TooManyQubits {
            n,
            cap: DENSE_QUBIT_CAP,
        });
    }
    Ok(1 << n)
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: DVector<C64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalized (within `1e-9`).
    pub fn new(n: usize, amplitudes: DVector<C64>) -> Result<Self> {
        let dim = check_qubits(n)?;
        if amplitudes.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::invalid(format!("state norm is {norm}, expected 1")));
        }
        Ok(StateVector { n, amplitudes })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(n: usize, amplitudes: DVector<C64>) -> Result<Self> {
        let norm = amplitudes.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::invalid(
                "cannot normalize a zero or non-finite vector",
            ));
        }
        Self::new(n, amplitudes.unscale(norm))
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let dim = check_qubits(n)?;
        if index >= dim {
            return Err(Error::invalid(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut v = DVector::zeros(dim);
        v[index] = C64::new(1.0, 0.0);
        Ok(StateVector { n, amplitudes: v })
    }

    /// Basis state from a bit string such as `"010"`, site 1 first.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let n = bits.len();
        let mut index = 0usize;
        for c in bits.chars() {
            index <<= 1;
            match c {
                '0' => {}
                '1' => index |= 1,
                _ => return Err(Error::invalid(format!("bit string {bits:?} must be 0/1"))),
            }
        }
        Self::basis(n, index)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `<self|other>`
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        self.check_dim(other.dim())?;
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Euclidean distance between amplitude vectors (global phase counts).
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok((&self.amplitudes - &other.amplitudes).norm())
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }

    fn from_raw(n: usize, amplitudes: DVector<C64>) -> Self {
        let drift = (amplitudes.norm() - 1.0).abs();
        if drift > NORM_DRIFT_TOL {
            log::warn!("state norm drifted by {drift:e}; renormalizing");
            let norm = amplitudes.norm();
            return StateVector {
                n,
                amplitudes: amplitudes.unscale(norm),
            };
        }
        StateVector { n, amplitudes }
    }
}

/// `(|0…0> + |1…1>)/√2`.
pub fn ghz_state(n: usize) -> Result<StateVector> {
    if n < 2 {
        return Err(Error::invalid(format!("GHZ state needs n >= 2, got {n}")));
    }
    let dim = check_qubits(n)?;
    let mut v = DVector::zeros(dim);
    let a = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    v[0] = a;
    v[dim - 1] = a;
    Ok(StateVector { n, amplitudes: v })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    n: usize,
    matrix: DMatrix<C64>,
}

impl DenseOperator {
    pub fn from_matrix(n: usize, matrix: DMatrix<C64>) -> Result<Self> {
        let dim = check_qubits(n)?;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(DenseOperator { n, matrix })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let dim = check_qubits(n)?;
        Ok(DenseOperator {
            n,
            matrix: DMatrix::identity(dim, dim),
        })
    }

    /// `⊗` over single-site 2×2 factors, site 1 first.
    pub fn kron_sites(factors: &[DMatrix<C64>]) -> Result<Self> {
        let n = factors.len();
        check_qubits(n)?;
        let mut m = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
        for f in factors {
            if f.nrows() != 2 || f.ncols() != 2 {
                return Err(Error::Dimension {
                    expected: 2,
                    got: f.nrows(),
                });
            }
            m = m.kronecker(f);
        }
        Self::from_matrix(n, m)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.matrix
    }

    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator {
            n: self.n,
            matrix: self.matrix.adjoint(),
        }
    }

    /// `self · other`
    pub fn compose(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(DenseOperator {
            n: self.n,
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        max_modulus(&(&self.matrix - &other.matrix))
    }

    /// `max |U†U - I|`
    pub fn unitarity_residual(&self) -> f64 {
        let dim = self.dim();
        max_modulus(&(self.matrix.adjoint() * &self.matrix - DMatrix::<C64>::identity(dim, dim)))
    }

    pub fn hermiticity_residual(&self) -> f64 {
        max_modulus(&(&self.matrix - self.matrix.adjoint()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.norm()
    }

    /// Matrix-vector product for a unitary `self`. The result is renormalized
    /// (with a logged warning) if its norm drifted by more than `1e-12`.
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if psi.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: psi.dim(),
            });
        }
        Ok(StateVector::from_raw(
            self.n,
            &self.matrix * &psi.amplitudes,
        ))
    }
}

/// Hermitian eigendecomposition with eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct Spectrum {
    n: usize,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<C64>,
}

pub fn eigensolve(h: &DenseOperator) -> Result<Spectrum> {
    let scale = h.frobenius_norm().max(1.0);
    let residual = h.hermiticity_residual();
    if residual > HERMITIAN_TOL * scale {
        return Err(Error::invalid(format!(
            "operator is not Hermitian (residual {residual:e})"
        )));
    }
    let sym = (h.matrix() + h.matrix().adjoint()) * C64::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues =
        DVector::from_iterator(order.len(), order.iter().map(|&k| eig.eigenvalues[k]));
    let eigenvectors = DMatrix::from_columns(
        &order
            .iter()
            .map(|&k| eig.eigenvectors.column(k).into_owned())
            .collect::<Vec<_>>(),
    );
    Ok(Spectrum {
        n: h.num_qubits(),
        eigenvalues,
        eigenvectors,
    })
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<C64> {
        &self.eigenvectors
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// `V·diag(λ)·V†`
    pub fn reconstruct(&self) -> DenseOperator {
        let d = DMatrix::from_diagonal(&self.eigenvalues.map(|l| C64::new(l, 0.0)));
        DenseOperator {
            n: self.n,
            matrix: &self.eigenvectors * d * self.eigenvectors.adjoint(),
        }
    }

    fn phases(&self, t: f64) -> Result<DVector<C64>> {
        if !t.is_finite() {
            return Err(Error::invalid(format!(
                "evolution time must be finite, got {t}"
            )));
        }
        Ok(self.eigenvalues.map(|l| C64::from_polar(1.0, -l * t)))
    }

    /// `exp(-iHt) = V·diag(e^{-iλt})·V†`
    pub fn propagator(&self, t: f64) -> Result<DenseOperator> {
        let phases = self.phases(t)?;
        let mut scaled = self.eigenvectors.clone();
        for (k, mut col) in scaled.column_iter_mut().enumerate() {
            col *= phases[k];
        }
        Ok(DenseOperator {
            n: self.n,
            matrix: scaled * self.eigenvectors.adjoint(),
        })
    }

    /// `exp(-iHt)|ψ>` without forming the propagator.
    pub fn evolve(&self, psi: &StateVector, t: f64) -> Result<StateVector> {
        if psi.dim() != self.eigenvalues.len() {
            return Err(Error::Dimension {
                expected: self.eigenvalues.len(),
                got: psi.dim(),
            });
        }
        let phases = self.phases(t)?;
        if t == 0.0 {
            return Ok(psi.clone());
        }
        let mut coeffs = self.eigenvectors.ad_mul(psi.amplitudes());
        coeffs.component_mul_assign(&phases);
        Ok(StateVector::from_raw(self.n, &self.eigenvectors * coeffs))
    }
}
