use nalgebra::DVector;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::entanglement::ClosedFormParams;
use crate::error::{Error, Result};
use crate::hilbert::{ghz_state, StateVector, DENSE_QUBIT_CAP};
use crate::models::{heisenberg_dm, ising_chain};
use crate::pauli::{anticommutant, PauliString, PauliSum};

/// A complete run description. Deserializes from TOML; unknown keys are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub model: ModelSpec,
    pub initial_state: InitialState,
    pub schedule: ScheduleSpec,
    pub total_time: f64,
    pub samples: usize,
    #[serde(default = "OutputKind::all")]
    pub outputs: Vec<OutputKind>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    IsingChain { n: usize, j: Vec<f64>, h: Vec<f64> },
    HeisenbergDm { j1: f64, j2: f64, d: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialState {
    Ghz {},
    /// Computational basis state, site 1 first, e.g. `"010"`.
    Basis {
        bits: String,
    },
    /// `[re, im]` pairs; normalized on use.
    Custom {
        amplitudes: Vec<[f64; 2]>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleSpec {
    /// `"none"` for free evolution, `"auto"` for the first canonical
    /// anti-commuting string, or Pauli text such as `"YZY"`.
    pub kick: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_period: Option<f64>,
    #[serde(default)]
    pub offset: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    Cv,
    Pairwise,
    ClosedForms,
    Residuals,
}

impl OutputKind {
    pub fn all() -> Vec<OutputKind> {
        vec![
            OutputKind::Cv,
            OutputKind::Pairwise,
            OutputKind::ClosedForms,
            OutputKind::Residuals,
        ]
    }
}

/// How the kick was chosen.
#[derive(Clone, Debug, PartialEq)]
pub enum KickChoice {
    None,
    Auto,
    Explicit(PauliString),
}

impl ScheduleSpec {
    pub fn free() -> Self {
        ScheduleSpec {
            kick: "none".into(),
            half_period: None,
            offset: 0.0,
        }
    }

    pub fn choice(&self) -> Result<KickChoice> {
        match self.kick.trim() {
            "none" | "free" => Ok(KickChoice::None),
            "auto" => Ok(KickChoice::Auto),
            text => text
                .parse::<PauliString>()
                .map(KickChoice::Explicit)
                .map_err(|e| Error::validation("schedule.kick", e.to_string())),
        }
    }
}

impl ModelSpec {
    pub fn num_qubits(&self) -> usize {
        match self {
            ModelSpec::IsingChain { n, .. } => *n,
            ModelSpec::HeisenbergDm { .. } => 2,
        }
    }

    pub fn build(&self) -> Result<PauliSum> {
        match self {
            ModelSpec::IsingChain { n, j, h } => {
                if *n < 2 || *n > DENSE_QUBIT_CAP {
                    return Err(Error::validation(
                        "model.n",
                        format!("must be in 2..={DENSE_QUBIT_CAP}, got {n}"),
                    ));
                }
                if j.len() != n - 1 {
                    return Err(Error::validation(
                        "model.j",
                        format!("expected {} couplings, got {}", n - 1, j.len()),
                    ));
                }
                if h.len() != *n {
                    return Err(Error::validation(
                        "model.h",
                        format!("expected {n} fields, got {}", h.len()),
                    ));
                }
                if j.iter().chain(h).any(|v| !v.is_finite()) {
                    return Err(Error::validation("model", "coefficients must be finite"));
                }
                ising_chain(j, h)
            }
            ModelSpec::HeisenbergDm { j1, j2, d } => {
                if ![j1, j2, d].iter().all(|v| v.is_finite()) {
                    return Err(Error::validation("model", "coefficients must be finite"));
                }
                heisenberg_dm(*j1, *j2, *d)
            }
        }
    }

    /// Parameters of the three-site chain with `h1 = h3 = 0`, the only model
    /// with closed-form trajectories.
    pub fn closed_form_params(&self) -> Option<ClosedFormParams> {
        match self {
            ModelSpec::IsingChain { n: 3, j, h }
                if j.len() == 2 && h.len() == 3 && h[0] == 0.0 && h[2] == 0.0 =>
            {
                ClosedFormParams::new(j[0], j[1], h[1]).ok()
            }
            _ => None,
        }
    }
}

impl InitialState {
    pub fn build(&self, n: usize) -> Result<StateVector> {
        match self {
            InitialState::Ghz {} => ghz_state(n),
            InitialState::Basis { bits } => {
                if bits.len() != n {
                    return Err(Error::validation(
                        "initial_state.bits",
                        format!("expected {n} bits, got {}", bits.len()),
                    ));
                }
                StateVector::from_bits(bits)
                    .map_err(|e| Error::validation("initial_state.bits", e.to_string()))
            }
            InitialState::Custom { amplitudes } => {
                let dim = 1usize << n;
                if amplitudes.len() != dim {
                    return Err(Error::validation(
                        "initial_state.amplitudes",
                        format!("expected {dim} amplitudes, got {}", amplitudes.len()),
                    ));
                }
                let v = DVector::from_iterator(
                    dim,
                    amplitudes.iter().map(|[re, im]| C64::new(*re, *im)),
                );
                StateVector::normalized(n, v)
                    .map_err(|e| Error::validation("initial_state.amplitudes", e.to_string()))
            }
        }
    }
}

impl Scenario {
    pub fn wants(&self, kind: OutputKind) -> bool {
        self.outputs.contains(&kind)
    }

    /// Resolves the kick against `model`. `"auto"` picks the first string
    /// of the canonical anticommutant.
    pub fn resolve_kick(&self, model: &PauliSum) -> Result<Option<PauliString>> {
        match self.schedule.choice()? {
            KickChoice::None => Ok(None),
            KickChoice::Explicit(k) => {
                if k.num_qubits() != model.num_qubits() {
                    return Err(Error::validation(
                        "schedule.kick",
                        format!(
                            "{k} has {} sites, model has {}",
                            k.num_qubits(),
                            model.num_qubits()
                        ),
                    ));
                }
                Ok(Some(k))
            }
            KickChoice::Auto => anticommutant(model)?
                .into_iter()
                .next()
                .map(Some)
                .ok_or_else(|| {
                    Error::validation("schedule.kick", "model has no anti-commuting Pauli string")
                }),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }
}
