//! Exact simulation of parity-kick entanglement protection in small spin chains.
//!
//! A Hamiltonian `H` given as a sum of Pauli strings is searched for Pauli
//! strings `A` with `AH = −HA`. Interleaving free evolution with such kicks,
//! `A·U(T)·A·U(T) = I`, repeatedly drives the state back to its starting
//! point, which keeps its concurrence vector close to the initial value.
//!
//! * [`pauli`]: symplectic Pauli algebra and anticommutant enumeration.
//! * [`hilbert`]: dense states, operators and eigen-propagators.
//! * [`dynamics`]: free and kicked schedules, trajectory sampling.
//! * [`entanglement`]: concurrence vector and closed-form trajectories.
//! * [`experiments`]: scenarios, named presets, sweeps, CSV/JSON output.

pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod experiments;
pub mod hilbert;
pub mod models;
pub mod pauli;

pub use error::{Error, Result};
