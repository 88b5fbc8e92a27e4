//! Free and kick-controlled evolution schedules.
//!
//! A kicked schedule evolves freely for `offset`, then repeats the cycle
//! `U(T) → A → U(T) → A`. When `A` anti-commutes with `H`, the cycle is the
//! identity (`A·U(T)·A = U(−T)`), so the state returns to `ψ(offset)` at every
//! boundary `offset + 2kT`.
//!
//! Kicks are applied at their instant (right-continuous): at `τ' = T` the
//! state already includes the first kick, at `τ' = 2T` the cycle is closed
//! and the next one starts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::pairwise_all;
use crate::error::{Error, Result};
use crate::hilbert::{eigensolve, max_modulus, DenseOperator, Spectrum, StateVector};
use crate::pauli::{PauliString, PauliSum};

/// Matrix-level tolerance on `‖AH + HA‖_max / ‖H‖`.
pub const ANTICOMMUTATION_TOL: f64 = 1e-12;
/// Tolerance on `‖A U(T) A U(T) − I‖_max`.
pub const CYCLE_IDENTITY_TOL: f64 = 1e-10;

/// Relative snapping window used to land floating-point times exactly on
/// kick boundaries.
const SNAP: f64 = 1e-12;

/// Checks `AH = −HA` termwise, then at matrix level.
pub fn verify_kick(model: &PauliSum, kick: &PauliString) -> Result<()> {
    if kick.num_qubits() != model.num_qubits() {
        return Err(Error::Dimension {
            expected: model.num_qubits(),
            got: kick.num_qubits(),
        });
    }
    if !kick.is_hermitian() {
        return Err(Error::invalid(format!("kick {kick} is not Hermitian")));
    }
    if let Some(term) = model.first_commuting_term(kick)? {
        return Err(Error::NotAntiCommuting {
            kick: kick.to_string(),
            term: term.to_string(),
        });
    }
    let h = model.to_matrix()?;
    let a = kick.to_matrix()?;
    let anti = max_modulus(&(a.matrix() * h.matrix() + h.matrix() * a.matrix()));
    let scale = h.frobenius_norm().max(1.0);
    if anti > ANTICOMMUTATION_TOL * scale {
        return Err(Error::Numerical(format!(
            "kick {kick}: ‖AH + HA‖ = {anti:e} exceeds tolerance"
        )));
    }
    Ok(())
}

/// `A·U(T)·A·U(T)`, which must be the identity within [`CYCLE_IDENTITY_TOL`].
pub fn cyclic_operator(
    model: &PauliSum,
    kick: &PauliString,
    half_period: f64,
) -> Result<DenseOperator> {
    verify_kick(model, kick)?;
    if !(half_period >= 0.0 && half_period.is_finite()) {
        return Err(Error::invalid(format!(
            "half period must be finite and ≥ 0, got {half_period}"
        )));
    }
    let spectrum = eigensolve(&model.to_matrix()?)?;
    let u = spectrum.propagator(half_period)?;
    let a = kick.to_matrix()?;
    let cycle = a.compose(&u)?.compose(&a)?.compose(&u)?;
    let residual = cycle.max_abs_diff(&DenseOperator::identity(model.num_qubits())?);
    if residual > CYCLE_IDENTITY_TOL {
        return Err(Error::Numerical(format!(
            "cycle with kick {kick} deviates from identity by {residual:e}"
        )));
    }
    Ok(cycle)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KickSchedule {
    half_period: f64,
    kick: Option<PauliString>,
    offset: f64,
    total_time: f64,
    samples: usize,
}

fn check_time(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v >= 0.0) {
        return Err(Error::validation(
            name,
            format!("must be finite and ≥ 0, got {v}"),
        ));
    }
    Ok(())
}

impl KickSchedule {
    /// Uncontrolled evolution over `[0, total_time]`.
    pub fn free(total_time: f64, samples: usize) -> Result<Self> {
        check_time("total_time", total_time)?;
        if samples < 2 {
            return Err(Error::validation("samples", "need at least 2"));
        }
        Ok(KickSchedule {
            half_period: 0.0,
            kick: None,
            offset: 0.0,
            total_time,
            samples,
        })
    }

    /// Kick cycles with half-period `half_period`, starting after `offset` of
    /// free evolution. The kick is checked against `model`.
    pub fn kicked(
        model: &PauliSum,
        kick: PauliString,
        half_period: f64,
        offset: f64,
        total_time: f64,
        samples: usize,
    ) -> Result<Self> {
        if !(half_period.is_finite() && half_period > 0.0) {
            return Err(Error::validation(
                "half_period",
                format!("must be finite and > 0, got {half_period}"),
            ));
        }
        check_time("offset", offset)?;
        check_time("total_time", total_time)?;
        if total_time < offset {
            return Err(Error::validation("total_time", "must be ≥ offset"));
        }
        if samples < 2 {
            return Err(Error::validation("samples", "need at least 2"));
        }
        verify_kick(model, &kick)?;
        Ok(KickSchedule {
            half_period,
            kick: Some(kick),
            offset,
            total_time,
            samples,
        })
    }

    pub fn half_period(&self) -> f64 {
        self.half_period
    }

    pub fn kick(&self) -> Option<&PauliString> {
        self.kick.as_ref()
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn is_kicked(&self) -> bool {
        self.kick.is_some()
    }

    /// Where `t` sits in the schedule.
    pub fn locate(&self, t: f64) -> Position {
        if self.kick.is_none() || t < self.offset {
            return Position {
                label: PhaseLabel::Free,
                cycle: None,
                local: t,
            };
        }
        let t_half = self.half_period;
        let tau = t - self.offset;
        let q = tau / (2.0 * t_half);
        let tol = SNAP * q.max(1.0);
        let r = q.round();
        let completed = if (q - r).abs() <= tol { r } else { q.floor() };
        let mut local = (tau - 2.0 * completed * t_half).max(0.0);
        if (q - r).abs() <= tol {
            local = 0.0;
        }
        if (local / t_half - 1.0).abs() <= 2.0 * tol {
            local = t_half;
        }
        let label = if local < t_half {
            PhaseLabel::CycleFirstHalf
        } else {
            PhaseLabel::CycleSecondHalf
        };
        Position {
            label,
            cycle: Some(completed as u64 + 1),
            local,
        }
    }

    /// Kick instants `offset + kT` (`k ≥ 1`) within the horizon.
    pub fn kick_times(&self) -> Vec<f64> {
        if self.kick.is_none() {
            return Vec::new();
        }
        let tol = SNAP * self.total_time.max(1.0);
        (1..)
            .map(|k| self.offset + k as f64 * self.half_period)
            .take_while(|&t| t <= self.total_time + tol)
            .map(|t| t.min(self.total_time))
            .collect()
    }

    /// A uniform grid of `samples` points over `[0, total_time]` merged with
    /// the offset and every kick instant. Points within rounding of a
    /// boundary are replaced by the boundary itself.
    pub fn sample_times(&self) -> Vec<f64> {
        self.sample_times_with(&[])
    }

    /// [`Self::sample_times`] plus caller-supplied instants inside the
    /// horizon (e.g. known extrema). Kick boundaries win over extra points,
    /// extra points win over the uniform grid when they coincide.
    pub fn sample_times_with(&self, extra: &[f64]) -> Vec<f64> {
        const UNIFORM: u8 = 0;
        const EXTRA: u8 = 1;
        const BOUNDARY: u8 = 2;
        let n = self.samples;
        let mut points: Vec<(f64, u8)> = (0..n)
            .map(|k| {
                let t = if k + 1 == n {
                    self.total_time
                } else {
                    self.total_time * k as f64 / (n - 1) as f64
                };
                (t, UNIFORM)
            })
            .collect();
        points.extend(
            extra
                .iter()
                .filter(|&&t| t.is_finite() && (0.0..=self.total_time).contains(&t))
                .map(|&t| (t, EXTRA)),
        );
        if self.kick.is_some() {
            points.push((self.offset, BOUNDARY));
            points.extend(self.kick_times().into_iter().map(|t| (t, BOUNDARY)));
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)));
        let tol = SNAP * self.total_time.max(1.0);
        let mut out: Vec<(f64, u8)> = Vec::with_capacity(points.len());
        for p in points {
            match out.last_mut() {
                Some(last) if (p.0 - last.0).abs() <= tol => {
                    if p.1 > last.1 {
                        *last = p;
                    }
                }
                _ => out.push(p),
            }
        }
        out.into_iter().map(|(t, _)| t).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseLabel {
    Free,
    CycleFirstHalf,
    CycleSecondHalf,
}

impl PhaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PhaseLabel::Free => "free",
            PhaseLabel::CycleFirstHalf => "cycle_first_half",
            PhaseLabel::CycleSecondHalf => "cycle_second_half",
        }
    }
}

/// Location of a time inside a schedule. `local` is the time since the start
/// of the active cycle (or `t` itself during free evolution).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Position {
    pub label: PhaseLabel,
    pub cycle: Option<u64>,
    pub local: f64,
}

/// Closed-form values attached to a sampled row.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedValues {
    pub cv: f64,
    pub c12: f64,
    pub c13: f64,
    pub c23: f64,
}

/// Supplies reference values for each sampled time.
pub trait MeasureHook: Sync {
    fn closed(&self, t: f64) -> Option<ClosedValues>;
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub cv: f64,
    pub c12: f64,
    pub c13: Option<f64>,
    pub c23: Option<f64>,
    pub cv_closed: Option<f64>,
    pub c12_closed: Option<f64>,
    pub c13_closed: Option<f64>,
    pub c23_closed: Option<f64>,
    pub phase: PhaseLabel,
    pub cycle: Option<u64>,
}

/// Propagates one initial state through one schedule.
///
/// The Hamiltonian is diagonalized once; every query is two `O(4^n)`
/// matrix-vector products against the eigenbasis.
#[derive(Clone, Debug)]
pub struct Evolver {
    spectrum: Spectrum,
    schedule: KickSchedule,
    initial: StateVector,
    at_offset: StateVector,
    after_kick: Option<StateVector>,
}

impl Evolver {
    pub fn new(model: &PauliSum, initial: StateVector, schedule: KickSchedule) -> Result<Self> {
        if initial.num_qubits() != model.num_qubits() {
            return Err(Error::Dimension {
                expected: model.num_qubits(),
                got: initial.num_qubits(),
            });
        }
        let spectrum = eigensolve(&model.to_matrix()?)?;
        let at_offset = spectrum.evolve(&initial, schedule.offset)?;
        let after_kick = match &schedule.kick {
            Some(kick) => {
                verify_kick(model, kick)?;
                let half = spectrum.evolve(&at_offset, schedule.half_period)?;
                Some(kick.to_matrix()?.apply(&half)?)
            }
            None => None,
        };
        Ok(Evolver {
            spectrum,
            schedule,
            initial,
            at_offset,
            after_kick,
        })
    }

    pub fn schedule(&self) -> &KickSchedule {
        &self.schedule
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn state_at(&self, t: f64) -> Result<StateVector> {
        let total = self.schedule.total_time;
        let tol = SNAP * total.max(1.0);
        if !(t.is_finite() && t >= -tol && t <= total + tol) {
            return Err(Error::invalid(format!(
                "time {t} outside schedule range [0, {total}]"
            )));
        }
        let t = t.clamp(0.0, total);
        let pos = self.schedule.locate(t);
        match (pos.label, &self.after_kick) {
            (PhaseLabel::CycleFirstHalf, _) => self.spectrum.evolve(&self.at_offset, pos.local),
            (PhaseLabel::CycleSecondHalf, Some(mid)) => self
                .spectrum
                .evolve(mid, pos.local - self.schedule.half_period),
            _ => self.spectrum.evolve(&self.initial, t),
        }
    }

    fn measure(&self, t: f64, hook: Option<&dyn MeasureHook>) -> Result<TrajectoryRow> {
        let psi = self.state_at(t)?;
        measure_row(
            t,
            &psi,
            self.schedule.locate(t),
            hook.and_then(|h| h.closed(t)),
        )
    }

    /// Measures every point of [`KickSchedule::sample_times`], in time order.
    pub fn sample_trajectory(&self, hook: Option<&dyn MeasureHook>) -> Result<Vec<TrajectoryRow>> {
        self.sample_at(&self.schedule.sample_times(), hook)
    }

    /// Measures the given times; rows come back in the same order.
    pub fn sample_at(
        &self,
        times: &[f64],
        hook: Option<&dyn MeasureHook>,
    ) -> Result<Vec<TrajectoryRow>> {
        times.par_iter().map(|&t| self.measure(t, hook)).collect()
    }
}

/// Concurrence columns of `psi`, labelled with its schedule position.
pub fn measure_row(
    t: f64,
    psi: &StateVector,
    pos: Position,
    closed: Option<ClosedValues>,
) -> Result<TrajectoryRow> {
    let pairs = pairwise_all(psi)?;
    let find = |i: usize, j: usize| pairs.iter().find(|(p, _)| *p == (i, j)).map(|(_, c)| *c);
    Ok(TrajectoryRow {
        t,
        cv: pairs.iter().map(|(_, c)| c * c).sum::<f64>().sqrt(),
        c12: find(1, 2).unwrap_or(0.0),
        c13: find(1, 3),
        c23: find(2, 3),
        cv_closed: closed.map(|c| c.cv),
        c12_closed: closed.map(|c| c.c12),
        c13_closed: closed.map(|c| c.c13),
        c23_closed: closed.map(|c| c.c23),
        phase: pos.label,
        cycle: pos.cycle,
    })
}

/// One-shot form of [`Evolver::state_at`].
pub fn state_at(
    model: &PauliSum,
    initial: &StateVector,
    schedule: &KickSchedule,
    t: f64,
) -> Result<StateVector> {
    Evolver::new(model, initial.clone(), schedule.clone())?.state_at(t)
}

/// One-shot form of [`Evolver::sample_trajectory`].
pub fn sample_trajectory(
    model: &PauliSum,
    initial: &StateVector,
    schedule: &KickSchedule,
    hook: Option<&dyn MeasureHook>,
) -> Result<Vec<TrajectoryRow>> {
    Evolver::new(model, initial.clone(), schedule.clone())?.sample_trajectory(hook)
}
