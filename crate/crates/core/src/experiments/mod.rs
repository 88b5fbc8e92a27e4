//! Scenario runner, named presets, sweeps, and CSV/JSON emission.

mod output;
mod presets;
mod scenario;

pub use output::{format_float, write_csv, write_report_json, write_sweep_csv, CSV_HEADER};
pub use presets::{list_presets, preset, Preset, PRESET_NAMES};
pub use scenario::{InitialState, KickChoice, ModelSpec, OutputKind, Scenario, ScheduleSpec};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    cyclic_operator, ClosedValues, Evolver, KickSchedule, MeasureHook, PhaseLabel, TrajectoryRow,
};
use crate::entanglement::closed::kicked_equivalent_time;
use crate::entanglement::{ClosedFormParams, Mode, Pair};
use crate::error::{Error, Result};

/// Closed-form reference for a GHZ state under the three-site chain.
///
/// Without an offset the controlled branch formulas are used directly; with
/// an offset the free formulas are evaluated at the equivalent free time.
#[derive(Copy, Clone, Debug)]
pub struct IsingGhzOracle {
    pub params: ClosedFormParams,
    pub half_period: Option<f64>,
    pub offset: f64,
}

impl IsingGhzOracle {
    fn values_free(&self, t: f64) -> ClosedValues {
        let p = &self.params;
        let g = p.g_functions().g(t);
        ClosedValues {
            cv: p.cv_of_g(g),
            c12: p.pairwise_of_g(Pair::P12, g),
            c13: p.pairwise_of_g(Pair::P13, g),
            c23: p.pairwise_of_g(Pair::P23, g),
        }
    }
}

impl MeasureHook for IsingGhzOracle {
    fn closed(&self, t: f64) -> Option<ClosedValues> {
        match self.half_period {
            None => Some(self.values_free(t)),
            Some(th) if self.offset == 0.0 => {
                let p = &self.params;
                let mode = Mode::Controlled { half_period: th };
                Some(ClosedValues {
                    cv: p.cv_controlled(th, t).ok()?,
                    c12: p.pairwise(Pair::P12, t, mode).ok()?,
                    c13: p.pairwise(Pair::P13, t, mode).ok()?,
                    c23: p.pairwise(Pair::P23, t, mode).ok()?,
                })
            }
            Some(th) => Some(self.values_free(kicked_equivalent_time(self.offset, th, t))),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColumnStats {
    pub min: f64,
    pub t_min: f64,
    pub max: f64,
    pub t_max: f64,
}

impl ColumnStats {
    fn from_iter(values: impl Iterator<Item = (f64, f64)>) -> Option<Self> {
        let mut stats: Option<ColumnStats> = None;
        for (t, v) in values {
            let s = stats.get_or_insert(ColumnStats {
                min: v,
                t_min: t,
                max: v,
                t_max: t,
            });
            if v < s.min {
                s.min = v;
                s.t_min = t;
            }
            if v > s.max {
                s.max = v;
                s.t_max = t;
            }
        }
        stats
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub cv: Option<ColumnStats>,
    pub c12: Option<ColumnStats>,
    pub c13: Option<ColumnStats>,
    pub c23: Option<ColumnStats>,
    /// Largest `|numeric − closed|` over every populated closed column.
    pub max_residual: Option<f64>,
}

impl Summary {
    pub fn of(rows: &[TrajectoryRow], with_residual: bool) -> Self {
        let col = |f: &dyn Fn(&TrajectoryRow) -> Option<f64>| {
            ColumnStats::from_iter(rows.iter().filter_map(|r| f(r).map(|v| (r.t, v))))
        };
        let max_residual = if with_residual {
            rows.iter()
                .flat_map(|r| {
                    [
                        r.cv_closed.map(|c| (r.cv - c).abs()),
                        r.c12_closed.map(|c| (r.c12 - c).abs()),
                        r.c13.zip(r.c13_closed).map(|(a, c)| (a - c).abs()),
                        r.c23.zip(r.c23_closed).map(|(a, c)| (a - c).abs()),
                    ]
                })
                .flatten()
                .reduce(f64::max)
        } else {
            None
        };
        Summary {
            cv: col(&|r| Some(r.cv)),
            c12: col(&|r| Some(r.c12)),
            c13: col(&|r| r.c13),
            c23: col(&|r| r.c23),
            max_residual,
        }
    }
}

/// Free-evolution trajectory over the same grid, for comparison with a kicked run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeReference {
    pub summary: Summary,
    pub rows: Vec<TrajectoryRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub scenario: Scenario,
    pub kick: Option<String>,
    pub summary: Summary,
    pub rows: Vec<TrajectoryRow>,
    /// Present for kicked scenarios.
    pub free_reference: Option<FreeReference>,
}

impl RunReport {
    /// Minimum of the `cv` column over rows inside kick cycles.
    pub fn controlled_min_cv(&self) -> Option<f64> {
        self.rows
            .iter()
            .filter(|r| r.phase != PhaseLabel::Free)
            .map(|r| r.cv)
            .reduce(f64::min)
    }
}

fn blank_unrequested(rows: &mut [TrajectoryRow], scenario: &Scenario) {
    let closed = scenario.wants(OutputKind::ClosedForms);
    let pairwise = scenario.wants(OutputKind::Pairwise);
    let cv = scenario.wants(OutputKind::Cv);
    for r in rows {
        if !closed {
            r.cv_closed = None;
            r.c12_closed = None;
            r.c13_closed = None;
            r.c23_closed = None;
        }
        if !pairwise {
            r.c12 = f64::NAN;
            r.c13 = None;
            r.c23 = None;
        }
        if !cv {
            r.cv = f64::NAN;
        }
    }
}

/// Validates and runs a scenario. Output is deterministic for a fixed scenario.
pub fn run_scenario(scenario: &Scenario) -> Result<RunReport> {
    if !(scenario.total_time.is_finite() && scenario.total_time > 0.0) {
        return Err(Error::validation("total_time", "must be finite and > 0"));
    }
    if scenario.samples < 2 {
        return Err(Error::validation("samples", "need at least 2"));
    }
    let model = scenario.model.build()?;
    let n = model.num_qubits();
    let initial = scenario.initial_state.build(n)?;
    let kick = scenario.resolve_kick(&model)?;

    let closed_params = match scenario.initial_state {
        InitialState::Ghz {} => scenario.model.closed_form_params(),
        _ => None,
    };
    let need_closed =
        scenario.wants(OutputKind::ClosedForms) || scenario.wants(OutputKind::Residuals);

    let schedule = match &kick {
        None => KickSchedule::free(scenario.total_time, scenario.samples)?,
        Some(k) => {
            let half_period = scenario.schedule.half_period.ok_or_else(|| {
                Error::validation("schedule.half_period", "required when kicking")
            })?;
            let schedule = KickSchedule::kicked(
                &model,
                k.clone(),
                half_period,
                scenario.schedule.offset,
                scenario.total_time,
                scenario.samples,
            )?;
            cyclic_operator(&model, k, half_period)?;
            schedule
        }
    };

    let oracle = closed_params
        .filter(|_| need_closed)
        .map(|params| IsingGhzOracle {
            params,
            half_period: kick.as_ref().map(|_| schedule.half_period()),
            offset: schedule.offset(),
        });
    // Free-evolution extrema sit at multiples of π/(2ω); sample them exactly.
    let extrema: Vec<f64> = closed_params
        .map(|p| {
            let step = p.period() / 2.0;
            (0..)
                .map(|k| k as f64 * step)
                .take_while(|&t| t <= scenario.total_time)
                .collect()
        })
        .unwrap_or_default();
    let times = schedule.sample_times_with(&extrema);

    let evolver = Evolver::new(&model, initial.clone(), schedule.clone())?;
    let mut rows = evolver.sample_at(&times, oracle.as_ref().map(|o| o as &dyn MeasureHook))?;
    let with_residual = scenario.wants(OutputKind::Residuals) && oracle.is_some();
    let summary = Summary::of(&rows, with_residual);
    blank_unrequested(&mut rows, scenario);

    let free_reference = match &kick {
        None => None,
        Some(_) => {
            let free = KickSchedule::free(scenario.total_time, scenario.samples)?;
            let free_oracle = oracle.map(|o| IsingGhzOracle {
                half_period: None,
                ..o
            });
            let free_evolver = Evolver::new(&model, initial, free)?;
            // Same grid as the kicked run so the two columns line up.
            let mut free_rows = free_evolver
                .sample_at(&times, free_oracle.as_ref().map(|o| o as &dyn MeasureHook))?;
            let summary = Summary::of(&free_rows, with_residual);
            blank_unrequested(&mut free_rows, scenario);
            Some(FreeReference {
                summary,
                rows: free_rows,
            })
        }
    };

    Ok(RunReport {
        scenario: scenario.clone(),
        kick: kick.map(|k| k.to_string()),
        summary,
        rows,
        free_reference,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub half_period: f64,
    pub achieved_min: f64,
    /// Closed-form cycle minimum, when the scenario admits one.
    pub predicted_min: Option<f64>,
}

/// Preserved CV minimum for each half-period.
///
/// Every cycle of a kicked run is identical, so each point is computed over a
/// single cycle (`total_time = offset + 2T`) with the base sample count.
pub fn sweep_min_cv(base: &Scenario, half_periods: &[f64]) -> Result<Vec<SweepRow>> {
    if half_periods.is_empty() {
        return Err(Error::validation("half_periods", "need at least one value"));
    }
    if matches!(base.schedule.choice()?, KickChoice::None) {
        return Err(Error::validation(
            "schedule.kick",
            "a sweep needs a kick operator",
        ));
    }
    let predicted_ok =
        base.schedule.offset == 0.0 && matches!(base.initial_state, InitialState::Ghz {});
    let params = base.model.closed_form_params().filter(|_| predicted_ok);
    half_periods
        .par_iter()
        .map(|&th| {
            let mut s = base.clone();
            s.schedule.half_period = Some(th);
            s.total_time = s.schedule.offset + 2.0 * th;
            s.outputs = vec![OutputKind::Cv, OutputKind::Pairwise];
            let report = run_scenario(&s)?;
            let achieved_min = report
                .controlled_min_cv()
                .ok_or_else(|| Error::Numerical("sweep run produced no kicked rows".into()))?;
            let predicted_min = params.map(|p| p.cv_controlled_min(th)).transpose()?;
            Ok(SweepRow {
                half_period: th,
                achieved_min,
                predicted_min,
            })
        })
        .collect()
}
