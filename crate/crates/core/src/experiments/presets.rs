use std::f64::consts::PI;

use serde::Serialize;

use super::scenario::{InitialState, ModelSpec, OutputKind, Scenario, ScheduleSpec};
use crate::error::{Error, Result};

pub const PRESET_NAMES: [&str; 5] = ["fig1", "fig2", "fig3a", "fig3b", "fig4"];

const SAMPLES: usize = 2000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub scenario: Scenario,
}

fn three_site(
    j1: f64,
    j2: f64,
    h2: f64,
    half_period: f64,
    offset: f64,
    total_time: f64,
) -> Scenario {
    Scenario {
        model: ModelSpec::IsingChain {
            n: 3,
            j: vec![j1, j2],
            h: vec![0.0, h2, 0.0],
        },
        initial_state: InitialState::Ghz {},
        schedule: ScheduleSpec {
            kick: "YZY".into(),
            half_period: Some(half_period),
            offset,
        },
        total_time,
        samples: SAMPLES,
        outputs: OutputKind::all(),
    }
}

fn omega(j1: f64, j2: f64, h2: f64) -> f64 {
    (j1 + j2).hypot(h2)
}

/// Three free periods of the pairwise oscillation.
fn pairwise_horizon(j1: f64, j2: f64, h2: f64) -> f64 {
    3.0 * 2.0 * PI / omega(j1, j2, h2)
}

pub fn list_presets() -> Vec<Preset> {
    vec![
        Preset {
            name: "fig1",
            description: "GHZ, J1=2 J2=4 h2=6, kick YZY, T=1/10, t in [0,3]",
            scenario: three_site(2.0, 4.0, 6.0, 1.0 / 10.0, 0.0, 3.0),
        },
        Preset {
            name: "fig2",
            description: "GHZ, J1=2 J2=4 h2=6, kick YZY, T=1/15, t in [0,3]",
            scenario: three_site(2.0, 4.0, 6.0, 1.0 / 15.0, 0.0, 3.0),
        },
        Preset {
            name: "fig3a",
            description: "GHZ, J1=2 J2=1 h2=5 (h2 != b), kick YZY, T=1/8, three periods 2π/ω",
            scenario: three_site(
                2.0,
                1.0,
                5.0,
                1.0 / 8.0,
                0.0,
                pairwise_horizon(2.0, 1.0, 5.0),
            ),
        },
        Preset {
            name: "fig3b",
            description: "GHZ, J1=2 J2=1 h2=3 (h2 = b), kick YZY, T=1/8, three periods 2π/ω",
            scenario: three_site(
                2.0,
                1.0,
                3.0,
                1.0 / 8.0,
                0.0,
                pairwise_horizon(2.0, 1.0, 3.0),
            ),
        },
        Preset {
            name: "fig4",
            description: "GHZ, J1=2 J2=1 h2=3, free until π/(2ω), then kick YZY with T=1/30",
            scenario: three_site(
                2.0,
                1.0,
                3.0,
                1.0 / 30.0,
                PI / (2.0 * omega(2.0, 1.0, 3.0)),
                pairwise_horizon(2.0, 1.0, 3.0),
            ),
        },
    ]
}

pub fn preset(name: &str) -> Result<Scenario> {
    list_presets()
        .into_iter()
        .find(|p| p.name == name)
        .map(|p| p.scenario)
        .ok_or_else(|| Error::UnknownPreset {
            name: name.to_string(),
            valid: PRESET_NAMES.join(", "),
        })
}
