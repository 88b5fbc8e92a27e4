//! Closed-form concurrence trajectories for a GHZ state evolving under the
//! three-site chain `J1·ZZI + J2·IZZ + h2·IXI`.
//!
//! Everything is written in terms of `b = J1 + J2`, `ω = sqrt(b² + h2²)` and
//! `g(t) = cos(4ωt) − 4cos(2ωt)`, which ranges over `[−3, 5]` with period
//! `π/ω`. The two radicands
//!
//! ```text
//! R12(g) = 2b⁴ + (1 − g)h2²b² + 2h2⁴
//! R13(g) = 2b⁴ + (g + 7)h2²b² + 2h2⁴
//! ```
//!
//! give `C12 = C23 = sqrt(R12)/(2ω²)`, `C13 = sqrt(R13)/(2ω²)` and
//! `CV = sqrt(2|R12| + |R13|)/(2ω²)`.
//!
//! Under kicks with period `2T` the first half of cycle `n` uses
//! `g1 = g(t − 2(n−1)T)` and the second half `g2 = g(t − 2nT)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormParams {
    j1: f64,
    j2: f64,
    h2: f64,
}

/// Which pairwise component.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pair {
    P12,
    P13,
    P23,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::P12, Pair::P13, Pair::P23];

    pub fn sites(self) -> (usize, usize) {
        match self {
            Pair::P12 => (1, 2),
            Pair::P13 => (1, 3),
            Pair::P23 => (2, 3),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Mode {
    Free,
    /// Kick cycles of half-period `half_period` starting at `t = 0`.
    Controlled {
        half_period: f64,
    },
}

/// Time-dependent `g` family, evaluated on demand.
#[derive(Copy, Clone, Debug)]
pub struct GFunctions {
    omega: f64,
}

impl GFunctions {
    pub fn g(&self, t: f64) -> f64 {
        (4.0 * self.omega * t).cos() - 4.0 * (2.0 * self.omega * t).cos()
    }

    /// First-half argument within cycle `n` (1-based).
    pub fn g1(&self, t: f64, half_period: f64, n: u64) -> f64 {
        self.g(t - 2.0 * (n as f64 - 1.0) * half_period)
    }

    /// Second-half argument within cycle `n` (1-based).
    pub fn g2(&self, t: f64, half_period: f64, n: u64) -> f64 {
        self.g(t - 2.0 * n as f64 * half_period)
    }

    /// Value of `g` at the deepest point of a cycle, `t = T`.
    pub fn x(&self, half_period: f64) -> f64 {
        self.g(half_period)
    }
}

impl ClosedFormParams {
    pub fn new(j1: f64, j2: f64, h2: f64) -> Result<Self> {
        if !(j1.is_finite() && j2.is_finite() && h2.is_finite()) {
            return Err(Error::invalid("closed-form parameters must be finite"));
        }
        let p = ClosedFormParams { j1, j2, h2 };
        if p.omega() == 0.0 {
            return Err(Error::invalid(
                "closed form undefined when J1 + J2 = 0 and h2 = 0 (ω = 0)",
            ));
        }
        Ok(p)
    }

    pub fn j1(&self) -> f64 {
        self.j1
    }

    pub fn j2(&self) -> f64 {
        self.j2
    }

    pub fn h2(&self) -> f64 {
        self.h2
    }

    pub fn b(&self) -> f64 {
        self.j1 + self.j2
    }

    pub fn omega(&self) -> f64 {
        self.b().hypot(self.h2)
    }

    pub fn g_functions(&self) -> GFunctions {
        GFunctions {
            omega: self.omega(),
        }
    }

    /// Period of every free-evolution closed form, `π/ω`.
    pub fn period(&self) -> f64 {
        std::f64::consts::PI / self.omega()
    }

    fn radicands(&self, g: f64) -> (f64, f64) {
        let b2 = self.b() * self.b();
        let h2 = self.h2 * self.h2;
        let r12 = 2.0 * b2 * b2 + (1.0 - g) * h2 * b2 + 2.0 * h2 * h2;
        let r13 = 2.0 * b2 * b2 + (g + 7.0) * h2 * b2 + 2.0 * h2 * h2;
        (r12, r13)
    }

    fn denom(&self) -> f64 {
        2.0 * self.omega() * self.omega()
    }

    /// `CV` as a function of `g`.
    pub fn cv_of_g(&self, g: f64) -> f64 {
        let (r12, r13) = self.radicands(g);
        (2.0 * r12.abs() + r13.abs()).sqrt() / self.denom()
    }

    /// Pairwise component as a function of `g`. Pairs 12 and 23 coincide.
    pub fn pairwise_of_g(&self, pair: Pair, g: f64) -> f64 {
        let (r12, r13) = self.radicands(g);
        let r = match pair {
            Pair::P12 | Pair::P23 => r12,
            Pair::P13 => r13,
        };
        // Both radicands are ≥ 0 on g ∈ [−3, 5]; R12(5) = 2(b² − h2²)².
        r.max(0.0).sqrt() / self.denom()
    }

    pub fn cv_free(&self, t: f64) -> f64 {
        self.cv_of_g(self.g_functions().g(t))
    }

    /// Controlled trajectory, branch chosen by the active cycle.
    pub fn cv_controlled(&self, half_period: f64, t: f64) -> Result<f64> {
        Ok(self.cv_of_g(self.controlled_g(half_period, t)?))
    }

    /// `g1` on the first half of the active cycle, `g2` on the second.
    pub fn controlled_g(&self, half_period: f64, t: f64) -> Result<f64> {
        if !(half_period > 0.0 && half_period.is_finite()) {
            return Err(Error::invalid(format!(
                "half period must be positive, got {half_period}"
            )));
        }
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::invalid(format!("time must be ≥ 0, got {t}")));
        }
        let gf = self.g_functions();
        let n = active_cycle(t, half_period);
        if t <= (2.0 * n as f64 - 1.0) * half_period {
            Ok(gf.g1(t, half_period, n))
        } else {
            Ok(gf.g2(t, half_period, n))
        }
    }

    pub fn pairwise(&self, pair: Pair, t: f64, mode: Mode) -> Result<f64> {
        let g = match mode {
            Mode::Free => self.g_functions().g(t),
            Mode::Controlled { half_period } => self.controlled_g(half_period, t)?,
        };
        Ok(self.pairwise_of_g(pair, g))
    }

    /// Deepest point of every kicked cycle.
    ///
    /// CV falls as `g` rises, and `g` climbs monotonically to its peak of 5 at
    /// `t = π/(2ω)`. For `T` below that the minimum is at the kick instant,
    /// `g = x(T)`; for longer half-periods the free minimum is reached inside
    /// the cycle.
    pub fn cv_controlled_min(&self, half_period: f64) -> Result<f64> {
        if !(half_period > 0.0 && half_period.is_finite()) {
            return Err(Error::invalid(format!(
                "half period must be positive, got {half_period}"
            )));
        }
        let g = if half_period < self.period() / 2.0 {
            self.g_functions().x(half_period)
        } else {
            5.0
        };
        Ok(self.cv_of_g(g))
    }

    /// `sqrt(3/2)`, attained at `t = kπ/ω` (`g = −3`).
    pub fn cv_free_max(&self) -> f64 {
        1.5f64.sqrt()
    }

    /// `sqrt(6b⁴ + 6h2⁴ + 4h2²b²)/(2ω²)`, attained at `t = (2k+1)π/(2ω)` (`g = 5`).
    pub fn cv_free_min(&self) -> f64 {
        let b2 = self.b() * self.b();
        let h2 = self.h2 * self.h2;
        (6.0 * b2 * b2 + 6.0 * h2 * h2 + 4.0 * h2 * b2).sqrt() / self.denom()
    }

    /// Lower bound of `C12 = C23` under free evolution, `|h2² − b²|/(√2 ω²)`.
    pub fn c12_free_min(&self) -> f64 {
        (self.h2 * self.h2 - self.b() * self.b()).abs()
            / (std::f64::consts::SQRT_2 * self.omega() * self.omega())
    }

    /// Upper bound of `C13` under free evolution, `sqrt(2b⁴ + 12h2²b² + 2h2⁴)/(2ω²)`.
    ///
    /// This is `R13` at `g = 5`. The last term is `2h2⁴`, not `2h2²`; only the
    /// quartic form matches the numerically observed maximum.
    pub fn c13_free_max(&self) -> f64 {
        self.pairwise_of_g(Pair::P13, 5.0)
    }
}

/// 1-based cycle containing `t`, snapping times within rounding of a cycle
/// boundary onto the later cycle.
fn active_cycle(t: f64, half_period: f64) -> u64 {
    let q = t / (2.0 * half_period);
    let r = q.round();
    let k = if (q - r).abs() <= 1e-12 * r.max(1.0) {
        r
    } else {
        q.floor()
    };
    k as u64 + 1
}

/// Free-evolution time whose concurrences equal those of a kicked schedule
/// at time `t`, for a schedule with `offset` of free evolution before the
/// first cycle.
///
/// Inside a cycle the kicked state is `U(τ')ψ(t0)` on the first half and
/// `A·U(2T − τ')ψ(t0)` on the second, and a Pauli-string kick is local, so the
/// concurrences are the free ones at `t0 + τ'` or `t0 + 2T − τ'`.
pub fn kicked_equivalent_time(offset: f64, half_period: f64, t: f64) -> f64 {
    if t <= offset {
        return t;
    }
    let tau = t - offset;
    let n = active_cycle(tau, half_period);
    let local = (tau - 2.0 * (n as f64 - 1.0) * half_period).max(0.0);
    if local <= half_period {
        offset + local
    } else {
        offset + 2.0 * half_period - local
    }
}
