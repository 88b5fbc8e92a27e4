//! Lets the GHZ state evolve freely until C13 peaks at 1, then starts kicking
//! so the pairwise values stay near (0, 1, 0).

use paritykick::experiments::{preset, run_scenario};

/// `(min, max)` of c12, c13, c23 after the kicks start.
pub fn run_example() -> paritykick::Result<[(f64, f64); 3]> {
    let scenario = preset("fig4")?;
    let t0 = scenario.schedule.offset;
    let report = run_scenario(&scenario)?;
    let mut ranges = [(f64::INFINITY, f64::NEG_INFINITY); 3];
    for r in report.rows.iter().filter(|r| r.t >= t0) {
        let vals = [r.c12, r.c13.unwrap_or(f64::NAN), r.c23.unwrap_or(f64::NAN)];
        for (range, v) in ranges.iter_mut().zip(vals) {
            range.0 = range.0.min(v);
            range.1 = range.1.max(v);
        }
    }
    Ok(ranges)
}

fn main() -> paritykick::Result<()> {
    for (name, (lo, hi)) in ["c12", "c13", "c23"].iter().zip(run_example()?) {
        println!("{name} in [{lo:.6}, {hi:.6}]");
    }
    Ok(())
}
