//! Shorter kick intervals preserve more of the initial entanglement.

use paritykick::experiments::{preset, sweep_min_cv, SweepRow};

pub fn run_example() -> paritykick::Result<Vec<SweepRow>> {
    let base = preset("fig1")?;
    let ts = [0.2, 0.1, 1.0 / 15.0, 0.04, 0.02, 0.01, 0.001];
    sweep_min_cv(&base, &ts)
}

fn main() -> paritykick::Result<()> {
    println!("      T   achieved  predicted");
    for r in run_example()? {
        println!(
            "{:7.4} {:10.7} {:10.7}",
            r.half_period,
            r.achieved_min,
            r.predicted_min.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
