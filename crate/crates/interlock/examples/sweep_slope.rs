//! Sweep terrain slope in contour mode from flat to 45 degrees and watch
//! the outcome degrade: cleared, then blade-frame lift, then veer-off.
//!
//! ```bash
//! cargo run -p interlock --example sweep_slope
//! ```

use interlock::sweep::{run_sweep, to_csv, SweepParam};
use interlock::{GaitTuning, Scenario};

fn main() {
    let base = Scenario::flat_beach();
    let rows = run_sweep(
        &base,
        SweepParam::SlopeDeg,
        0.0,
        45.0,
        45,
        100,
        &GaitTuning::default(),
    )
    .expect("base scenario is valid");

    print!("{}", to_csv(SweepParam::SlopeDeg, &rows));

    let first_blocked = rows.iter().find(|r| r.outcome != "path_cleared");
    if let Some(row) = first_blocked {
        println!("\nfirst non-cleared outcome at {:.0} deg: {}", row.value, row.outcome);
    }
}
