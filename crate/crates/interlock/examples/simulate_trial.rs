//! Run one bundled trial and print the summary, the event timeline and
//! the first per-cycle log rows.
//!
//! ```bash
//! cargo run -p interlock --example simulate_trial [scenario_label]
//! ```

use interlock::report::RunArtifacts;
use interlock::suite::bundled_scenario;
use interlock::{run_scenario, GaitTuning};

fn main() {
    let label = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "quarry_coarse_30_contour".to_string());
    let scenario = bundled_scenario(&label).unwrap_or_else(|| {
        eprintln!("unknown bundled scenario '{label}'");
        std::process::exit(2);
    });

    let trial = run_scenario(&scenario, 100).expect("bundled scenario is valid");
    let artifacts = RunArtifacts::new(&scenario, &GaitTuning::default(), trial);
    print!("{}", artifacts.summary_text());

    println!("\n=== events ===");
    for e in &artifacts.report.trial.events {
        println!("cycle {:>2} {:<10} {:<16} {}", e.cycle_index, e.phase.to_string(), e.kind.to_string(), e.message);
    }

    println!("\n=== log (first rows) ===");
    for line in artifacts.log_csv().lines().take(9) {
        println!("{line}");
    }
}
