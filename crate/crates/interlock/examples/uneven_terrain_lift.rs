//! The uneven-terrain lift-off story: locally lower ground under one rear
//! spike steepens its thrust angle to 25 degrees; at 2.5 kN the hinge
//! lift blocks the machine, at 2.0 kN it does not, and the depth
//! equalizer recovers the heavy case.
//!
//! ```bash
//! cargo run -p interlock --example uneven_terrain_lift
//! ```

use interlock::suite::{bundled_scenario, uneven_offset_for_gamma25};
use interlock::{phase_force_balance, run_scenario, GaitTuning, Phase};

fn show_push_balance(label: &str) {
    let scenario = bundled_scenario(label).unwrap();
    let b = phase_force_balance(Phase::PushBlade, &scenario, &GaitTuning::default()).unwrap();
    println!("--- {label} ---");
    println!(
        "demand {:.1} N (blade {:.0} N + slope term), applied {:.1} N",
        b.demand, scenario.blade_draft_demand, b.applied_draft
    );
    for s in &b.spikes {
        println!(
            "  {:<11} offset {:+.3} m  depth {:.3} m  gamma {:5.2} deg  gamma_eff {:5.2} deg  lift {:6.1} N",
            s.spike_id.to_string(), s.surface_offset, s.depth, s.gamma, s.gamma_eff, s.lift
        );
    }
    println!(
        "  total lift {:.1} N vs frame load {:.1} N -> {}",
        b.total_lift,
        b.frame_load,
        if b.lifted { "LIFT-OFF" } else { "holds" }
    );
}

fn main() {
    println!(
        "unevenness offset solving gamma_eff = 25 deg at the heavy operating point: {:.4} m\n",
        uneven_offset_for_gamma25()
    );

    show_push_balance("quarry_fine_20_uphill_2500");
    println!();
    show_push_balance("quarry_fine_20_uphill_2000");

    println!("\n=== full runs ===");
    for label in ["quarry_fine_20_uphill_2500", "quarry_fine_20_uphill_2000"] {
        let scenario = bundled_scenario(label).unwrap();
        let report = run_scenario(&scenario, 100).unwrap();
        println!("{label}: {} ({:.1} m covered)", report.outcome, report.distance_covered);
    }

    let mut evened = bundled_scenario("quarry_fine_20_uphill_2500").unwrap();
    evened.vehicle.depth_equalizer = true;
    let report = run_scenario(&evened, 100).unwrap();
    println!(
        "quarry_fine_20_uphill_2500 + depth equalizer: {} ({:.1} m covered)",
        report.outcome, report.distance_covered
    );
    println!("\nThe equalizer stops the offset spike from swinging much deeper than");
    println!("its partner, keeping the effective thrust angle flat enough to hold.");
}
