//! Static stability figures for the default crawler, no simulation.
//!
//! ```bash
//! cargo run -p interlock --example analyze_stability
//! ```

use interlock::{
    max_thrust_angle_for_pull_weight, pull_weight_ratio, rollover_tip_angle, stability_report,
    weight, Environment, Scenario,
};

fn main() {
    let scenario = Scenario::flat_beach();
    let vehicle = &scenario.vehicle;
    let env = Environment::default();

    println!("=== Vehicle ===");
    println!("mass: {} kg, weight: {:.1} N", vehicle.mass, weight(vehicle, &env));
    println!(
        "track width: {} m, CoM height: {} m, stroke: {} m",
        vehicle.track_width, vehicle.com_height, vehicle.stroke
    );

    println!("\n=== Pull/weight limits ===");
    for demand in [784.8, 1500.0, 2000.0, 2500.0] {
        let ratio = pull_weight_ratio(demand, vehicle, &env);
        let gamma = max_thrust_angle_for_pull_weight(ratio).unwrap();
        println!(
            "draft {demand:7.1} N -> pull/weight {ratio:5.2}, thrust angle must stay below {gamma:5.2} deg"
        );
    }

    println!("\n=== Rollover ===");
    println!(
        "quasi-static tip angle: {:.1} deg (far above every trial slope)",
        rollover_tip_angle(vehicle).unwrap()
    );

    println!("\n=== Full report (flat beach, 1.5 kN) ===");
    let report = stability_report(&scenario).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
