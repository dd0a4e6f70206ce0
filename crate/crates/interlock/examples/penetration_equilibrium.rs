//! The self-regulating penetration depth: a backward force drives the
//! spike in until the lateral soil resistance balances it. Prints the
//! draft-depth curve for both spike classes and the low-gravity shift.
//!
//! ```bash
//! cargo run -p interlock --example penetration_equilibrium
//! ```

use interlock::{penetration_depth, Environment, SoilModel, SpikeDesign};

fn main() {
    let soil = SoilModel::beach_sand();
    let env = Environment::default();
    let lunar = Environment::lunar();
    let large = SpikeDesign::large();
    let small = SpikeDesign::small();

    println!("calibrated beach sand, per-spike draft share");
    println!(
        "{:>9}  {:>14} {:>5}  {:>14} {:>5}  {:>16}",
        "draft [N]", "large depth [m]", "sat", "small depth [m]", "sat", "large @ g/6 [m]"
    );
    for draft in [0.0, 50.0, 100.0, 200.0, 400.0, 750.0, 1000.0, 1500.0, 2000.0, 2500.0] {
        let l = penetration_depth(&soil, &large, draft, &env).unwrap();
        let s = penetration_depth(&soil, &small, draft, &env).unwrap();
        let m = penetration_depth(&soil, &large, draft, &lunar).unwrap();
        println!(
            "{:>9.0}  {:>14.4} {:>5}  {:>14.4} {:>5}  {:>16.4}",
            draft,
            l.depth_d,
            if l.saturated { "yes" } else { "-" },
            s.depth_d,
            if s.saturated { "yes" } else { "-" },
            m.depth_d,
        );
    }

    println!("\nsaturation marks an overloaded anchor: the spike has bottomed out");
    println!("at its design depth and the remaining draft has nothing to react it.");
    println!("Unsaturated depths scale with 1/sqrt(g): the g/6 column sits");
    println!("sqrt(6) = {:.3} deeper until it hits the depth limit.", 6.0f64.sqrt());
}
