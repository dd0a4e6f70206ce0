//! Solve the soil resistance multiplier against a measured holding force
//! and show how the calibration scales with gravity.
//!
//! ```bash
//! cargo run -p interlock --example calibrate_soil
//! ```

use interlock::{
    calibrate_multiplier, lateral_resistance, Environment, SoilModel, SpikeDesign,
};

fn main() {
    let env = Environment::default();
    let large = SpikeDesign::large();
    let mut soil = SoilModel::new("beach_sand", 35.0, 1600.0);

    println!("uncalibrated multiplier: {}", soil.resistance_multiplier_mp);
    let before = lateral_resistance(&soil, &large, 0.5, &env).unwrap();
    println!("holding at 0.5 m with the literature factor: {before:.0} N");
    println!("bench measurement to reproduce: 2000 N at 0.5 m\n");

    let mp = calibrate_multiplier(2000.0, 0.5, &soil, &large, &env).unwrap();
    soil.resistance_multiplier_mp = mp;
    println!("calibrated multiplier: {mp:.3}");
    let after = lateral_resistance(&soil, &large, 0.5, &env).unwrap();
    println!("holding at 0.5 m after calibration: {after:.1} N");

    // the multiplier absorbs gravity: one sixth the gravity needs six
    // times the factor for the same absolute holding force
    let lunar = Environment::lunar();
    let mp_lunar = calibrate_multiplier(2000.0, 0.5, &soil, &large, &lunar).unwrap();
    println!("\nsame 2 kN target under g/6: multiplier {mp_lunar:.1} ({}x)", (mp_lunar / mp).round());

    println!("\nshipped presets (all pinned to the 2 kN bench draft):");
    for name in SoilModel::PRESET_NAMES {
        let preset = SoilModel::preset(name).unwrap();
        println!(
            "  {:<14} phi={:>2} deg rho={} kg/m^3 mp={:.3}",
            preset.name, preset.friction_angle_phi, preset.bulk_density_rho,
            preset.resistance_multiplier_mp
        );
    }
}
