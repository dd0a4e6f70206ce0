//! The bundled field-trial scenario suite.
//!
//! Nine groups mirror the demonstrator's slope trials: beach (flat, 12 deg
//! contour, diagonal, uphill), fine quarry stockpile at 20 deg (contour,
//! diagonal, uphill at two drafts), the coarse 30 deg stockpile and the
//! 40 deg repose wall. Each group carries the observed field outcome; the
//! suite reports one row per group with a match flag.

use serde::{Deserialize, Serialize};

use crate::gait::{run_scenario_with, GaitTuning, Outcome, TrialEventKind};
use crate::model::{
    weight, Environment, HeadingMode, Scenario, SoilModel, SpikeId, TerrainPatch, VehicleConfig,
};
use crate::soil;

/// One scenario with its observed outcome.
#[derive(Clone, Debug)]
pub struct SuiteCase {
    pub scenario: Scenario,
    pub expected_outcome: Outcome,
    /// An event kind that must appear in the report for a match.
    pub expected_event: Option<TrialEventKind>,
}

/// One trial group (one table row).
#[derive(Clone, Debug)]
pub struct SuiteGroup {
    pub name: &'static str,
    pub location: &'static str,
    pub path_mode: &'static str,
    /// Number of field trials behind this group.
    pub trials: u32,
    pub cases: Vec<SuiteCase>,
}

/// Surface offset under one rear spike that brings its center-of-force
/// thrust angle to 25 deg at the heavy uphill operating point
/// (2.5 kN blade demand plus the slope term, split across the pair).
pub fn uneven_offset_for_gamma25() -> f64 {
    let vehicle = VehicleConfig::default();
    let env = Environment::default();
    let soil = SoilModel::quarry_fine();
    let demand = 2500.0 + weight(&vehicle, &env) * 20.0f64.to_radians().sin();
    let share = 0.5 * demand;
    let c = soil::resistance_constant(&soil, &vehicle.rear_spikes, &env)
        .expect("preset soil constants");
    let depth = (2.0 * share / c).sqrt();
    let cf = soil.center_of_force_fraction_cf;
    vehicle.rear_spikes.radius_r * 25.0f64.to_radians().sin() - cf * depth
}

fn base(label: &str, soil: SoilModel, terrain: TerrainPatch, demand: f64) -> Scenario {
    Scenario {
        label: label.to_string(),
        vehicle: VehicleConfig::default(),
        soil,
        environment: Environment::default(),
        terrain,
        blade_draft_demand: demand,
    }
}

/// Build the nine bundled groups.
pub fn bundled_groups() -> Vec<SuiteGroup> {
    let mut groups = Vec::new();

    groups.push(SuiteGroup {
        name: "beach_flat",
        location: "beach",
        path_mode: "flat",
        trials: 1,
        cases: vec![SuiteCase {
            scenario: base(
                "beach_flat",
                SoilModel::beach_sand(),
                TerrainPatch::flat(10.0),
                1500.0,
            ),
            expected_outcome: Outcome::PathCleared,
            expected_event: None,
        }],
    });

    groups.push(SuiteGroup {
        name: "beach_contour_12",
        location: "beach",
        path_mode: "contour",
        trials: 3,
        cases: vec![SuiteCase {
            scenario: base(
                "beach_contour_12",
                SoilModel::beach_sand(),
                TerrainPatch::slope(12.0, HeadingMode::Contour, 10.0),
                1500.0,
            ),
            expected_outcome: Outcome::PathCleared,
            expected_event: Some(TrialEventKind::VeerSlow),
        }],
    });

    let mut beach_diag = TerrainPatch::slope(14.0, HeadingMode::Diagonal, 10.0);
    beach_diag.pitch_deg = Some(8.0);
    beach_diag.roll_deg = Some(12.0);
    groups.push(SuiteGroup {
        name: "beach_diagonal_12_16",
        location: "beach",
        path_mode: "diagonal",
        trials: 5,
        cases: vec![SuiteCase {
            scenario: base("beach_diagonal_12_16", SoilModel::beach_sand(), beach_diag, 1500.0),
            expected_outcome: Outcome::PathCleared,
            expected_event: Some(TrialEventKind::VeerSlow),
        }],
    });

    groups.push(SuiteGroup {
        name: "beach_uphill_12_16",
        location: "beach",
        path_mode: "uphill",
        trials: 3,
        cases: vec![SuiteCase {
            scenario: base(
                "beach_uphill_12_16",
                SoilModel::beach_sand(),
                TerrainPatch::slope(14.0, HeadingMode::Uphill, 7.0),
                1500.0,
            ),
            expected_outcome: Outcome::PathCleared,
            expected_event: None,
        }],
    });

    let mut fine20_contour = base(
        "quarry_fine_20_contour",
        SoilModel::quarry_fine(),
        TerrainPatch::slope(20.0, HeadingMode::Contour, 10.0),
        2000.0,
    );
    fine20_contour.vehicle.speed = 0.07;
    groups.push(SuiteGroup {
        name: "quarry_fine_20_contour",
        location: "quarry, fine",
        path_mode: "contour",
        trials: 1,
        cases: vec![SuiteCase {
            scenario: fine20_contour,
            expected_outcome: Outcome::PathCleared,
            expected_event: Some(TrialEventKind::VeerSlow),
        }],
    });

    let mut fine_diag_terrain = TerrainPatch::slope(20.0, HeadingMode::Diagonal, 10.0);
    fine_diag_terrain.pitch_deg = Some(18.6);
    fine_diag_terrain.roll_deg = Some(7.0);
    let mut fine20_diag = base(
        "quarry_fine_20_diagonal",
        SoilModel::quarry_fine(),
        fine_diag_terrain,
        2000.0,
    );
    fine20_diag.vehicle.speed = 0.07;
    groups.push(SuiteGroup {
        name: "quarry_fine_20_diagonal",
        location: "quarry, fine",
        path_mode: "diagonal",
        trials: 2,
        cases: vec![SuiteCase {
            scenario: fine20_diag,
            expected_outcome: Outcome::PathCleared,
            expected_event: None,
        }],
    });

    let offset = uneven_offset_for_gamma25();
    let mut uphill_light = base(
        "quarry_fine_20_uphill_2000",
        SoilModel::quarry_fine(),
        TerrainPatch::slope(20.0, HeadingMode::Uphill, 10.0),
        2000.0,
    );
    uphill_light.vehicle.speed = 0.07;
    uphill_light
        .terrain
        .per_spike_surface_offsets
        .insert(SpikeId::RearLeft, offset);
    let mut uphill_heavy = uphill_light.clone();
    uphill_heavy.label = "quarry_fine_20_uphill_2500".to_string();
    uphill_heavy.blade_draft_demand = 2500.0;
    groups.push(SuiteGroup {
        name: "quarry_fine_20_uphill",
        location: "quarry, fine",
        path_mode: "uphill",
        trials: 2,
        cases: vec![
            SuiteCase {
                scenario: uphill_light,
                expected_outcome: Outcome::PathCleared,
                expected_event: None,
            },
            SuiteCase {
                scenario: uphill_heavy,
                expected_outcome: Outcome::BlockedByLift,
                expected_event: Some(TrialEventKind::LiftOffRear),
            },
        ],
    });

    groups.push(SuiteGroup {
        name: "quarry_coarse_30_contour",
        location: "quarry, coarse",
        path_mode: "contour",
        trials: 4,
        cases: vec![SuiteCase {
            scenario: base(
                "quarry_coarse_30_contour",
                SoilModel::quarry_coarse(),
                TerrainPatch::slope(30.0, HeadingMode::Contour, 10.0),
                1500.0,
            ),
            expected_outcome: Outcome::BlockedByLift,
            expected_event: Some(TrialEventKind::LiftOffFront),
        }],
    });

    let mut wall_terrain = TerrainPatch::slope(40.0, HeadingMode::Contour, 10.0);
    wall_terrain.pitch_deg = Some(5.0);
    wall_terrain.roll_deg = Some(40.0);
    groups.push(SuiteGroup {
        name: "quarry_fine_40_contour",
        location: "quarry, fine",
        path_mode: "contour",
        trials: 1,
        cases: vec![SuiteCase {
            scenario: base("quarry_fine_40_contour", SoilModel::quarry_fine(), wall_terrain, 1500.0),
            expected_outcome: Outcome::VeeredOff,
            expected_event: Some(TrialEventKind::VeerFast),
        }],
    });

    groups
}

/// Bundled scenario lookup by label.
pub fn bundled_scenario(label: &str) -> Option<Scenario> {
    bundled_groups()
        .into_iter()
        .flat_map(|g| g.cases)
        .map(|c| c.scenario)
        .find(|s| s.label == label)
}

/// Options for a suite run.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Use tip thrust angles for lift (conservative mode).
    pub strict_gamma: bool,
    /// Override gravity, e.g. for a low-gravity divergence table.
    pub gravity_override: Option<f64>,
}

/// One rendered suite row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteRow {
    pub group: String,
    pub location: String,
    pub path_mode: String,
    pub pitch_roll_deg: String,
    pub trials: u32,
    pub simulated: String,
    pub observed: String,
    pub matched: bool,
}

/// Result of running all groups.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub rows: Vec<SuiteRow>,
    pub all_match: bool,
}

const MAX_CYCLES: u32 = 100;

/// Run every bundled group in order.
pub fn run_suite(options: &SuiteOptions) -> SuiteResult {
    let tuning = GaitTuning {
        strict_gamma: options.strict_gamma,
        ..GaitTuning::default()
    };
    let mut rows = Vec::new();
    let mut all_match = true;
    for group in bundled_groups() {
        let mut simulated = Vec::new();
        let mut observed = Vec::new();
        let mut matched = true;
        let mut pitch_roll = String::new();
        for (i, case) in group.cases.iter().enumerate() {
            let mut scenario = case.scenario.clone();
            if let Some(g) = options.gravity_override {
                scenario.environment.gravity_g = g;
            }
            if i == 0 {
                pitch_roll = format!(
                    "{:.1}/{:.1}",
                    scenario.terrain.effective_pitch(),
                    scenario.terrain.effective_roll()
                );
            }
            let report =
                run_scenario_with(&scenario, MAX_CYCLES, &tuning).expect("bundled scenarios are valid");
            let outcome_ok = report.outcome == case.expected_outcome;
            let event_ok = case
                .expected_event
                .map(|k| report.events.iter().any(|e| e.kind == k))
                .unwrap_or(true);
            matched &= outcome_ok && event_ok;
            simulated.push(report.outcome.to_string());
            observed.push(case.expected_outcome.to_string());
        }
        all_match &= matched;
        rows.push(SuiteRow {
            group: group.name.to_string(),
            location: group.location.to_string(),
            path_mode: group.path_mode.to_string(),
            pitch_roll_deg: pitch_roll,
            trials: group.trials,
            simulated: simulated.join(" | "),
            observed: observed.join(" | "),
            matched,
        });
    }
    SuiteResult { rows, all_match }
}

/// Render the suite result as a stable text table.
pub fn render_table(result: &SuiteResult, options: &SuiteOptions) -> String {
    let mut out = String::new();
    if let Some(g) = options.gravity_override {
        out.push_str(&format!(
            "divergence table at gravity {g} m/s^2 (no field ground truth)\n"
        ));
    }
    if options.strict_gamma {
        out.push_str("strict tip-angle lift criterion\n");
    }
    out.push_str(&format!(
        "{:<26} {:<15} {:<9} {:>11} {:>7}  {:<34} {:<34} {}\n",
        "group", "location", "path", "pitch/roll", "trials", "simulated", "observed", "match"
    ));
    for r in &result.rows {
        out.push_str(&format!(
            "{:<26} {:<15} {:<9} {:>11} {:>7}  {:<34} {:<34} {}\n",
            r.group,
            r.location,
            r.path_mode,
            r.pitch_roll_deg,
            r.trials,
            r.simulated,
            r.observed,
            if r.matched { "yes" } else { "NO" }
        ));
    }
    out.push_str(&format!(
        "{}/{} groups match\n",
        result.rows.iter().filter(|r| r.matched).count(),
        result.rows.len()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_groups_ten_scenarios() {
        let groups = bundled_groups();
        assert_eq!(groups.len(), 9);
        let scenarios: usize = groups.iter().map(|g| g.cases.len()).sum();
        assert_eq!(scenarios, 10);
    }

    #[test]
    fn all_bundled_scenarios_validate() {
        for group in bundled_groups() {
            for case in group.cases {
                crate::model::validate(case.scenario).unwrap();
            }
        }
    }

    #[test]
    fn default_calibration_matches_all_groups() {
        let result = run_suite(&SuiteOptions::default());
        for row in &result.rows {
            assert!(row.matched, "group {} simulated {}", row.group, row.simulated);
        }
        assert!(result.all_match);
    }

    #[test]
    fn strict_tip_angle_mode_breaks_the_heavy_uphill_group() {
        let result = run_suite(&SuiteOptions {
            strict_gamma: true,
            gravity_override: None,
        });
        assert!(!result.all_match);
        let uphill = result.rows.iter().find(|r| r.group == "quarry_fine_20_uphill").unwrap();
        assert!(!uphill.matched);
    }

    #[test]
    fn table_rendering_is_stable() {
        let opts = SuiteOptions::default();
        let a = render_table(&run_suite(&opts), &opts);
        let b = render_table(&run_suite(&opts), &opts);
        assert_eq!(a, b);
    }

    #[test]
    fn offset_lookup_by_label() {
        assert!(bundled_scenario("beach_flat").is_some());
        assert!(bundled_scenario("quarry_fine_20_uphill_2500").is_some());
        assert!(bundled_scenario("nope").is_none());
    }
}
