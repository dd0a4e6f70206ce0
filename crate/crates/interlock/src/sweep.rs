//! Deterministic one-parameter sweeps over a base scenario.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::InvalidConfig;
use crate::gait::{phase_force_balance, run_scenario_with, GaitTuning, Phase};
use crate::model::Scenario;

/// Parameters that may be swept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    SlopeDeg,
    BladeDraftDemand,
    GravityG,
    Cf,
    HingeHeightH,
    Mass,
}

impl SweepParam {
    pub const NAMES: [&'static str; 6] = [
        "slope_deg",
        "blade_draft_demand",
        "gravity_g",
        "cf",
        "hinge_height_h",
        "mass",
    ];

    fn apply(self, scenario: &mut Scenario, value: f64) {
        match self {
            SweepParam::SlopeDeg => scenario.terrain.slope_deg = value,
            SweepParam::BladeDraftDemand => scenario.blade_draft_demand = value,
            SweepParam::GravityG => scenario.environment.gravity_g = value,
            SweepParam::Cf => scenario.soil.center_of_force_fraction_cf = value,
            SweepParam::HingeHeightH => {
                scenario.vehicle.front_spikes.hinge_height_h = value;
                scenario.vehicle.rear_spikes.hinge_height_h = value;
            }
            SweepParam::Mass => scenario.vehicle.mass = value,
        }
    }
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "slope_deg" => Ok(SweepParam::SlopeDeg),
            "blade_draft_demand" => Ok(SweepParam::BladeDraftDemand),
            "gravity_g" => Ok(SweepParam::GravityG),
            "cf" => Ok(SweepParam::Cf),
            "hinge_height_h" => Ok(SweepParam::HingeHeightH),
            "mass" => Ok(SweepParam::Mass),
            other => Err(format!(
                "unknown sweep parameter '{other}' (expected one of {})",
                SweepParam::NAMES.join(", ")
            )),
        }
    }
}

/// One sweep row: the full outcome and margins at a parameter value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub outcome: String,
    pub distance_m: f64,
    pub lateral_offset_m: f64,
    pub lift_margin_front_n: f64,
    pub lift_margin_rear_n: f64,
    pub anchor_margin_n: f64,
    pub rollover_margin_deg: f64,
    /// Rear-pair equilibrium depth in the push phase [m].
    pub push_depth_m: f64,
    /// Front-pair equilibrium depth in the pull phase [m].
    pub pull_depth_m: f64,
}

/// Run `steps + 1` evenly spaced values from `from` to `to` (a single
/// `from` row when `steps` is 0), in input order.
pub fn run_sweep(
    base: &Scenario,
    param: SweepParam,
    from: f64,
    to: f64,
    steps: u32,
    max_cycles: u32,
    tuning: &GaitTuning,
) -> Result<Vec<SweepRow>, InvalidConfig> {
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for i in 0..=steps {
        let value = if steps == 0 {
            from
        } else {
            from + (to - from) * f64::from(i) / f64::from(steps)
        };
        let mut scenario = base.clone();
        param.apply(&mut scenario, value);
        let report = run_scenario_with(&scenario, max_cycles, tuning)?;
        let push_depth = phase_force_balance(Phase::PushBlade, &scenario, tuning)
            .map(|b| b.spikes[0].depth)
            .unwrap_or(f64::NAN);
        let pull_depth = phase_force_balance(Phase::PullFrame, &scenario, tuning)
            .map(|b| b.spikes[0].depth)
            .unwrap_or(f64::NAN);
        rows.push(SweepRow {
            value,
            outcome: report.outcome.to_string(),
            distance_m: report.distance_covered,
            lateral_offset_m: report.lateral_offset,
            lift_margin_front_n: report.summary.lift_margin_front,
            lift_margin_rear_n: report.summary.lift_margin_rear,
            anchor_margin_n: report.summary.anchor_margin,
            rollover_margin_deg: report.summary.rollover_margin,
            push_depth_m: push_depth,
            pull_depth_m: pull_depth,
        });
    }
    Ok(rows)
}

/// Render sweep rows as CSV with a fixed column order.
pub fn to_csv(param: SweepParam, rows: &[SweepRow]) -> String {
    let name = match param {
        SweepParam::SlopeDeg => "slope_deg",
        SweepParam::BladeDraftDemand => "blade_draft_demand",
        SweepParam::GravityG => "gravity_g",
        SweepParam::Cf => "cf",
        SweepParam::HingeHeightH => "hinge_height_h",
        SweepParam::Mass => "mass",
    };
    let mut out = format!(
        "{name},outcome,distance_m,lateral_offset_m,lift_margin_front_N,lift_margin_rear_N,anchor_margin_N,rollover_margin_deg,push_depth_m,pull_depth_m\n"
    );
    for r in rows {
        out.push_str(&format!(
            "{:.6},{},{:.3},{:.4},{:.3},{:.3},{:.3},{:.3},{:.6},{:.6}\n",
            r.value,
            r.outcome,
            r.distance_m,
            r.lateral_offset_m,
            r.lift_margin_front_n,
            r.lift_margin_rear_n,
            r.anchor_margin_n,
            r.rollover_margin_deg,
            r.push_depth_m,
            r.pull_depth_m,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gait::GaitTuning;
    use crate::model::Scenario;

    #[test]
    fn zero_steps_yields_one_row() {
        let rows = run_sweep(
            &Scenario::flat_beach(),
            SweepParam::SlopeDeg,
            0.0,
            45.0,
            0,
            100,
            &GaitTuning::default(),
        )
        .unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].value, 0.0);
        assert_eq!(rows[0].outcome, "path_cleared");
    }

    #[test]
    fn gravity_sweep_depth_scales_inverse_sqrt() {
        // keep the spikes unsaturated at the low-gravity end
        let mut base = Scenario::flat_beach();
        base.blade_draft_demand = 600.0;
        let rows = run_sweep(
            &base,
            SweepParam::GravityG,
            9.81,
            1.62,
            1,
            100,
            &GaitTuning::default(),
        )
        .unwrap();
        let ratio = rows[1].push_depth_m / rows[0].push_depth_m;
        assert!((ratio - (9.81f64 / 1.62).sqrt()).abs() < 1e-6, "{ratio}");
    }

    #[test]
    fn unknown_param_is_an_error() {
        assert!("draft_demand".parse::<SweepParam>().is_err());
        assert!("slope_deg".parse::<SweepParam>().is_ok());
    }

    #[test]
    fn slope_sweep_never_recovers_after_blocking() {
        let rows = run_sweep(
            &Scenario::flat_beach(),
            SweepParam::SlopeDeg,
            0.0,
            45.0,
            45,
            100,
            &GaitTuning::default(),
        )
        .unwrap();
        let mut seen_blocked = false;
        for row in &rows {
            let cleared = row.outcome == "path_cleared";
            if seen_blocked {
                assert!(!cleared, "outcome improved at slope {}", row.value);
            }
            if !cleared {
                seen_blocked = true;
            }
        }
        assert!(seen_blocked, "sweep should eventually block");
        assert_eq!(rows.len(), 46);
    }
}
