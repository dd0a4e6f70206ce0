//! Run artifacts: the machine-readable report document, the per-cycle CSV
//! log and a human-readable summary.
//!
//! Reports are self-describing: every assumption knob that shaped the
//! numbers is echoed into the header, so a report can be read without the
//! configuration that produced it. Emission is deterministic and
//! re-emission after parsing is byte-identical.

use serde::{Deserialize, Serialize};

use crate::gait::{GaitTuning, Phase, TrialReport};
use crate::model::Scenario;
use crate::stability;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Every model assumption that influenced a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssumptionEcho {
    pub gravity_g: f64,
    pub soil_name: String,
    pub resistance_multiplier_mp: f64,
    pub center_of_force_fraction_cf: f64,
    pub hinge_height_front_m: f64,
    pub hinge_height_rear_m: f64,
    pub rake_front_deg: f64,
    pub rake_rear_deg: f64,
    pub frame1_mass_fraction: f64,
    pub mu_drag: f64,
    pub k_v: f64,
    pub veer_exponent: f64,
    pub lateral_climb_coefficient: f64,
    pub veer_off_threshold_m: f64,
    pub rear_lift_moment_ratio: f64,
    pub strict_gamma: bool,
    pub depth_equalizer: bool,
    pub equalizer_slack_m: f64,
}

impl AssumptionEcho {
    pub fn new(scenario: &Scenario, tuning: &GaitTuning) -> Self {
        AssumptionEcho {
            gravity_g: scenario.environment.gravity_g,
            soil_name: scenario.soil.name.clone(),
            resistance_multiplier_mp: scenario.soil.resistance_multiplier_mp,
            center_of_force_fraction_cf: scenario.soil.center_of_force_fraction_cf,
            hinge_height_front_m: scenario.vehicle.front_spikes.hinge_height_h,
            hinge_height_rear_m: scenario.vehicle.rear_spikes.hinge_height_h,
            rake_front_deg: scenario.vehicle.front_spikes.rake_alpha,
            rake_rear_deg: scenario.vehicle.rear_spikes.rake_alpha,
            frame1_mass_fraction: scenario.vehicle.frame1_mass_fraction,
            mu_drag: tuning.mu_drag,
            k_v: tuning.k_v,
            veer_exponent: tuning.veer_exponent,
            lateral_climb_coefficient: tuning.lateral_climb_coefficient,
            veer_off_threshold_m: tuning.veer_off_threshold_m,
            rear_lift_moment_ratio: stability::rear_lift_reference_load(&scenario.vehicle, 1.0),
            strict_gamma: tuning.strict_gamma,
            depth_equalizer: scenario.vehicle.depth_equalizer,
            equalizer_slack_m: tuning.equalizer_slack_m,
        }
    }
}

/// The machine-readable report document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub assumptions: AssumptionEcho,
    #[serde(flatten)]
    pub trial: TrialReport,
}

/// A completed run bundled with its emission formats.
#[derive(Clone, Debug)]
pub struct RunArtifacts {
    pub report: ReportDoc,
}

impl RunArtifacts {
    pub fn new(scenario: &Scenario, tuning: &GaitTuning, trial: TrialReport) -> Self {
        RunArtifacts {
            report: ReportDoc {
                schema_version: REPORT_SCHEMA_VERSION,
                assumptions: AssumptionEcho::new(scenario, tuning),
                trial,
            },
        }
    }

    /// JSON emission; parse -> emit round-trips byte-identically.
    pub fn report_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }

    /// Per-cycle CSV log, two rows per half-cycle attempt (one per
    /// anchored spike). Column order is fixed and documented.
    pub fn log_csv(&self) -> String {
        let mut out = String::from(
            "cycle,phase,spike_id,depth_m,gamma_deg,gamma_eff_deg,draft_N,lift_N,margin_N,lateral_offset_m\n",
        );
        for entry in &self.report.trial.per_cycle_log {
            for s in &entry.spikes {
                out.push_str(&format!(
                    "{},{},{},{:.6},{:.4},{:.4},{:.3},{:.3},{:.3},{:.4}\n",
                    entry.cycle_index,
                    entry.phase,
                    s.spike_id,
                    s.depth,
                    s.gamma,
                    s.gamma_eff,
                    s.draft_share,
                    s.lift,
                    entry.lift_margin,
                    entry.lateral_offset,
                ));
            }
        }
        out
    }

    /// Short human-readable summary.
    pub fn summary_text(&self) -> String {
        let t = &self.report.trial;
        let mut out = String::new();
        out.push_str(&format!("trial: {}\n", t.label));
        out.push_str(&format!("outcome: {}", t.outcome));
        if let Some(d) = &t.outcome_detail {
            out.push_str(&format!(" ({d})"));
        }
        out.push('\n');
        out.push_str(&format!(
            "distance: {:.2} m   lateral offset: {:.3} m   cycles: {}   half-cycle attempts: {}\n",
            t.distance_covered, t.lateral_offset, t.cycles, t.half_cycle_attempts
        ));
        out.push_str(&format!(
            "pull/weight: {:.2}   max allowed gamma: {:.2} deg   rollover margin: {:.1} deg\n",
            t.summary.pull_weight_ratio, t.summary.max_gamma_allowed, t.summary.rollover_margin
        ));
        out.push_str(&format!(
            "worst lift margins: front {:.1} N, rear {:.1} N   anchor margin: {:.1} N   limiting: {}\n",
            t.summary.lift_margin_front,
            t.summary.lift_margin_rear,
            t.summary.anchor_margin,
            t.summary.limiting_factor
        ));
        if t.events.is_empty() {
            out.push_str("events: none\n");
        } else {
            use std::collections::BTreeMap;
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for e in &t.events {
                *counts.entry(e.kind.to_string()).or_default() += 1;
            }
            let joined: Vec<String> = counts.iter().map(|(k, n)| format!("{k} x{n}")).collect();
            out.push_str(&format!("events: {}\n", joined.join(", ")));
        }
        let push_rows = t
            .per_cycle_log
            .iter()
            .filter(|l| l.phase == Phase::PushBlade)
            .count();
        out.push_str(&format!(
            "log: {} half-cycle attempts ({} push, {} pull)\n",
            t.per_cycle_log.len(),
            push_rows,
            t.per_cycle_log.len() - push_rows
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gait::run_scenario;
    use crate::model::Scenario;

    fn artifacts() -> RunArtifacts {
        let sc = Scenario::flat_beach();
        let trial = run_scenario(&sc, 100).unwrap();
        RunArtifacts::new(&sc, &GaitTuning::default(), trial)
    }

    #[test]
    fn report_round_trips_byte_identically() {
        let a = artifacts();
        let first = a.report_json();
        let parsed: ReportDoc = serde_json::from_str(&first).unwrap();
        let mut second = serde_json::to_string_pretty(&parsed).unwrap();
        second.push('\n');
        assert_eq!(first, second);
    }

    #[test]
    fn csv_has_two_rows_per_half_cycle() {
        let a = artifacts();
        let csv = a.log_csv();
        let data_rows = csv.lines().count() - 1;
        assert_eq!(data_rows, 2 * a.report.trial.per_cycle_log.len());
        assert!(csv.starts_with("cycle,phase,spike_id,depth_m,gamma_deg,gamma_eff_deg,draft_N,lift_N,margin_N,lateral_offset_m"));
    }

    #[test]
    fn assumptions_echo_the_knobs() {
        let a = artifacts();
        let json = a.report_json();
        for key in [
            "resistance_multiplier_mp",
            "center_of_force_fraction_cf",
            "hinge_height_rear_m",
            "mu_drag",
            "k_v",
            "frame1_mass_fraction",
            "rear_lift_moment_ratio",
        ] {
            assert!(json.contains(key), "{key} missing from report header");
        }
    }
}
