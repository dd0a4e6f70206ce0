//! Vehicle-level static analysis: slope force decomposition, pull/weight
//! limits, lift-off and rollover margins.

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::model::{weight, Environment, Scenario, VehicleConfig};

/// Gravity load decomposed into the vehicle frame [N].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeLoads {
    /// Along-track (downhill along heading) component.
    pub along_track: f64,
    /// Cross-track component.
    pub lateral: f64,
    /// Ground-normal component.
    pub normal: f64,
}

/// W decomposed by pitch and roll:
/// along = W sin(pitch), lateral = W cos(pitch) sin(roll),
/// normal = W cos(pitch) cos(roll).
pub fn slope_decomposition(
    weight_n: f64,
    pitch_deg: f64,
    roll_deg: f64,
) -> Result<SlopeLoads, DomainError> {
    if pitch_deg.abs() >= 90.0 || roll_deg.abs() >= 90.0 {
        return Err(DomainError::new(
            "slope_decomposition",
            format!("pitch {pitch_deg} / roll {roll_deg} deg must be below 90 in magnitude"),
        ));
    }
    let p = pitch_deg.to_radians();
    let r = roll_deg.to_radians();
    Ok(SlopeLoads {
        along_track: weight_n * p.sin(),
        lateral: weight_n * p.cos() * r.sin(),
        normal: weight_n * p.cos() * r.cos(),
    })
}

/// Largest thrust angle at which a draft of pw*W lifts exactly W:
/// arctan(1/pw) [deg].
pub fn max_thrust_angle_for_pull_weight(pw: f64) -> Result<f64, DomainError> {
    if pw <= 0.0 || !pw.is_finite() {
        return Err(DomainError::new(
            "max_thrust_angle_for_pull_weight",
            format!("pull/weight ratio {pw} must be > 0"),
        ));
    }
    Ok((1.0 / pw).atan().to_degrees())
}

/// Draft over vehicle weight.
pub fn pull_weight_ratio(draft: f64, vehicle: &VehicleConfig, env: &Environment) -> f64 {
    draft / weight(vehicle, env)
}

/// Quasi-static roll angle at which the vehicle tips about the downhill
/// support line: arctan((track/2) / com_height) [deg].
pub fn rollover_tip_angle(vehicle: &VehicleConfig) -> Result<f64, DomainError> {
    if vehicle.com_height <= 0.0 {
        return Err(DomainError::new(
            "rollover_tip_angle",
            "center-of-mass height must be > 0",
        ));
    }
    Ok((0.5 * vehicle.track_width / vehicle.com_height)
        .atan()
        .to_degrees())
}

/// Outcome of a lift-off comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftCheck {
    /// Load minus lift [N]; negative means the frame lifts.
    pub margin: f64,
    pub lifted: bool,
}

/// Compare a total hinge lift against the normal load it must overcome.
pub fn lift_off_check(frame_normal_load: f64, total_hinge_lift: f64) -> LiftCheck {
    let margin = frame_normal_load - total_hinge_lift;
    LiftCheck {
        margin,
        lifted: margin < 0.0,
    }
}

/// Reference load for rear (drive-frame) lift-off, from the pitch-plane
/// moment balance about the front support: the hinges sit roughly half a
/// stroke ahead of mid-vehicle at push start, so their lever arm is
/// shorter than the center of mass arm and the lift must exceed
/// normal * com_arm / hinge_arm before the machine rotates free.
pub fn rear_lift_reference_load(vehicle: &VehicleConfig, normal: f64) -> f64 {
    let com_arm = 0.5 * vehicle.total_length;
    let hinge_arm = com_arm - 0.5 * vehicle.stroke;
    normal * com_arm / hinge_arm
}

/// Reference load for front (blade-frame) lift-off: the blade frame's own
/// share of the normal load.
pub fn front_lift_reference_load(vehicle: &VehicleConfig, normal: f64) -> f64 {
    vehicle.frame1_mass_fraction * normal
}

/// What limits the vehicle first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitingFactor {
    LiftOff,
    Rollover,
    AnchorCapacity,
    None,
}

impl std::fmt::Display for LimitingFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LimitingFactor::LiftOff => "lift_off",
            LimitingFactor::Rollover => "rollover",
            LimitingFactor::AnchorCapacity => "anchor_capacity",
            LimitingFactor::None => "none",
        })
    }
}

/// Static stability summary for a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub pull_weight_ratio: f64,
    /// Largest admissible thrust angle for the demanded pull/weight [deg].
    pub max_gamma_allowed: f64,
    pub rollover_tip_angle: f64,
    /// Tip angle minus the actual roll [deg].
    pub rollover_margin: f64,
    /// Front-frame normal load minus total front hinge lift [N].
    pub lift_margin_front: f64,
    /// Rear reference load minus total rear hinge lift [N].
    pub lift_margin_rear: f64,
    /// Anchored-pair capacity minus demanded draft, worst phase [N].
    pub anchor_margin: f64,
    pub limiting_factor: LimitingFactor,
}

impl StabilityReport {
    pub fn classify(
        rollover_margin: f64,
        lift_margin_front: f64,
        lift_margin_rear: f64,
        anchor_margin: f64,
    ) -> LimitingFactor {
        // report the tightest violated margin; None when all positive
        let candidates = [
            (LimitingFactor::Rollover, rollover_margin),
            (LimitingFactor::LiftOff, lift_margin_front.min(lift_margin_rear)),
            (LimitingFactor::AnchorCapacity, anchor_margin),
        ];
        let mut worst = LimitingFactor::None;
        let mut worst_value = 0.0f64;
        for (factor, value) in candidates {
            if value < worst_value {
                worst = factor;
                worst_value = value;
            }
        }
        worst
    }
}

/// Build the static stability report for a scenario without running the
/// gait simulation: both phases are evaluated once on even terrain with
/// the scenario's offsets applied.
pub fn stability_report(scenario: &Scenario) -> Result<StabilityReport, DomainError> {
    let tuning = crate::gait::GaitTuning::default();
    let push = crate::gait::phase_force_balance(crate::gait::Phase::PushBlade, scenario, &tuning)?;
    let pull = crate::gait::phase_force_balance(crate::gait::Phase::PullFrame, scenario, &tuning)?;

    let vehicle = &scenario.vehicle;
    let env = &scenario.environment;
    let ratio = pull_weight_ratio(scenario.blade_draft_demand, vehicle, env);
    let max_gamma = if ratio > 0.0 {
        max_thrust_angle_for_pull_weight(ratio)?
    } else {
        90.0
    };
    let tip = rollover_tip_angle(vehicle)?;
    let roll = scenario.terrain.effective_roll();
    let rollover_margin = tip - roll;
    let anchor_margin = (push.anchor_capacity - push.demand).min(pull.anchor_capacity - pull.demand);
    Ok(StabilityReport {
        pull_weight_ratio: ratio,
        max_gamma_allowed: max_gamma,
        rollover_tip_angle: tip,
        rollover_margin,
        lift_margin_front: pull.lift_margin,
        lift_margin_rear: push.lift_margin,
        anchor_margin,
        limiting_factor: StabilityReport::classify(
            rollover_margin,
            pull.lift_margin,
            push.lift_margin,
            anchor_margin,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Scenario;

    #[test]
    fn decomposition_examples() {
        let flat = slope_decomposition(392.4, 0.0, 0.0).unwrap();
        assert_eq!(flat.along_track, 0.0);
        assert_eq!(flat.lateral, 0.0);
        assert!((flat.normal - 392.4).abs() < 1e-12);

        let roll30 = slope_decomposition(392.4, 0.0, 30.0).unwrap();
        assert!((roll30.lateral - 196.2).abs() < 1e-9, "{}", roll30.lateral);

        let pitch20 = slope_decomposition(392.4, 20.0, 0.0).unwrap();
        assert!((pitch20.along_track - 134.2).abs() < 0.05);
    }

    #[test]
    fn decomposition_preserves_norm() {
        for (p, r) in [(0.0, 0.0), (12.0, 30.0), (45.0, 60.0), (-20.0, 5.0)] {
            let l = slope_decomposition(392.4, p, r).unwrap();
            let norm = (l.along_track.powi(2) + l.lateral.powi(2) + l.normal.powi(2)).sqrt();
            assert!((norm - 392.4).abs() / 392.4 < 1e-9);
        }
        assert!(slope_decomposition(392.4, 90.0, 0.0).is_err());
    }

    #[test]
    fn max_thrust_angle_examples() {
        assert!((max_thrust_angle_for_pull_weight(1.0).unwrap() - 45.0).abs() < 1e-12);
        let a2 = max_thrust_angle_for_pull_weight(2.0).unwrap();
        assert!((a2 - 26.565).abs() < 0.005, "{a2}");
        let a4 = max_thrust_angle_for_pull_weight(4.0).unwrap();
        assert!((a4 - 14.036).abs() < 0.005, "{a4}");
        assert!(max_thrust_angle_for_pull_weight(0.0).is_err());
    }

    #[test]
    fn pull_weight_examples() {
        let v = VehicleConfig::default();
        let env = Environment::default();
        assert_eq!(pull_weight_ratio(0.0, &v, &env), 0.0);
        assert!((pull_weight_ratio(1500.0, &v, &env) - 3.8226).abs() < 0.001);
        assert!((pull_weight_ratio(2500.0, &v, &env) - 6.371).abs() < 0.001);
    }

    #[test]
    fn rollover_examples() {
        let mut v = VehicleConfig::default();
        let tip = rollover_tip_angle(&v).unwrap();
        assert!((tip - 70.017).abs() < 0.01, "{tip}");
        v.com_height = 0.275;
        assert!((rollover_tip_angle(&v).unwrap() - 45.0).abs() < 1e-12);
        v.com_height = 0.20;
        assert!((rollover_tip_angle(&v).unwrap() - 53.973).abs() < 0.01);
        v.com_height = 0.0;
        assert!(rollover_tip_angle(&v).is_err());
    }

    #[test]
    fn lift_off_examples() {
        let ok = lift_off_check(392.4, 0.0);
        assert!((ok.margin - 392.4).abs() < 1e-12);
        assert!(!ok.lifted);
        assert!(lift_off_check(392.4, 1165.8).lifted);
        // tip-based criterion trips at 2 kN and 15 deg...
        assert!(lift_off_check(392.4, 535.9).lifted);
        // ...while the center-of-force corrected lift stays below the weight
        assert!(!lift_off_check(392.4, 350.4).lifted);
    }

    #[test]
    fn consistency_identity_lift_equals_weight_at_limit_angle() {
        let w = 392.4;
        let mut pw = 0.1;
        while pw < 20.0 {
            let gamma = max_thrust_angle_for_pull_weight(pw).unwrap();
            let lift = crate::spike::lift_force(pw * w, gamma).unwrap();
            assert!((lift - w).abs() / w <= 1e-9, "pw={pw}");
            pw += 0.1;
        }
    }

    #[test]
    fn default_scenario_report_is_unlimited() {
        let report = stability_report(&Scenario::flat_beach()).unwrap();
        assert_eq!(report.limiting_factor, LimitingFactor::None);
        assert!(report.lift_margin_front > 0.0);
        assert!(report.lift_margin_rear > 0.0);
        assert!(report.rollover_margin > 69.0);
        assert!((report.pull_weight_ratio - 3.8226).abs() < 0.001);
    }

    #[test]
    fn rollover_never_limits_at_trial_slopes() {
        // lift-off or anchor capacity dominates everywhere the machine was
        // tried; the 70 deg tip angle is never the binding constraint
        let mut sc = Scenario::flat_beach();
        for slope in 12..=40 {
            sc.terrain.slope_deg = f64::from(slope);
            let report = stability_report(&sc).unwrap();
            assert_ne!(report.limiting_factor, LimitingFactor::Rollover, "slope {slope}");
            assert!(report.rollover_margin > 0.0);
        }
    }

    #[test]
    fn rollover_margin_decreases_with_roll() {
        let mut sc = Scenario::flat_beach();
        let mut prev = f64::INFINITY;
        for roll in [0.0, 10.0, 20.0, 30.0, 40.0] {
            sc.terrain.slope_deg = roll;
            let report = stability_report(&sc).unwrap();
            assert!(report.rollover_margin < prev);
            prev = report.rollover_margin;
        }
    }
}
