//! Per-spike statics: thrust-angle geometry, the center-of-force
//! correction, the penetration window and the hinge lift force.
//!
//! The thrust angle gamma is measured through the arcsine of the vertical
//! hinge-to-tip offset over the spike radius (the chord has fixed length
//! r). A positive surface offset means the local ground is lower: the gap
//! adds fully to the tip's vertical offset, while the center-of-force
//! fraction applies to the soil-engaged depth only, so
//!
//! ```text
//! gamma     = asin((h + d + off) / r)
//! gamma_eff = asin((h + off + cf * d) / r)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::model::{SpikeDesign, SpikeId};

/// Where the rake-minus-thrust difference falls relative to the
/// penetration window 15 deg < alpha - gamma < 35 deg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowStatus {
    InWindow,
    /// alpha - gamma <= 15 deg: penetration force deficit.
    TooShallowAngle,
    /// alpha - gamma >= 35 deg.
    TooSteepAngle,
}

impl std::fmt::Display for WindowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WindowStatus::InWindow => "in_window",
            WindowStatus::TooShallowAngle => "too_shallow_angle",
            WindowStatus::TooSteepAngle => "too_steep_angle",
        })
    }
}

/// Static state of one spike within a half-cycle force balance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpikeState {
    pub spike_id: SpikeId,
    /// Soil-engaged depth below the local surface [m].
    pub depth: f64,
    /// Local surface offset applied to this spike [m].
    pub surface_offset: f64,
    /// Tip-based thrust angle [deg].
    pub gamma: f64,
    /// Center-of-force thrust angle [deg].
    pub gamma_eff: f64,
    /// Draft share carried by this spike [N].
    pub draft_share: f64,
    /// Hinge lift from the draft share [N].
    pub lift: f64,
    /// True when the spike bottomed out below its demanded share.
    pub saturated: bool,
    pub window_status: WindowStatus,
}

fn vertical_ratio(op: &'static str, spike: &SpikeDesign, vertical: f64) -> Result<f64, DomainError> {
    let ratio = vertical / spike.radius_r;
    if !(0.0..1.0).contains(&ratio) {
        return Err(DomainError::new(
            op,
            format!(
                "vertical offset {vertical:.4} m not reachable for radius {} m",
                spike.radius_r
            ),
        ));
    }
    Ok(ratio)
}

/// Tip-based thrust angle [deg].
pub fn thrust_angle(spike: &SpikeDesign, depth: f64, surface_offset: f64) -> Result<f64, DomainError> {
    let v = spike.hinge_height_h + depth + surface_offset;
    Ok(vertical_ratio("thrust_angle", spike, v)?.asin().to_degrees())
}

/// Center-of-force thrust angle [deg]. `cf = 1` reduces to [`thrust_angle`].
pub fn effective_thrust_angle(
    spike: &SpikeDesign,
    depth: f64,
    surface_offset: f64,
    cf: f64,
) -> Result<f64, DomainError> {
    if !(cf > 0.0 && cf <= 1.0) {
        return Err(DomainError::new(
            "effective_thrust_angle",
            format!("center-of-force fraction {cf} outside (0, 1]"),
        ));
    }
    let v = spike.hinge_height_h + surface_offset + cf * depth;
    Ok(vertical_ratio("effective_thrust_angle", spike, v)?
        .asin()
        .to_degrees())
}

/// Classify alpha - gamma against the strict window (15, 35) deg.
pub fn penetration_window(rake_alpha: f64, gamma: f64) -> WindowStatus {
    let diff = rake_alpha - gamma;
    if diff <= 15.0 {
        WindowStatus::TooShallowAngle
    } else if diff >= 35.0 {
        WindowStatus::TooSteepAngle
    } else {
        WindowStatus::InWindow
    }
}

/// Hinge lift F_L = F_D * tan(gamma) [N].
pub fn lift_force(draft_share: f64, gamma_deg: f64) -> Result<f64, DomainError> {
    if !(0.0..90.0).contains(&gamma_deg) {
        return Err(DomainError::new(
            "lift_force",
            format!("thrust angle {gamma_deg} deg outside [0, 90)"),
        ));
    }
    Ok(draft_share * gamma_deg.to_radians().tan())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thrust_angle_examples() {
        let large = SpikeDesign::large();
        let small = SpikeDesign::small();
        assert_eq!(thrust_angle(&large, 0.0, 0.0).unwrap(), 0.0);
        let g = thrust_angle(&large, 0.5, 0.0).unwrap();
        assert!((g - 21.74).abs() < 0.01, "{g}");
        let g2 = thrust_angle(&small, 0.15, 0.0).unwrap();
        assert!((g2 - 14.48).abs() < 0.01, "{g2}");
    }

    #[test]
    fn thrust_angle_rejects_unreachable_tip() {
        let small = SpikeDesign::small();
        assert!(thrust_angle(&small, 0.55, 0.10).is_err());
    }

    #[test]
    fn effective_angle_examples_and_reduction() {
        let large = SpikeDesign::large();
        let small = SpikeDesign::small();
        let cf = 2.0 / 3.0;
        let g = effective_thrust_angle(&large, 0.5, 0.0, cf).unwrap();
        assert!((g - 14.295).abs() < 0.01, "{g}");
        let g2 = effective_thrust_angle(&small, 0.15, 0.0, cf).unwrap();
        assert!((g2 - 9.594).abs() < 0.01, "{g2}");
        // cf = 1 reduces exactly to the tip angle
        for d in [0.1, 0.25, 0.4] {
            assert_eq!(
                effective_thrust_angle(&large, d, 0.05, 1.0).unwrap(),
                thrust_angle(&large, d, 0.05).unwrap()
            );
        }
    }

    #[test]
    fn effective_never_exceeds_tip_angle() {
        let large = SpikeDesign::large();
        for d in [0.05, 0.2, 0.35, 0.5] {
            for off in [0.0, 0.1, 0.3] {
                let tip = thrust_angle(&large, d, off).unwrap();
                let eff = effective_thrust_angle(&large, d, off, 2.0 / 3.0).unwrap();
                assert!(eff <= tip);
            }
        }
    }

    #[test]
    fn window_boundaries_are_strict() {
        assert_eq!(penetration_window(30.0, 15.0), WindowStatus::TooShallowAngle);
        assert_eq!(penetration_window(45.0, 20.0), WindowStatus::InWindow);
        assert_eq!(penetration_window(50.0, 10.0), WindowStatus::TooSteepAngle);
        assert_eq!(penetration_window(50.0, 15.0), WindowStatus::TooSteepAngle);
        assert_eq!(penetration_window(50.0, 15.0 + 1e-9), WindowStatus::InWindow);
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_force(1234.0, 0.0).unwrap(), 0.0);
        // at the pull/weight-2 limit angle the lift equals exactly half the draft
        let gamma = 0.5f64.atan().to_degrees();
        let lift = lift_force(784.8, gamma).unwrap();
        assert!((lift - 392.4).abs() < 1e-9, "{lift}");
        let lift25 = lift_force(2500.0, 25.0).unwrap();
        assert!((lift25 - 1165.8).abs() < 0.1, "{lift25}");
        assert!(lift_force(100.0, 90.0).is_err());
    }
}
