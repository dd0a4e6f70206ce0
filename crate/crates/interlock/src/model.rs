//! Domain types, field-demonstrator defaults, soil presets and validation.
//!
//! All externally visible angles are degrees, lengths are meters, forces
//! are newtons, masses are kilograms. Types are plain immutable values;
//! after [`validate`] they are safe to share across concurrent runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{FieldError, InvalidConfig};

/// Identifies one of the four spikes. Front spikes sit on frame 1 (the
/// blade frame), rear spikes on frame 2 (the drive frame).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpikeId {
    FrontLeft,
    FrontRight,
    RearLeft,
    RearRight,
}

impl SpikeId {
    pub const ALL: [SpikeId; 4] = [
        SpikeId::FrontLeft,
        SpikeId::FrontRight,
        SpikeId::RearLeft,
        SpikeId::RearRight,
    ];

    pub fn is_front(self) -> bool {
        matches!(self, SpikeId::FrontLeft | SpikeId::FrontRight)
    }

    pub fn label(self) -> &'static str {
        match self {
            SpikeId::FrontLeft => "front_left",
            SpikeId::FrontRight => "front_right",
            SpikeId::RearLeft => "rear_left",
            SpikeId::RearRight => "rear_right",
        }
    }
}

impl std::fmt::Display for SpikeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Geometry of one spike class.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpikeDesign {
    /// Hinge-to-tip distance [m].
    pub radius_r: f64,
    /// Spike diameter [m].
    pub diameter_b: f64,
    /// Rake angle from horizontal [deg].
    pub rake_alpha: f64,
    /// Hinge elevation above local ground [m].
    pub hinge_height_h: f64,
    /// Maximum soil penetration depth [m].
    pub max_depth: f64,
    /// Lateral spacing of the pair [m].
    pub pair_spacing: f64,
}

impl SpikeDesign {
    /// Large rear spikes: r=1.35 m, 21 mm diameter, 0.50 m design depth.
    pub fn large() -> Self {
        SpikeDesign {
            radius_r: 1.35,
            diameter_b: 0.021,
            rake_alpha: 45.0,
            hinge_height_h: 0.0,
            max_depth: 0.50,
            pair_spacing: 0.55,
        }
    }

    /// Small front spikes: r=0.60 m, 12 mm diameter, 0.15 m design depth.
    pub fn small() -> Self {
        SpikeDesign {
            radius_r: 0.60,
            diameter_b: 0.012,
            rake_alpha: 35.0,
            hinge_height_h: 0.0,
            max_depth: 0.15,
            pair_spacing: 0.60,
        }
    }
}

/// Granular material parameters plus the two model knobs: the resistance
/// multiplier `m_p` and the center-of-force fraction `c_f`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoilModel {
    pub name: String,
    /// Internal friction angle [deg].
    pub friction_angle_phi: f64,
    /// Bulk density [kg/m^3].
    pub bulk_density_rho: f64,
    /// Dimensionless resistance multiplier (Broms-style factor).
    pub resistance_multiplier_mp: f64,
    /// Fraction of the penetration depth at which the soil reaction
    /// resultant acts, in (0, 1].
    pub center_of_force_fraction_cf: f64,
}

/// Bench calibration shared by the shipped presets: the large spike holds
/// this draft at its full design depth under standard gravity.
pub const PRESET_CALIBRATION_FORCE_N: f64 = 2000.0;
pub const PRESET_CALIBRATION_DEPTH_M: f64 = 0.5;

fn preset_mp(phi_deg: f64, rho: f64) -> f64 {
    let large = SpikeDesign::large();
    let kp = crate::soil::passive_coefficient(phi_deg).expect("preset friction angle");
    2.0 * PRESET_CALIBRATION_FORCE_N
        / (kp
            * rho
            * Environment::STANDARD_GRAVITY
            * large.diameter_b
            * PRESET_CALIBRATION_DEPTH_M
            * PRESET_CALIBRATION_DEPTH_M)
}

impl SoilModel {
    /// Construct with the default multiplier (3.0) and center-of-force 2/3.
    pub fn new(name: &str, phi_deg: f64, rho: f64) -> Self {
        SoilModel {
            name: name.to_string(),
            friction_angle_phi: phi_deg,
            bulk_density_rho: rho,
            resistance_multiplier_mp: 3.0,
            center_of_force_fraction_cf: 2.0 / 3.0,
        }
    }

    /// Fine-medium beach sand. phi and rho are documented assumptions; the
    /// multiplier is calibrated so the large spike holds 2 kN at 0.5 m.
    pub fn beach_sand() -> Self {
        let mut s = SoilModel::new("beach_sand", 35.0, 1600.0);
        s.resistance_multiplier_mp = preset_mp(35.0, 1600.0);
        s
    }

    /// Fine quarry stockpile material, same bench calibration.
    pub fn quarry_fine() -> Self {
        let mut s = SoilModel::new("quarry_fine", 38.0, 1700.0);
        s.resistance_multiplier_mp = preset_mp(38.0, 1700.0);
        s
    }

    /// Coarse quarry sand with small stones, same bench calibration.
    pub fn quarry_coarse() -> Self {
        let mut s = SoilModel::new("quarry_coarse", 40.0, 1800.0);
        s.resistance_multiplier_mp = preset_mp(40.0, 1800.0);
        s
    }

    /// Look a preset up by name.
    pub fn preset(name: &str) -> Option<SoilModel> {
        match name {
            "beach_sand" => Some(SoilModel::beach_sand()),
            "quarry_fine" => Some(SoilModel::quarry_fine()),
            "quarry_coarse" => Some(SoilModel::quarry_coarse()),
            _ => None,
        }
    }

    pub const PRESET_NAMES: [&'static str; 3] = ["beach_sand", "quarry_fine", "quarry_coarse"];
}

/// Gravitational environment.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Environment {
    /// Gravitational acceleration [m/s^2].
    pub gravity_g: f64,
}

impl Environment {
    pub const STANDARD_GRAVITY: f64 = 9.81;

    pub fn lunar() -> Self {
        Environment {
            gravity_g: Environment::STANDARD_GRAVITY / 6.0,
        }
    }
}

impl Default for Environment {
    fn default() -> Self {
        Environment {
            gravity_g: Environment::STANDARD_GRAVITY,
        }
    }
}

/// The crawler. Defaults reproduce the 40 kg field demonstrator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VehicleConfig {
    /// Total mass [kg].
    pub mass: f64,
    /// Center-of-mass height above ground [m].
    pub com_height: f64,
    /// Support track width for roll stability [m] (large-spike spacing).
    pub track_width: f64,
    /// Overall length without spikes [m].
    pub total_length: f64,
    /// Carriage travel per half cycle [m].
    pub stroke: f64,
    /// Blade width [m] (metadata).
    pub blade_width: f64,
    /// Blade height [m] (metadata).
    pub blade_height: f64,
    /// Mass fraction of frame 1 (blade + small spikes).
    pub frame1_mass_fraction: f64,
    /// Peak electrical power [W].
    pub peak_power: f64,
    /// Drivetrain efficiency.
    pub drivetrain_efficiency_eta: f64,
    /// Set carriage speed [m/s].
    pub speed: f64,
    /// Front (frame 1) spike class.
    pub front_spikes: SpikeDesign,
    /// Rear (frame 2) spike class.
    pub rear_spikes: SpikeDesign,
    /// Depth-equalizer actuator between the spikes of a pair.
    pub depth_equalizer: bool,
}

impl Default for VehicleConfig {
    fn default() -> Self {
        VehicleConfig {
            mass: 40.0,
            com_height: 0.10,
            track_width: 0.55,
            total_length: 2.2,
            stroke: 1.15,
            blade_width: 0.80,
            blade_height: 0.40,
            frame1_mass_fraction: 0.5,
            peak_power: 250.0,
            drivetrain_efficiency_eta: 0.6,
            speed: 0.10,
            front_spikes: SpikeDesign::small(),
            rear_spikes: SpikeDesign::large(),
            depth_equalizer: false,
        }
    }
}

impl VehicleConfig {
    /// Spike class for a given spike id.
    pub fn spikes_for(&self, id: SpikeId) -> &SpikeDesign {
        if id.is_front() {
            &self.front_spikes
        } else {
            &self.rear_spikes
        }
    }
}

/// How the vehicle is oriented on the slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeadingMode {
    /// Following the contour: roll = slope, pitch = 0.
    Contour,
    /// Diagonally up: both pitch and roll between 0 and slope.
    Diagonal,
    /// Straight up the fall line: pitch = slope, roll = 0.
    Uphill,
}

impl std::fmt::Display for HeadingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HeadingMode::Contour => "contour",
            HeadingMode::Diagonal => "diagonal",
            HeadingMode::Uphill => "uphill",
        })
    }
}

/// A terrain patch: slope, heading, local unevenness under each spike and
/// the path length to clear.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TerrainPatch {
    /// Terrain slope [deg].
    pub slope_deg: f64,
    pub heading_mode: HeadingMode,
    /// Override for the derived pitch [deg].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pitch_deg: Option<f64>,
    /// Override for the derived roll [deg].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roll_deg: Option<f64>,
    /// Local ground elevation deviation per spike [m]; positive means the
    /// ground is locally lower, deepening that spike's engagement.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub per_spike_surface_offsets: BTreeMap<SpikeId, f64>,
    /// Path length to clear [m].
    pub path_length: f64,
}

impl TerrainPatch {
    pub fn flat(path_length: f64) -> Self {
        TerrainPatch {
            slope_deg: 0.0,
            heading_mode: HeadingMode::Contour,
            pitch_deg: None,
            roll_deg: None,
            per_spike_surface_offsets: BTreeMap::new(),
            path_length,
        }
    }

    pub fn slope(slope_deg: f64, heading_mode: HeadingMode, path_length: f64) -> Self {
        TerrainPatch {
            slope_deg,
            heading_mode,
            pitch_deg: None,
            roll_deg: None,
            per_spike_surface_offsets: BTreeMap::new(),
            path_length,
        }
    }

    /// Vehicle pitch [deg]: override, or derived from slope and heading.
    pub fn effective_pitch(&self) -> f64 {
        if let Some(p) = self.pitch_deg {
            return p;
        }
        let s = self.slope_deg.to_radians();
        match self.heading_mode {
            HeadingMode::Contour => 0.0,
            HeadingMode::Uphill => self.slope_deg,
            HeadingMode::Diagonal => (s.sin() * std::f64::consts::FRAC_1_SQRT_2).asin().to_degrees(),
        }
    }

    /// Vehicle roll [deg]: override, or derived from slope and heading.
    pub fn effective_roll(&self) -> f64 {
        if let Some(r) = self.roll_deg {
            return r;
        }
        let s = self.slope_deg.to_radians();
        match self.heading_mode {
            HeadingMode::Contour => self.slope_deg,
            HeadingMode::Uphill => 0.0,
            HeadingMode::Diagonal => (s.sin() * std::f64::consts::FRAC_1_SQRT_2).asin().to_degrees(),
        }
    }

    pub fn surface_offset(&self, id: SpikeId) -> f64 {
        self.per_spike_surface_offsets.get(&id).copied().unwrap_or(0.0)
    }
}

/// A complete trial definition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub label: String,
    pub vehicle: VehicleConfig,
    pub soil: SoilModel,
    pub environment: Environment,
    pub terrain: TerrainPatch,
    /// Working draft demand at the blade [N].
    pub blade_draft_demand: f64,
}

impl Scenario {
    /// Default machine on flat calibrated beach sand, 1.5 kN blade demand.
    pub fn flat_beach() -> Self {
        Scenario {
            label: "flat_beach".to_string(),
            vehicle: VehicleConfig::default(),
            soil: SoilModel::beach_sand(),
            environment: Environment::default(),
            terrain: TerrainPatch::flat(10.0),
            blade_draft_demand: 1500.0,
        }
    }
}

/// Vehicle weight W = m*g [N].
pub fn weight(vehicle: &VehicleConfig, env: &Environment) -> f64 {
    vehicle.mass * env.gravity_g
}

fn check(errors: &mut Vec<FieldError>, ok: bool, field: &str, message: &str) {
    if !ok {
        errors.push(FieldError {
            field: field.to_string(),
            message: message.to_string(),
        });
    }
}

fn validate_spikes(errors: &mut Vec<FieldError>, s: &SpikeDesign, prefix: &str) {
    check(errors, s.radius_r > 0.0, &format!("{prefix}.radius_r"), "must be > 0");
    check(
        errors,
        s.diameter_b > 0.0 && s.diameter_b < s.radius_r,
        &format!("{prefix}.diameter_b"),
        "must lie in (0, radius_r)",
    );
    check(
        errors,
        s.rake_alpha > 0.0 && s.rake_alpha < 90.0,
        &format!("{prefix}.rake_alpha"),
        "must lie in (0, 90) deg",
    );
    check(
        errors,
        s.hinge_height_h >= 0.0,
        &format!("{prefix}.hinge_height_h"),
        "must be >= 0",
    );
    check(
        errors,
        s.max_depth > 0.0 && s.max_depth < s.radius_r - s.hinge_height_h,
        &format!("{prefix}.max_depth"),
        "must lie in (0, radius_r - hinge_height_h)",
    );
    check(
        errors,
        s.pair_spacing > 0.0,
        &format!("{prefix}.pair_spacing"),
        "must be > 0",
    );
}

/// Validate every invariant; returns the scenario unchanged when all hold,
/// otherwise one error per violated field.
pub fn validate(scenario: Scenario) -> Result<Scenario, InvalidConfig> {
    let mut errors = Vec::new();
    let v = &scenario.vehicle;

    check(&mut errors, v.mass > 0.0, "vehicle.mass", "must be > 0");
    check(&mut errors, v.com_height > 0.0, "vehicle.com_height", "must be > 0");
    check(&mut errors, v.track_width > 0.0, "vehicle.track_width", "must be > 0");
    check(
        &mut errors,
        v.frame1_mass_fraction > 0.0 && v.frame1_mass_fraction < 1.0,
        "vehicle.frame1_mass_fraction",
        "must lie in (0, 1)",
    );
    check(
        &mut errors,
        v.drivetrain_efficiency_eta > 0.0 && v.drivetrain_efficiency_eta <= 1.0,
        "vehicle.drivetrain_efficiency_eta",
        "must lie in (0, 1]",
    );
    check(&mut errors, v.speed > 0.0, "vehicle.speed", "must be > 0");
    check(&mut errors, v.peak_power >= 0.0, "vehicle.peak_power", "must be >= 0");
    check(
        &mut errors,
        v.stroke > 0.0 && v.stroke < v.total_length,
        "vehicle.stroke",
        "must lie in (0, total_length)",
    );
    validate_spikes(&mut errors, &v.front_spikes, "vehicle.front_spikes");
    validate_spikes(&mut errors, &v.rear_spikes, "vehicle.rear_spikes");

    let s = &scenario.soil;
    check(
        &mut errors,
        s.friction_angle_phi >= 0.0 && s.friction_angle_phi < 60.0,
        "soil.friction_angle_phi",
        "must lie in [0, 60) deg",
    );
    check(&mut errors, s.bulk_density_rho > 0.0, "soil.bulk_density_rho", "must be > 0");
    check(
        &mut errors,
        s.resistance_multiplier_mp > 0.0,
        "soil.resistance_multiplier_mp",
        "must be > 0",
    );
    check(
        &mut errors,
        s.center_of_force_fraction_cf > 0.0 && s.center_of_force_fraction_cf <= 1.0,
        "soil.center_of_force_fraction_cf",
        "must lie in (0, 1]",
    );

    check(
        &mut errors,
        scenario.environment.gravity_g > 0.0,
        "environment.gravity_g",
        "must be > 0",
    );

    let t = &scenario.terrain;
    check(
        &mut errors,
        t.slope_deg >= 0.0 && t.slope_deg < 90.0,
        "terrain.slope_deg",
        "must lie in [0, 90) deg",
    );
    check(
        &mut errors,
        t.effective_pitch().abs() < 90.0,
        "terrain.pitch_deg",
        "effective pitch must be < 90 deg in magnitude",
    );
    check(
        &mut errors,
        t.effective_roll().abs() < 90.0,
        "terrain.roll_deg",
        "effective roll must be < 90 deg in magnitude",
    );
    check(
        &mut errors,
        t.path_length >= 0.0 && t.path_length.is_finite(),
        "terrain.path_length",
        "must be finite and >= 0",
    );
    for (id, off) in &t.per_spike_surface_offsets {
        let max_depth = v.spikes_for(*id).max_depth;
        check(
            &mut errors,
            off.is_finite() && off.abs() < max_depth,
            &format!("terrain.per_spike_surface_offsets.{id}"),
            "magnitude must be below the spike's max_depth",
        );
    }

    check(
        &mut errors,
        scenario.blade_draft_demand >= 0.0 && scenario.blade_draft_demand.is_finite(),
        "blade_draft_demand",
        "must be finite and >= 0",
    );

    if errors.is_empty() {
        Ok(scenario)
    } else {
        Err(InvalidConfig(errors))
    }
}
