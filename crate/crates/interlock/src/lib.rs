//! Quasi-static mobility simulator for push-pull crawlers that gain
//! traction from interlocking ground spikes.
//!
//! A crawler of this kind anchors a pair of narrow hinged spikes in
//! granular ground and reacts its working draft against the deeper soil
//! layers instead of surface friction, which lets a light machine pull
//! several times its own weight. This crate models the mechanism
//! quasi-statically:
//!
//! - [`soil`] — lateral resistance of a narrow spike and the
//!   self-regulating penetration depth where resistance balances draft;
//! - [`spike`] — thrust-angle geometry, the center-of-force correction,
//!   the penetration window and the hinge lift force;
//! - [`stability`] — slope force decomposition, pull/weight limits,
//!   lift-off and rollover margins;
//! - [`gait`] — the alternating push-pull half-cycle state machine that
//!   turns force balances into trial outcomes;
//! - [`suite`] — the bundled slope-trial scenario suite with observed
//!   outcomes;
//! - [`sweep`] — parameter sweeps; [`scenario`]/[`report`] — file formats.
//!
//! Run `cargo run -p interlock -- suite` for the trial table, or see the
//! `examples/` directory for one runnable entry point per capability.

pub mod cli;
pub mod error;
pub mod gait;
pub mod model;
pub mod report;
pub mod scenario;
pub mod soil;
pub mod spike;
pub mod stability;
pub mod suite;
pub mod sweep;

pub use error::{DomainError, FieldError, InvalidConfig};
pub use gait::{
    draft_capacity, phase_force_balance, run_scenario, run_scenario_with, veer_update, GaitState,
    GaitTuning, HalfCycleBalance, Outcome, Phase, TrialEvent, TrialEventKind, TrialReport,
    VeerClass,
};
pub use model::{
    validate, weight, Environment, HeadingMode, Scenario, SoilModel, SpikeDesign, SpikeId,
    TerrainPatch, VehicleConfig,
};
pub use soil::{
    calibrate_multiplier, capacity_at_max_depth, lateral_resistance, passive_coefficient,
    penetration_depth, solve_depth, PenetrationSolution,
};
pub use spike::{
    effective_thrust_angle, lift_force, penetration_window, thrust_angle, SpikeState, WindowStatus,
};
pub use stability::{
    lift_off_check, max_thrust_angle_for_pull_weight, pull_weight_ratio, rollover_tip_angle,
    slope_decomposition, stability_report, LimitingFactor, StabilityReport,
};
