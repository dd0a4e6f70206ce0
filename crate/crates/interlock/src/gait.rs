//! Discrete half-cycle state machine for the alternating two-frame
//! push-pull locomotion.
//!
//! Each half cycle is a quasi-static force balance: the anchored pair
//! penetrates to its self-regulating depth under the demanded draft, the
//! thrust-angle geometry turns that draft into hinge lift, and the
//! cross-slope load is checked against the anchored pair's lateral
//! holding. Progress, veer drift and blocking events fall out of the
//! balance; there are no continuous dynamics.

use serde::{Deserialize, Serialize};

use crate::error::{DomainError, InvalidConfig};
use crate::model::{validate, weight, Scenario, SpikeId};
use crate::soil;
use crate::spike::{self, SpikeState, WindowStatus};
use crate::stability::{
    self, front_lift_reference_load, rear_lift_reference_load, slope_decomposition, StabilityReport,
};

/// Which frame is anchored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    /// Rear large spikes anchored; the blade frame advances.
    PushBlade,
    /// Front small spikes anchored; the drive frame is pulled up.
    PullFrame,
}

impl Phase {
    pub fn anchored_ids(self) -> [SpikeId; 2] {
        match self {
            Phase::PushBlade => [SpikeId::RearLeft, SpikeId::RearRight],
            Phase::PullFrame => [SpikeId::FrontLeft, SpikeId::FrontRight],
        }
    }

    pub fn other(self) -> Phase {
        match self {
            Phase::PushBlade => Phase::PullFrame,
            Phase::PullFrame => Phase::PushBlade,
        }
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Phase::PushBlade => "push_blade",
            Phase::PullFrame => "pull_frame",
        })
    }
}

/// Kinematic state of the gait machine between half cycles.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaitState {
    pub phase: Phase,
    /// Drive-frame position along the central bar, in [0, stroke] [m].
    pub carriage_position: f64,
    /// Forward progress along the intended path [m]; non-decreasing.
    pub vehicle_position: f64,
    /// Accumulated downhill drift [m].
    pub lateral_offset: f64,
    /// Track bearing error from the accumulated drift [deg].
    pub heading_error_deg: f64,
    /// 1-based full-cycle counter.
    pub cycle_index: u32,
}

impl GaitState {
    /// Ready to push: carriage forward, nothing covered yet.
    pub fn initial() -> Self {
        GaitState {
            phase: Phase::PushBlade,
            carriage_position: 0.0,
            vehicle_position: 0.0,
            lateral_offset: 0.0,
            heading_error_deg: 0.0,
            cycle_index: 1,
        }
    }

    fn drift(&mut self, delta: f64) {
        self.lateral_offset += delta;
        if self.vehicle_position > 0.0 {
            self.heading_error_deg = self
                .lateral_offset
                .atan2(self.vehicle_position)
                .to_degrees();
        }
    }

    /// A successful push advances the vehicle one stroke and returns the
    /// carriage to the front of the bar.
    fn advance_push(&mut self, stroke: f64) {
        self.vehicle_position += stroke;
        self.carriage_position = 0.0;
        self.phase = Phase::PullFrame;
    }

    /// A successful pull walks the carriage back up and closes the cycle.
    fn advance_pull(&mut self, stroke: f64) {
        self.carriage_position = stroke;
        self.cycle_index += 1;
        self.phase = Phase::PushBlade;
    }
}

/// Calibration knobs of the gait model. Defaults are pinned by the
/// bundled scenario suite.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GaitTuning {
    /// Sliding drag coefficient on the moving frame's normal load.
    pub mu_drag: f64,
    /// Veer drift gain.
    pub k_v: f64,
    /// Exponent of the lateral-utilization slip law.
    pub veer_exponent: f64,
    /// Vertical climb force per unit lateral load at full utilization.
    pub lateral_climb_coefficient: f64,
    /// Lateral offset that ends a trial [m].
    pub veer_off_threshold_m: f64,
    /// Consecutive failed attempts at one half-cycle before blocking.
    pub blocking_attempts: u32,
    /// Use the tip thrust angle instead of the center-of-force angle for
    /// lift (conservative analysis).
    pub strict_gamma: bool,
    /// Engagement slack left by the depth-equalizer actuator [m].
    pub equalizer_slack_m: f64,
}

impl Default for GaitTuning {
    fn default() -> Self {
        GaitTuning {
            mu_drag: 0.5,
            k_v: 0.2,
            veer_exponent: 2.0,
            lateral_climb_coefficient: 1.0,
            veer_off_threshold_m: 1.0,
            blocking_attempts: 3,
            strict_gamma: false,
            equalizer_slack_m: 0.02,
        }
    }
}

/// Peak sustainable draft at the set carriage speed: eta * P / v [N].
pub fn draft_capacity(power_w: f64, speed: f64, eta: f64) -> Result<f64, DomainError> {
    if speed <= 0.0 || !speed.is_finite() {
        return Err(DomainError::new(
            "draft_capacity",
            format!("speed {speed} m/s must be > 0"),
        ));
    }
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(DomainError::new(
            "draft_capacity",
            format!("efficiency {eta} outside (0, 1]"),
        ));
    }
    if power_w < 0.0 {
        return Err(DomainError::new(
            "draft_capacity",
            format!("power {power_w} W must be >= 0"),
        ));
    }
    Ok(eta * power_w / speed)
}

/// Veer classification of one half cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VeerClass {
    None,
    Slow,
    Fast,
}

/// Downhill drift of one half cycle from the lateral-utilization slip law
/// delta = k_v * Lambda^n * stroke, capped at one stroke. Zero anchored
/// capacity with a nonzero lateral load counts as full slip.
pub fn veer_update(
    lateral_load: f64,
    anchored_capacity: f64,
    stroke: f64,
    tuning: &GaitTuning,
) -> (f64, VeerClass) {
    let lateral = lateral_load.abs();
    if lateral == 0.0 {
        return (0.0, VeerClass::None);
    }
    let lambda = if anchored_capacity > 0.0 {
        lateral / anchored_capacity
    } else {
        f64::INFINITY
    };
    let drift = stroke * (tuning.k_v * lambda.powf(tuning.veer_exponent)).min(1.0);
    let class = if lambda >= 1.0 { VeerClass::Fast } else { VeerClass::Slow };
    (drift, class)
}

/// Quasi-static force balance of one half cycle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfCycleBalance {
    pub phase: Phase,
    /// Requested draft: blade demand plus slope term (push) or frame drag
    /// plus slope term (pull) [N].
    pub demand: f64,
    /// Draft actually reacted by the anchors: min(demand, capacity) [N].
    pub applied_draft: f64,
    /// Drivetrain limit at the set speed [N].
    pub power_capacity: f64,
    /// Demand exceeds the drivetrain limit (speed collapses).
    pub stall: bool,
    /// Total anchored-pair capacity under the current geometry [N].
    pub anchor_capacity: f64,
    /// Demand exceeds the anchor capacity (spikes drag).
    pub anchor_saturated: bool,
    /// The slope component that must be overcome for any progress [N].
    pub gravity_hold: f64,
    /// No net progress possible: the anchors cannot even hold the slope term.
    pub immobile: bool,
    pub spikes: [SpikeState; 2],
    /// Cross-track load on the vehicle [N].
    pub lateral_load: f64,
    /// Lateral load over the anchored pair's max-depth holding.
    pub lateral_utilization: f64,
    /// Hinge lift from the draft shares [N].
    pub draft_lift: f64,
    /// Climb force of the laterally plowing anchored pair [N].
    pub climb_lift: f64,
    /// Total upward force on the anchored frame [N].
    pub total_lift: f64,
    /// Normal-load reference the lift is checked against [N].
    pub frame_load: f64,
    /// frame_load - total_lift [N].
    pub lift_margin: f64,
    pub lifted: bool,
    /// Drift this half cycle would add [m].
    pub drift: f64,
    pub veer: VeerClass,
}

struct PairSolution {
    depths: [f64; 2],
    shares: [f64; 2],
    capacity: f64,
}

/// Depths and shares of the anchored pair under `demand`, honoring the
/// depth-equalizer coupling when enabled.
fn solve_pair(
    design: &crate::model::SpikeDesign,
    constant: f64,
    offsets: [f64; 2],
    demand: f64,
    equalizer: bool,
    slack: f64,
) -> PairSolution {
    let resistance = |d: f64| 0.5 * constant * d * d;
    let max = design.max_depth;
    let delta = offsets[1] - offsets[0];
    if equalizer && delta.abs() > slack {
        // The actuator caps the deeper-engaged spike at the shallower
        // engagement plus slack; the freed share transfers to the other
        // spike. Solve the free spike's depth by bisection on the coupled
        // total resistance.
        let (free, capped) = if delta > 0.0 { (0usize, 1usize) } else { (1usize, 0usize) };
        let lag = delta.abs() - slack;
        let capped_depth = |d_free: f64| (d_free - lag).clamp(0.0, max);
        let total = |d_free: f64| resistance(d_free) + resistance(capped_depth(d_free));
        let capacity = total(max);
        let applied = demand.min(capacity);
        let (mut lo, mut hi) = (0.0f64, max);
        if total(max) > applied {
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if total(mid) < applied {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        } else {
            lo = max;
            hi = max;
        }
        let d_free = 0.5 * (lo + hi);
        let d_capped = capped_depth(d_free);
        let mut depths = [0.0; 2];
        let mut shares = [0.0; 2];
        depths[free] = d_free;
        depths[capped] = d_capped;
        shares[free] = resistance(d_free);
        shares[capped] = resistance(d_capped);
        PairSolution {
            depths,
            shares,
            capacity,
        }
    } else {
        let capacity = 2.0 * resistance(max);
        let applied = demand.min(capacity);
        let share = 0.5 * applied;
        let sol = soil::solve_depth(resistance, max, share);
        PairSolution {
            depths: [sol.depth_d; 2],
            shares: [share; 2],
            capacity,
        }
    }
}

/// Evaluate the static force balance of one half cycle.
pub fn phase_force_balance(
    phase: Phase,
    scenario: &Scenario,
    tuning: &GaitTuning,
) -> Result<HalfCycleBalance, DomainError> {
    let vehicle = &scenario.vehicle;
    let env = &scenario.environment;
    let terrain = &scenario.terrain;
    let w = weight(vehicle, env);
    let loads = slope_decomposition(w, terrain.effective_pitch(), terrain.effective_roll())?;
    let f1 = vehicle.frame1_mass_fraction;

    let (demand, gravity_hold, frame_load) = match phase {
        Phase::PushBlade => {
            let demand = (scenario.blade_draft_demand + loads.along_track).max(0.0);
            let hold = loads.along_track.max(0.0);
            (demand, hold, rear_lift_reference_load(vehicle, loads.normal))
        }
        Phase::PullFrame => {
            let moving_normal = (1.0 - f1) * loads.normal;
            let demand =
                (tuning.mu_drag * moving_normal + (1.0 - f1) * loads.along_track).max(0.0);
            let hold = ((1.0 - f1) * loads.along_track).max(0.0);
            (demand, hold, front_lift_reference_load(vehicle, loads.normal))
        }
    };

    let ids = phase.anchored_ids();
    let design = vehicle.spikes_for(ids[0]);
    let constant = soil::resistance_constant(&scenario.soil, design, env)?;
    let offsets = [terrain.surface_offset(ids[0]), terrain.surface_offset(ids[1])];
    let pair = solve_pair(
        design,
        constant,
        offsets,
        demand,
        vehicle.depth_equalizer,
        tuning.equalizer_slack_m,
    );
    let applied = pair.shares[0] + pair.shares[1];
    let anchor_saturated = demand > pair.capacity;

    let cf = scenario.soil.center_of_force_fraction_cf;
    let mut spikes = [SpikeState {
        spike_id: ids[0],
        depth: 0.0,
        surface_offset: 0.0,
        gamma: 0.0,
        gamma_eff: 0.0,
        draft_share: 0.0,
        lift: 0.0,
        saturated: false,
        window_status: WindowStatus::InWindow,
    }; 2];
    let mut draft_lift = 0.0;
    for i in 0..2 {
        let depth = pair.depths[i];
        let off = offsets[i];
        let gamma = spike::thrust_angle(design, depth, off)?;
        let gamma_eff = spike::effective_thrust_angle(design, depth, off, cf)?;
        let used = if tuning.strict_gamma { gamma } else { gamma_eff };
        let lift = spike::lift_force(pair.shares[i], used)?;
        draft_lift += lift;
        spikes[i] = SpikeState {
            spike_id: ids[i],
            depth,
            surface_offset: off,
            gamma,
            gamma_eff,
            draft_share: pair.shares[i],
            lift,
            saturated: anchor_saturated && depth >= design.max_depth,
            window_status: spike::penetration_window(design.rake_alpha, gamma),
        };
    }

    // Lateral holding of the anchored pair at full engagement; the same
    // resistance law applies cross-track (direction-isotropic assumption).
    let lateral_capacity = constant * design.max_depth * design.max_depth; // 2 * F(max)
    let lateral = loads.lateral;
    let lateral_utilization = if lateral.abs() == 0.0 {
        0.0
    } else if lateral_capacity > 0.0 {
        lateral.abs() / lateral_capacity
    } else {
        f64::INFINITY
    };
    // A partially mobilized pair plows and rides up; a fully overloaded
    // pair slips instead and the drift law takes over.
    let climb_lift = if lateral_utilization > 0.0 && lateral_utilization < 1.0 {
        tuning.lateral_climb_coefficient * lateral_utilization * lateral.abs()
    } else {
        0.0
    };
    let total_lift = draft_lift + climb_lift;
    let check = stability::lift_off_check(frame_load, total_lift);

    let (drift, veer) = veer_update(lateral, lateral_capacity, vehicle.stroke, tuning);
    let power_capacity = draft_capacity(
        vehicle.peak_power,
        vehicle.speed,
        vehicle.drivetrain_efficiency_eta,
    )?;

    Ok(HalfCycleBalance {
        phase,
        demand,
        applied_draft: applied,
        power_capacity,
        stall: demand > power_capacity,
        anchor_capacity: pair.capacity,
        anchor_saturated,
        gravity_hold,
        immobile: gravity_hold > 0.0 && applied <= gravity_hold,
        spikes,
        lateral_load: lateral,
        lateral_utilization,
        draft_lift,
        climb_lift,
        total_lift,
        frame_load,
        lift_margin: check.margin,
        lifted: check.lifted,
        drift,
        veer,
    })
}

/// Event kinds observed during a trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialEventKind {
    LiftOffFront,
    LiftOffRear,
    AnchorSaturated,
    Stall,
    VeerSlow,
    VeerFast,
    WindowViolation,
}

impl std::fmt::Display for TrialEventKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TrialEventKind::LiftOffFront => "lift_off_front",
            TrialEventKind::LiftOffRear => "lift_off_rear",
            TrialEventKind::AnchorSaturated => "anchor_saturated",
            TrialEventKind::Stall => "stall",
            TrialEventKind::VeerSlow => "veer_slow",
            TrialEventKind::VeerFast => "veer_fast",
            TrialEventKind::WindowViolation => "window_violation",
        })
    }
}

/// One recorded event with the per-spike states at that moment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialEvent {
    pub cycle_index: u32,
    pub phase: Phase,
    pub kind: TrialEventKind,
    pub message: String,
    pub detail: Vec<SpikeState>,
}

/// Trial outcome classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    PathCleared,
    BlockedByLift,
    BlockedByStall,
    VeeredOff,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::PathCleared => "path_cleared",
            Outcome::BlockedByLift => "blocked_by_lift",
            Outcome::BlockedByStall => "blocked_by_stall",
            Outcome::VeeredOff => "veered_off",
        })
    }
}

/// Log entry for one half-cycle attempt.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfCycleLog {
    pub cycle_index: u32,
    pub phase: Phase,
    /// 1-based attempt number at this half cycle.
    pub attempt: u32,
    pub demand: f64,
    pub applied_draft: f64,
    pub spikes: [SpikeState; 2],
    pub lateral_load: f64,
    pub lateral_utilization: f64,
    pub climb_lift: f64,
    pub total_lift: f64,
    pub frame_load: f64,
    pub lift_margin: f64,
    pub drift: f64,
    /// Cumulative lateral offset after this attempt [m].
    pub lateral_offset: f64,
    pub succeeded: bool,
}

/// Full trial record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub label: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome_detail: Option<String>,
    /// Forward distance covered [m].
    pub distance_covered: f64,
    /// Final lateral offset [m].
    pub lateral_offset: f64,
    /// Full cycles entered.
    pub cycles: u32,
    /// Half-cycle attempts executed.
    pub half_cycle_attempts: u32,
    pub events: Vec<TrialEvent>,
    pub per_cycle_log: Vec<HalfCycleLog>,
    pub summary: StabilityReport,
}

/// Run a scenario to completion with default tuning.
pub fn run_scenario(scenario: &Scenario, max_cycles: u32) -> Result<TrialReport, InvalidConfig> {
    run_scenario_with(scenario, max_cycles, &GaitTuning::default())
}

/// Run a scenario to completion. Deterministic: identical inputs produce
/// a bit-identical report.
pub fn run_scenario_with(
    scenario: &Scenario,
    max_cycles: u32,
    tuning: &GaitTuning,
) -> Result<TrialReport, InvalidConfig> {
    let scenario = validate(scenario.clone())?;
    assert!(max_cycles >= 1, "max_cycles must be >= 1");

    let mut events: Vec<TrialEvent> = Vec::new();
    let mut log: Vec<HalfCycleLog> = Vec::new();
    let mut state = GaitState::initial();
    let mut attempt_at_half: u32 = 1;
    let mut consecutive_failures: u32 = 0;
    let mut last_failure: Option<TrialEventKind> = None;
    let mut half_cycle_attempts: u32 = 0;

    let mut min_front_margin = f64::INFINITY;
    let mut min_rear_margin = f64::INFINITY;
    let mut min_anchor_margin = f64::INFINITY;

    let outcome;
    let mut outcome_detail = None;

    'run: loop {
        if state.cycle_index > max_cycles {
            outcome = Outcome::BlockedByStall;
            outcome_detail = Some(format!("max_cycles ({max_cycles}) exhausted"));
            break 'run;
        }
        half_cycle_attempts += 1;
        let phase = state.phase;
        let cycle = state.cycle_index;

        let balance = match phase_force_balance(phase, &scenario, tuning) {
            Ok(b) => b,
            Err(e) => {
                // Geometry became infeasible; report and count as a failed
                // attempt at this half cycle.
                events.push(TrialEvent {
                    cycle_index: cycle,
                    phase,
                    kind: TrialEventKind::WindowViolation,
                    message: format!("infeasible geometry: {e}"),
                    detail: Vec::new(),
                });
                consecutive_failures += 1;
                last_failure = Some(TrialEventKind::WindowViolation);
                if consecutive_failures >= tuning.blocking_attempts {
                    outcome = Outcome::BlockedByStall;
                    outcome_detail = Some("repeated infeasible geometry".to_string());
                    break 'run;
                }
                attempt_at_half += 1;
                continue;
            }
        };

        match phase {
            Phase::PushBlade => min_rear_margin = min_rear_margin.min(balance.lift_margin),
            Phase::PullFrame => min_front_margin = min_front_margin.min(balance.lift_margin),
        }
        min_anchor_margin = min_anchor_margin.min(balance.anchor_capacity - balance.demand);

        if balance.stall {
            events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind: TrialEventKind::Stall,
                message: format!(
                    "demand {:.1} N exceeds drivetrain capacity {:.1} N at set speed",
                    balance.demand, balance.power_capacity
                ),
                detail: balance.spikes.to_vec(),
            });
        }
        if balance.anchor_saturated {
            events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind: TrialEventKind::AnchorSaturated,
                message: format!(
                    "demand {:.1} N exceeds anchor capacity {:.1} N; spikes drag",
                    balance.demand, balance.anchor_capacity
                ),
                detail: balance.spikes.to_vec(),
            });
        }
        for s in &balance.spikes {
            if s.window_status != WindowStatus::InWindow && s.draft_share > 0.0 {
                events.push(TrialEvent {
                    cycle_index: cycle,
                    phase,
                    kind: TrialEventKind::WindowViolation,
                    message: format!(
                        "{}: rake minus thrust angle {:.1} deg outside (15, 35)",
                        s.spike_id,
                        scenario.vehicle.spikes_for(s.spike_id).rake_alpha - s.gamma
                    ),
                    detail: vec![*s],
                });
            }
        }
        match balance.veer {
            VeerClass::Slow => events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind: TrialEventKind::VeerSlow,
                message: format!(
                    "lateral utilization {:.2}; drift {:.3} m",
                    balance.lateral_utilization, balance.drift
                ),
                detail: balance.spikes.to_vec(),
            }),
            VeerClass::Fast => events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind: TrialEventKind::VeerFast,
                message: format!(
                    "anchored pair laterally overloaded (utilization {:.2}); drift {:.3} m",
                    balance.lateral_utilization, balance.drift
                ),
                detail: balance.spikes.to_vec(),
            }),
            VeerClass::None => {}
        }

        // Drift accrues whether or not the attempt succeeds: the frames
        // are loaded either way.
        state.drift(balance.drift);

        let failed_lift = balance.lifted;
        let failed_immobile = balance.immobile;
        let succeeded = !failed_lift && !failed_immobile;

        if failed_lift {
            let kind = match phase {
                Phase::PushBlade => TrialEventKind::LiftOffRear,
                Phase::PullFrame => TrialEventKind::LiftOffFront,
            };
            events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind,
                message: format!(
                    "hinge lift {:.1} N exceeds frame load {:.1} N",
                    balance.total_lift, balance.frame_load
                ),
                detail: balance.spikes.to_vec(),
            });
            last_failure = Some(kind);
        } else if failed_immobile {
            events.push(TrialEvent {
                cycle_index: cycle,
                phase,
                kind: TrialEventKind::Stall,
                message: format!(
                    "anchors hold only {:.1} N against a {:.1} N slope load; no progress",
                    balance.applied_draft, balance.gravity_hold
                ),
                detail: balance.spikes.to_vec(),
            });
            last_failure = Some(TrialEventKind::Stall);
        }

        if succeeded {
            match phase {
                Phase::PushBlade => state.advance_push(scenario.vehicle.stroke),
                Phase::PullFrame => state.advance_pull(scenario.vehicle.stroke),
            }
        }

        log.push(HalfCycleLog {
            cycle_index: cycle,
            phase,
            attempt: attempt_at_half,
            demand: balance.demand,
            applied_draft: balance.applied_draft,
            spikes: balance.spikes,
            lateral_load: balance.lateral_load,
            lateral_utilization: balance.lateral_utilization,
            climb_lift: balance.climb_lift,
            total_lift: balance.total_lift,
            frame_load: balance.frame_load,
            lift_margin: balance.lift_margin,
            drift: balance.drift,
            lateral_offset: state.lateral_offset,
            succeeded,
        });

        if state.lateral_offset.abs() > tuning.veer_off_threshold_m {
            outcome = Outcome::VeeredOff;
            outcome_detail = Some(format!(
                "lateral offset {:.3} m beyond {:.2} m threshold",
                state.lateral_offset, tuning.veer_off_threshold_m
            ));
            break 'run;
        }

        if succeeded {
            consecutive_failures = 0;
            attempt_at_half = 1;
            if state.vehicle_position >= scenario.terrain.path_length {
                outcome = Outcome::PathCleared;
                break 'run;
            }
        } else {
            consecutive_failures += 1;
            attempt_at_half += 1;
            if consecutive_failures >= tuning.blocking_attempts {
                outcome = match last_failure {
                    Some(TrialEventKind::LiftOffFront) | Some(TrialEventKind::LiftOffRear) => {
                        Outcome::BlockedByLift
                    }
                    _ => Outcome::BlockedByStall,
                };
                outcome_detail = Some(format!(
                    "{} consecutive failed attempts in {phase}",
                    consecutive_failures
                ));
                break 'run;
            }
        }
    }

    // Worst-case margins observed over the run; static figures otherwise.
    let vehicle = &scenario.vehicle;
    let env = &scenario.environment;
    let ratio = stability::pull_weight_ratio(scenario.blade_draft_demand, vehicle, env);
    let max_gamma = if ratio > 0.0 {
        stability::max_thrust_angle_for_pull_weight(ratio).expect("positive ratio")
    } else {
        90.0
    };
    let tip = stability::rollover_tip_angle(vehicle).expect("validated com height");
    let rollover_margin = tip - scenario.terrain.effective_roll();
    if !min_front_margin.is_finite() || !min_rear_margin.is_finite() {
        // A phase that never ran contributes its static balance.
        if let Ok(b) = phase_force_balance(Phase::PullFrame, &scenario, tuning) {
            min_front_margin = min_front_margin.min(b.lift_margin);
            min_anchor_margin = min_anchor_margin.min(b.anchor_capacity - b.demand);
        }
        if let Ok(b) = phase_force_balance(Phase::PushBlade, &scenario, tuning) {
            min_rear_margin = min_rear_margin.min(b.lift_margin);
            min_anchor_margin = min_anchor_margin.min(b.anchor_capacity - b.demand);
        }
    }
    let summary = StabilityReport {
        pull_weight_ratio: ratio,
        max_gamma_allowed: max_gamma,
        rollover_tip_angle: tip,
        rollover_margin,
        lift_margin_front: min_front_margin,
        lift_margin_rear: min_rear_margin,
        anchor_margin: min_anchor_margin,
        limiting_factor: StabilityReport::classify(
            rollover_margin,
            min_front_margin,
            min_rear_margin,
            min_anchor_margin,
        ),
    };

    Ok(TrialReport {
        label: scenario.label.clone(),
        outcome,
        outcome_detail,
        distance_covered: state.vehicle_position,
        lateral_offset: state.lateral_offset,
        cycles: state.cycle_index,
        half_cycle_attempts,
        events,
        per_cycle_log: log,
        summary,
    })
}
