//! Property tests over the model's contract invariants.

use proptest::prelude::*;

use interlock::{
    effective_thrust_angle, lateral_resistance, lift_force, max_thrust_angle_for_pull_weight,
    penetration_depth, penetration_window, slope_decomposition, thrust_angle, Environment,
    SoilModel, SpikeDesign,
};

fn arb_soil() -> impl Strategy<Value = SoilModel> {
    (0.0..55.0f64, 1200.0..2200.0f64, 1.0..20.0f64).prop_map(|(phi, rho, mp)| {
        let mut s = SoilModel::new("prop", phi, rho);
        s.resistance_multiplier_mp = mp;
        s
    })
}

fn arb_spike() -> impl Strategy<Value = SpikeDesign> {
    (0.3..2.0f64, 0.005..0.05f64, 0.1..0.6f64).prop_map(|(r, b, depth_frac)| SpikeDesign {
        radius_r: r,
        diameter_b: b.min(0.9 * r),
        rake_alpha: 45.0,
        hinge_height_h: 0.0,
        max_depth: depth_frac * r,
        pair_spacing: 0.5,
    })
}

proptest! {
    /// penetration_depth(lateral_resistance(d*)) returns d* within 1e-6 m.
    #[test]
    fn penetration_round_trip(soil in arb_soil(), spike in arb_spike(), frac in 0.01..0.999f64) {
        let env = Environment::default();
        let d_star = frac * spike.max_depth;
        let f = lateral_resistance(&soil, &spike, d_star, &env).unwrap();
        let sol = penetration_depth(&soil, &spike, f, &env).unwrap();
        prop_assert!((sol.depth_d - d_star).abs() <= 1e-6);
        prop_assert!(!sol.saturated);
    }

    /// Larger draft never yields smaller depth.
    #[test]
    fn penetration_monotone(soil in arb_soil(), spike in arb_spike(), a in 0.0..5000.0f64, b in 0.0..5000.0f64) {
        let env = Environment::default();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let d_lo = penetration_depth(&soil, &spike, lo, &env).unwrap().depth_d;
        let d_hi = penetration_depth(&soil, &spike, hi, &env).unwrap().depth_d;
        prop_assert!(d_hi >= d_lo - 1e-12);
    }

    /// Resistance is zero at zero depth, increasing and convex in depth.
    #[test]
    fn resistance_shape(soil in arb_soil(), spike in arb_spike()) {
        let env = Environment::default();
        prop_assert_eq!(lateral_resistance(&soil, &spike, 0.0, &env).unwrap(), 0.0);
        let m = spike.max_depth;
        let f1 = lateral_resistance(&soil, &spike, 0.25 * m, &env).unwrap();
        let f2 = lateral_resistance(&soil, &spike, 0.5 * m, &env).unwrap();
        let f3 = lateral_resistance(&soil, &spike, m, &env).unwrap();
        prop_assert!(f1 < f2 && f2 < f3);
        // convexity: midpoint resistance below the chord
        prop_assert!(f2 < 0.5 * (f1 + f3) + 1e-9);
    }

    /// Depth scales as 1/sqrt(g) while unsaturated.
    #[test]
    fn gravity_scaling(soil in arb_soil(), spike in arb_spike(), frac in 0.01..0.15f64) {
        let env = Environment::default();
        let f = lateral_resistance(&soil, &spike, frac * spike.max_depth, &env).unwrap();
        let d1 = penetration_depth(&soil, &spike, f, &env).unwrap().depth_d;
        let d6 = penetration_depth(&soil, &spike, f, &Environment::lunar()).unwrap();
        prop_assume!(!d6.saturated);
        let ratio = d6.depth_d / d1;
        prop_assert!((ratio - 6.0f64.sqrt()).abs() / 6.0f64.sqrt() <= 1e-6);
    }

    /// Thrust angles increase strictly with depth; gamma_eff <= gamma with
    /// equality only at cf = 1.
    #[test]
    fn thrust_angle_monotone_and_bounded(spike in arb_spike(), f1 in 0.05..0.45f64, f2 in 0.5..0.95f64, cf in 0.05..1.0f64) {
        let d1 = f1 * spike.max_depth;
        let d2 = f2 * spike.max_depth;
        let g1 = thrust_angle(&spike, d1, 0.0).unwrap();
        let g2 = thrust_angle(&spike, d2, 0.0).unwrap();
        prop_assert!(g2 > g1);
        let e1 = effective_thrust_angle(&spike, d1, 0.0, cf).unwrap();
        prop_assert!(e1 <= g1 + 1e-12);
        let full = effective_thrust_angle(&spike, d1, 0.0, 1.0).unwrap();
        prop_assert!((full - g1).abs() < 1e-12);
    }

    /// Lift is homogeneous of degree 1 in the draft.
    #[test]
    fn lift_homogeneous(draft in 0.0..10_000.0f64, gamma in 0.0..89.0f64, k in 0.0..10.0f64) {
        let a = lift_force(k * draft, gamma).unwrap();
        let b = k * lift_force(draft, gamma).unwrap();
        let scale = a.abs().max(1e-12);
        prop_assert!((a - b).abs() / scale <= 1e-12);
    }

    /// The window depends only on alpha - gamma.
    #[test]
    fn window_shift_invariant(alpha in 1.0..89.0f64, gamma in 0.0..89.0f64, shift in -30.0..30.0f64) {
        let base = penetration_window(alpha, gamma);
        let a2 = alpha + shift;
        let g2 = gamma + shift;
        if (0.0..90.0).contains(&a2) && (0.0..90.0).contains(&g2) {
            prop_assert_eq!(penetration_window(a2, g2), base);
        }
    }

    /// Slope decomposition preserves the force norm.
    #[test]
    fn slope_norm_preserved(w in 1.0..5000.0f64, pitch in -80.0..80.0f64, roll in -80.0..80.0f64) {
        let l = slope_decomposition(w, pitch, roll).unwrap();
        let norm = (l.along_track.powi(2) + l.lateral.powi(2) + l.normal.powi(2)).sqrt();
        prop_assert!((norm - w).abs() / w <= 1e-9);
    }

    /// lift(pw*W, limit_angle(pw)) = W for any pw.
    #[test]
    fn limit_angle_consistency(pw in 0.1..20.0f64, w in 10.0..5000.0f64) {
        let gamma = max_thrust_angle_for_pull_weight(pw).unwrap();
        let lift = lift_force(pw * w, gamma).unwrap();
        prop_assert!((lift - w).abs() / w <= 1e-9);
    }
}
