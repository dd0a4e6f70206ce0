//! Brute-force penetration oracle: dense grid scan for the depth at which
//! a monotone resistance curve crosses a given draft force.

/// Result of a grid scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanResult {
    /// Crossing depth, or `max_depth` when saturated.
    pub depth: f64,
    /// Resistance evaluated at `depth`.
    pub resistance: f64,
    /// True when the curve never reaches the draft within `[0, max_depth]`.
    pub saturated: bool,
}

/// Scan `points + 1` samples of `resistance` over `[0, max_depth]` and
/// return the first grid interval where it crosses `draft`, refined to the
/// interval midpoint. Resolution is `max_depth / points`.
pub fn grid_scan_depth<F>(resistance: F, max_depth: f64, draft: f64, points: usize) -> ScanResult
where
    F: Fn(f64) -> f64,
{
    assert!(max_depth > 0.0 && points >= 2);
    if draft <= 0.0 {
        return ScanResult {
            depth: 0.0,
            resistance: resistance(0.0),
            saturated: false,
        };
    }
    let step = max_depth / points as f64;
    let mut prev = 0.0f64;
    for i in 1..=points {
        let d = if i == points { max_depth } else { i as f64 * step };
        if resistance(d) >= draft {
            let mid = 0.5 * (prev + d);
            return ScanResult {
                depth: mid,
                resistance: resistance(mid),
                saturated: false,
            };
        }
        prev = d;
    }
    ScanResult {
        depth: max_depth,
        resistance: resistance(max_depth),
        saturated: true,
    }
}

/// The quadratic lateral-resistance form used by the oracle suite,
/// written out directly from raw parameters.
pub fn quadratic_resistance(mp: f64, kp: f64, rho: f64, g: f64, width: f64) -> impl Fn(f64) -> f64 {
    move |d: f64| 0.5 * mp * kp * rho * g * width * d * d
}
