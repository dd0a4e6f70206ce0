//! Extended-precision trigonometry over degrees.
//!
//! Sine and cosine come from Taylor series evaluated in double-double
//! arithmetic; arcsine and arctangent refine the f64 seed with Newton
//! steps against those series. Arguments are kept small (<= 45 deg for
//! tangent, |x| < 0.9 for arcsine) through the usual identities, which
//! is ample for the geometry handled here.

use crate::dd::{Dd, PI};

const DEG_PER_RAD: f64 = 180.0;

fn deg_to_rad(deg: f64) -> Dd {
    Dd::from_f64(deg) * PI / Dd::from_f64(DEG_PER_RAD)
}

fn rad_to_deg(rad: Dd) -> Dd {
    rad * Dd::from_f64(DEG_PER_RAD) / PI
}

/// Taylor sine, valid for |x| <= 0.9 rad.
fn sin_dd(x: Dd) -> Dd {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0f64;
    loop {
        // term_{k} = -term_{k-1} * x^2 / ((2k)(2k+1))
        term = -(term * x2 / Dd::from_f64(2.0 * k * (2.0 * k + 1.0)));
        sum = sum + term;
        if term.hi.abs() < 1e-35 * sum.hi.abs().max(1e-300) || k > 25.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

/// Taylor cosine, valid for |x| <= 0.9 rad.
fn cos_dd(x: Dd) -> Dd {
    let x2 = x * x;
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut k = 1.0f64;
    loop {
        // term_{k} = -term_{k-1} * x^2 / ((2k-1)(2k))
        term = -(term * x2 / Dd::from_f64((2.0 * k - 1.0) * (2.0 * k)));
        sum = sum + term;
        if term.hi.abs() < 1e-35 || k > 25.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

fn tan_rad(x: Dd) -> Dd {
    sin_dd(x) / cos_dd(x)
}

/// tan of an angle in degrees, 0 <= deg < 90.
pub fn tan_deg(deg: f64) -> Dd {
    assert!((0.0..90.0).contains(&deg), "tan_deg domain");
    if deg > 45.0 {
        Dd::ONE / tan_deg(90.0 - deg)
    } else {
        tan_rad(deg_to_rad(deg))
    }
}

/// arcsine in degrees via Newton iteration on sin(y) = x, |x| <= 0.75.
pub fn asin_deg(x: f64) -> Dd {
    assert!(x.abs() <= 0.75, "asin_deg argument kept small");
    let xd = Dd::from_f64(x);
    let mut y = Dd::from_f64(x.asin());
    for _ in 0..3 {
        y = y - (sin_dd(y) - xd) / cos_dd(y);
    }
    rad_to_deg(y)
}

/// arctangent in degrees via Newton iteration on tan(y) = x, x >= 0.
pub fn atan_deg(x: f64) -> Dd {
    assert!(x >= 0.0, "atan_deg domain");
    if x > 1.0 {
        return Dd::from_f64(90.0) - atan_deg(1.0 / x);
    }
    let xd = Dd::from_f64(x);
    let mut y = Dd::from_f64(x.atan());
    for _ in 0..3 {
        let c = cos_dd(y);
        y = y - (tan_rad(y) - xd) * c * c;
    }
    rad_to_deg(y)
}

/// Passive earth pressure coefficient tan^2(45 + phi/2), re-derived
/// independently of the production formula path.
pub fn passive_coefficient(phi_deg: f64) -> Dd {
    let t = tan_deg(45.0 + phi_deg / 2.0);
    t * t
}
