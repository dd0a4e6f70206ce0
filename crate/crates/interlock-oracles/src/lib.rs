//! Independent oracle suite for the interlock crawler simulator.
//!
//! This crate deliberately depends on nothing from the production code.
//! It re-derives every pinned reference value through its own arithmetic:
//! extended-precision (double-double) trigonometry, brute-force grid
//! scans for penetration equilibria, and raw closed forms. The production
//! test suites import the case table from here and fail if the
//! implementation drifts from it.

pub mod cases;
pub mod dd;
pub mod scan;
pub mod trig;

pub use cases::{compute, to_csv, verify_all, OracleCase, Verdict, CASES};
pub use scan::{grid_scan_depth, quadratic_resistance, ScanResult};
