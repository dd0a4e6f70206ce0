//! Run the bundled field-trial suite and print the match table, then the
//! strict tip-angle variant for comparison.
//!
//! ```bash
//! cargo run -p interlock --example run_trial_suite
//! ```

use interlock::suite::{render_table, run_suite, SuiteOptions};

fn main() {
    let default = SuiteOptions::default();
    println!("=== default calibration (center-of-force lift) ===");
    print!("{}", render_table(&run_suite(&default), &default));

    let strict = SuiteOptions {
        strict_gamma: true,
        ..SuiteOptions::default()
    };
    println!("\n=== strict tip-angle lift criterion ===");
    print!("{}", render_table(&run_suite(&strict), &strict));
    println!("\nThe tip-based criterion over-predicts lift-off on the heavy uphill");
    println!("push: the soil reaction centers part-way up the buried shaft, not at");
    println!("the tip, which is what lets the machine exceed its nominal pull/weight.");
}
