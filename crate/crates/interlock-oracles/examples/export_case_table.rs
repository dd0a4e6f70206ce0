//! Emit the frozen oracle case table as CSV for audit.
//!
//! ```bash
//! cargo run -p interlock-oracles --example export_case_table > oracle_cases.csv
//! ```

fn main() {
    print!("{}", interlock_oracles::to_csv());
    let failing = interlock_oracles::verify_all().iter().filter(|v| !v.pass).count();
    if failing > 0 {
        eprintln!("{failing} case(s) FAILED re-derivation");
        std::process::exit(1);
    }
}
