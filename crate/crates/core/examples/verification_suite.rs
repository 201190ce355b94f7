//! Run the built-in verification suites from code.
//!
//! ```bash
//! cargo run --example verification_suite
//! ```

use dilogint::cli::args::Suite;
use dilogint::cli::verify::{run, VerifyOptions};

fn main() {
    let report = run(
        Suite::All,
        &VerifyOptions {
            identity_tol: 1e-13,
            quad_tol: 1e-9,
            seed: 7,
        },
    );
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
