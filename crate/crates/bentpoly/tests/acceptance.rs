//! One line per check; exits non-zero if any check fails.

use std::process::ExitCode;
use std::time::Instant;

use bentpoly::acceptance::{Status, Suite, CHECKS};

fn main() -> ExitCode {
    let suite = Suite::default();
    let mut failed = 0;
    for id in CHECKS {
        let start = Instant::now();
        let outcome = suite.run(id).expect("known check");
        println!("{outcome} ({:.1}s)", start.elapsed().as_secs_f64());
        if outcome.status == Status::Fail {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} checks, {failed} failed",
        CHECKS.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
