//! Runs every check over the bundled corpus and prints a one-line summary.

use std::time::Instant;

use grpexp::runner::{run_suite, RunConfig};

fn main() {
    let start = Instant::now();
    let report = run_suite(&grpexp::catalog::bundled_corpus(), &RunConfig::default());
    for e in &report.entries {
        for c in &e.checks {
            if c.status != grpexp::runner::Status::Pass && c.status != grpexp::runner::Status::Na {
                println!("{} {} {:?} {}", e.name, c.check, c.status, c.reason.clone().unwrap_or_default());
            }
        }
    }
    println!("{:?} in {:.1?}", report.summary, start.elapsed());
}
