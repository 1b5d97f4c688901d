//! Runs the randomized suites against the square map of the dyadic filter
//! and prints a summary line per suite. Pass a trial count to override the
//! default of 100.

use std::time::Instant;

use filtersq::homeo::{power_homeo, square_homeo};
use filtersq::verify::{agreement_suite, preservation_suite, roundtrip_suite, Report, Verdict};
use filtersq::zoo::dyadic_chain;

fn summary(name: &str, start: Instant, report: &Report) {
    let passed = report.trials() - report.failures();
    println!("{name:24} {passed}/{} passed in {:.2?}", report.trials(), start.elapsed());
    for row in report.rows.iter().filter(|r| r.verdict == Verdict::Fail).take(3) {
        println!("  trial {}: {}", row.trial, row.detail);
    }
}

fn main() -> filtersq::Result<()> {
    let f = dyadic_chain();
    let square = square_homeo(&f)?;
    let power = power_homeo(&f, 3, 2)?;
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);

    let t = Instant::now();
    summary("roundtrip square", t, &roundtrip_suite(&square, trials, 7));
    let t = Instant::now();
    summary("roundtrip power(3,2)", t, &roundtrip_suite(&power, trials, 7));
    let t = Instant::now();
    summary("preservation", t, &preservation_suite(&f, trials, 7)?);
    let t = Instant::now();
    summary("agreement square", t, &agreement_suite(&square, trials, 512, 7));
    Ok(())
}
