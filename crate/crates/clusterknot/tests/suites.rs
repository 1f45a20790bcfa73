//! End-to-end run of every verification suite.

use clusterknot::verify::{run_suite, Suite};

#[test]
fn every_suite_passes() {
    let report = run_suite(Suite::All);
    println!("{report}");
    assert!(report.ok(), "{report}");
}

#[test]
fn single_suite_report_carries_its_name() {
    let report = run_suite(Suite::Markov);
    assert_eq!(report.suite, "markov");
    assert!(report.ok(), "{report}");
    assert_eq!(report.results.len(), 3);
}
