//! Acceptance criteria 1 to 8, one verdict line each. Exits non-zero if any
//! criterion fails.

use std::process::ExitCode;

use ugg::selftest::{self, Config};

fn main() -> ExitCode {
    let cfg = Config::default();
    let runners: [(u8, &dyn Fn() -> selftest::Outcome); 8] = [
        (1, &selftest::edge_bound),
        (2, &|| selftest::forest_universality(&cfg)),
        (3, &selftest::predicate_agreement),
        (4, &|| selftest::large_random_trees(&cfg)),
        (5, &|| selftest::lemma_properties(&cfg)),
        (6, &selftest::caterpillars),
        (7, &selftest::two_chords),
        (8, &selftest::convex_lower_bound_substitute),
    ];
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    println!("\nrunning acceptance criteria");
    for (id, run) in runners {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let outcome = run();
        assert_eq!(outcome.id, id);
        println!("{outcome}");
        failed += usize::from(!outcome.passed);
    }
    if failed == 0 {
        println!("acceptance: all criteria passed\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criterion(s) failed\n");
        ExitCode::FAILURE
    }
}
