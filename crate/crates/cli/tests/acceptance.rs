//! Runs every published criterion in sequence, one PASS/FAIL line each with
//! its wall time and limit. Sequential so the timings are not shared with
//! other checks. Exits non-zero if any criterion fails.
//!
//! `cargo test --test acceptance -- 3 6` runs a subset.

use std::process::ExitCode;

use prep_atlas::acceptance;

fn main() -> ExitCode {
    // numeric arguments select criteria; libtest flags are ignored
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let only = (!ids.is_empty()).then_some(ids.as_slice());
    let mut failed = 0;
    let mut total = 0;
    for c in acceptance::CRITERIA.iter().filter(|c| only.is_none_or(|ids| ids.contains(&c.id))) {
        let out = acceptance::run(c.id).expect("criterion exists");
        println!("{}", out.line());
        total += 1;
        if !out.passed {
            failed += 1;
        }
    }
    println!("\nacceptance: {} passed, {failed} failed", total - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
