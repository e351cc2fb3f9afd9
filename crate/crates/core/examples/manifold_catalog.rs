//! Recomputes every catalog entry and compares with the recorded values.

use cohomotopy::ahss::Mode;
use cohomotopy::fourmanifold::catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in catalog() {
        let report = entry.recompute(Mode::FullSq2)?;
        let group = report.group().map_or("-".to_string(), ToString::to_string);
        let ok = if entry.expected.matches(&report) { "ok" } else { "MISMATCH" };
        println!("{:<12} d={:<3} k={:<2} group {:<8} flags {:?} [{ok}]", entry.datum.name, report.d, report.k, group, report.flags);
    }
    Ok(())
}
