//! Driving the randomized verification suites from the library: the same
//! machinery behind `qse verify` and `qse scan`.
//!
//! Run with: cargo run --example verification_suites

use qse::verify::{default_grid, run_suite, scan_channels, SuiteConfig};
use qse::{random_channel, standard_channel, ChannelKind};

fn main() -> qse::Result<()> {
    let config = SuiteConfig { dims: vec![2], trials: 10, seed: 1, ..Default::default() };

    for suite in ["additivity", "theorem4", "schatten"] {
        for report in run_suite(suite, &config)? {
            println!(
                "suite {:10} -> {} ({} checks, max violation {:+.3e})",
                report.suite,
                if report.pass { "pass" } else { "FAIL" },
                report.checks.len(),
                report.max_violation
            );
        }
    }

    // A scan compares two channels across the grid and reports each bound.
    let id = standard_channel(ChannelKind::Identity { d: 2 })?;
    let noisy = random_channel(2, 4, 2)?;
    let rows = scan_channels(&id, &noisy, &default_grid())?;
    let valid = rows.iter().filter(|r| r.valid).count();
    let sound = rows.iter().filter(|r| r.sound).count();
    println!("\nscan: {} rows, {valid} valid bounds, {sound} sound rows", rows.len());
    for row in rows.iter().filter(|r| r.valid).take(5) {
        println!(
            "  q={:3}, s={:4}, {}: bound {:.6} vs observed {:.6}",
            row.q,
            row.s,
            row.bound_kind,
            row.bound_value.unwrap_or(f64::NAN),
            row.observed_delta
        );
    }
    Ok(())
}
