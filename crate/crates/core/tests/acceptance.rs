//! The nine acceptance criteria at their stated sizes. Prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use linper::selftest::{Bounds, CriterionResult, CRITERIA};

/// Sizes written out literally so a change to the library defaults cannot
/// silently shrink the sweeps.
fn acceptance_bounds() -> Bounds {
    Bounds {
        schur_n: 3,
        schur_dp: 4,
        margin_size: 5,
        flag_size: 5,
        aut_size: 4,
        collided_dp: 4,
        ind_total: 6,
        ind_r: 4,
        orbit_q2: 4,
        orbit_q3: 3,
        levi_n: 4,
        levi_lambda: 2,
        levi_nu: 2,
        audit_n: 4,
        audit_d: 5,
        audit_g: 3,
    }
}

/// Runtime budgets in seconds, by criterion.
const BUDGET: [f64; 9] = [60.0, 10.0, 120.0, 30.0, 1.0, 60.0, 60.0, 300.0, 5.0];

fn report(r: &CriterionResult, within_budget: bool) -> bool {
    let ok = r.passed && within_budget;
    println!(
        "criterion {} {}: {} ({} checks, {:.2}s{})",
        r.id,
        if ok { "PASS" } else { "FAIL" },
        r.name,
        r.checked,
        r.seconds,
        if within_budget { "" } else { ", over budget" }
    );
    for f in r.failures.iter().take(10) {
        println!("    {f}");
    }
    ok
}

fn main() -> ExitCode {
    let bounds = acceptance_bounds();
    assert_eq!(bounds, Bounds::default(), "library defaults drifted from acceptance sizes");
    let start = Instant::now();
    let mut all = true;
    for (i, criterion) in CRITERIA.iter().enumerate() {
        let r = criterion(&bounds);
        assert_eq!(usize::from(r.id), i + 1);
        let ok = report(&r, r.seconds < BUDGET[i]);
        all &= ok;
    }
    println!("acceptance: {} in {:.2}s", if all { "all criteria pass" } else { "FAILURES" }, start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
