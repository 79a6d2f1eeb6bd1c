use std::process::ExitCode;

use dunkl_core::acceptance::{criteria, AcceptanceConfig};

fn main() -> ExitCode {
    let cfg = AcceptanceConfig::default();
    let mut all = true;
    for c in criteria() {
        let run = c.run(&cfg);
        let r = &run.result;
        let ok = r.passed && run.within_limit();
        all &= ok;
        let limit = run.limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        let bound = match (r.cap, r.max_level) {
            (Some(c), _) => format!("cap {c}"),
            (None, Some(n)) => format!("N <= {n}"),
            _ => String::new(),
        };
        println!(
            "{} [{:>2}] {} ({bound}, {} checks, {} flagged) {:.2}s{limit}",
            if ok { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.checks,
            r.flagged.len(),
            run.elapsed.as_secs_f64(),
        );
        for f in r.failures.iter().take(10) {
            println!("     failure: {f}");
        }
        for f in r.flagged.iter().take(20) {
            println!("     flagged: {f}");
        }
        if !run.within_limit() {
            println!("     over time limit");
        }
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
