//! One PASS/FAIL line per acceptance criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use syzcover::cover::matrix_ideal_shift_check;
use syzcover::fiber::{enumerate_fiber, fiber_formula, genus_base, genus_component, verify_census};
use syzcover::field::DEFAULT_SCAN_CAP;
use syzcover::oracle::{cross_check, MIN_POINTS};
use syzcover::report::{from_json, run_verification, CheckSelection, CheckStatus};
use syzcover::syzygy::{build_catalog, check_mutation_sensitivity};

/// Criteria known not to hold, with the reason printed next to the FAIL line.
const UNATTAINABLE: [(u32, &str); 1] =
    [(1, "the genus formula and Hurwitz give 5·24·9 + 1 = 1081, not 1261")];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn headline() -> Outcome {
    let start = Instant::now();
    let r = match run_verification(5, CheckSelection::ALL, 0, DEFAULT_SCAN_CAP) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let elapsed = start.elapsed();
    let s = &r.stats;
    let ok = s.components == 4 && s.degree == 120 && s.genus_component == 1261 && elapsed < Duration::from_secs(30);
    outcome(
        ok,
        format!(
            "components {}, degree {}, genus {} (expected 4, 120, 1261), census {:?}, {:.1?}",
            s.components,
            s.degree,
            s.genus_component,
            r.check("fiber.census").map(|c| c.status),
            elapsed
        ),
    )
}

fn census() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (p, stated) in [(3u64, 48u64), (5, 480), (7, 16128)] {
        match enumerate_fiber(p, DEFAULT_SCAN_CAP) {
            Ok(c) => {
                let verified = verify_census(&c).is_ok();
                let matches = c.total() == fiber_formula(p);
                ok &= verified && matches;
                if p != 7 {
                    ok &= c.total() == stated;
                }
                parts.push(format!(
                    "p={p}: {} points, formula {}, equations {}",
                    c.total(),
                    fiber_formula(p),
                    if verified { "hold" } else { "FAIL" }
                ));
                if p == 7 && stated != fiber_formula(7) {
                    parts.push(format!("stated p=7 total {stated} is not (p²-1)p(p-1) = {}", fiber_formula(7)));
                }
            }
            Err(e) => {
                ok = false;
                parts.push(format!("p={p}: {e}"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn symbolic() -> Outcome {
    let sel = CheckSelection { lemmas: true, cover: true, fiber: false };
    let mut parts = Vec::new();
    let mut ok = true;
    for p in [3, 5, 7, 11, 13] {
        let start = Instant::now();
        match run_verification(p, sel, 0, DEFAULT_SCAN_CAP) {
            Ok(r) => {
                let elapsed = start.elapsed();
                let failed: Vec<_> =
                    r.checks.iter().filter(|c| c.status != CheckStatus::Pass).map(|c| c.name.as_str()).collect();
                ok &= failed.is_empty() && elapsed < Duration::from_secs(10);
                parts.push(format!("p={p}: {} checks in {elapsed:.1?}{}", r.checks.len(), if failed.is_empty() {
                    String::new()
                } else {
                    format!(", failing {failed:?}")
                }));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("p={p}: {e}"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn oracle() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for p in [3, 5, 7, 11, 13] {
        let eval = cross_check(p, MIN_POINTS, 0);
        let mutation = build_catalog(p).map_err(|e| e.to_string()).and_then(|cat| {
            check_mutation_sensitivity(&cat).map_err(|m| m.0)
        });
        ok &= eval.is_ok() && mutation.is_ok();
        if let Err(m) = eval {
            parts.push(format!("p={p} evaluation: {m}"));
        }
        if let Err(m) = mutation {
            parts.push(format!("p={p} mutation: {m}"));
        }
    }
    if parts.is_empty() {
        parts.push(format!("{MIN_POINTS} points per curve over F_(p²), every sign-flip mutant caught"));
    }
    outcome(ok, parts.join("; "))
}

fn hurwitz() -> Outcome {
    let bad: Vec<u64> = [3u64, 5, 7, 11, 13]
        .into_iter()
        .filter(|&p| {
            let g_y = (p * (p - 1) / 2) as i128;
            let deg = (p * (p * p - 1)) as i128;
            let g_x = genus_component(p) as i128;
            genus_base(p) as i128 != g_y || 2 * g_x - 2 != deg * (2 * g_y - 2)
        })
        .collect();
    outcome(bad.is_empty(), if bad.is_empty() { "p = 3..13".to_string() } else { format!("fails for {bad:?}") })
}

fn matrix_shift() -> Outcome {
    let results: Vec<_> = [2, 3].into_iter().map(|n| (n, matrix_ideal_shift_check(7, n, 100, 0))).collect();
    let ok = results.iter().all(|(_, v)| v.is_ok());
    let detail = results
        .iter()
        .map(|(n, v)| format!("n={n}: {}", v.as_ref().map_or_else(|m| m.0.clone(), |_| "100 samples".to_string())))
        .collect::<Vec<_>>()
        .join("; ");
    outcome(ok, detail)
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_syzcover")).args(args).output().expect("binary runs");
    (out.status.code(), out.stdout)
}

fn cli_contract() -> Outcome {
    let mut problems = Vec::new();
    let (code, first) = run_cli(&["verify", "--prime", "5", "--seed", "11"]);
    if code != Some(0) {
        problems.push(format!("passing run exited {code:?}"));
    }
    let (_, second) = run_cli(&["verify", "--prime", "5", "--seed", "11"]);
    if first != second {
        problems.push("repeated runs differ".to_string());
    }
    match std::str::from_utf8(&first).map_err(|e| e.to_string()).and_then(|s| from_json(s).map_err(|e| e.to_string())) {
        Ok(r) => {
            let again = syzcover::report::to_json(&r);
            if again.as_bytes() != first.as_slice() {
                problems.push("re-serialised report differs".to_string());
            }
        }
        Err(e) => problems.push(format!("report does not parse: {e}")),
    }
    let (code, _) = run_cli(&["verify", "--prime", "3", "--checks", "fiber", "--max-field-size", "10", "--strict"]);
    if code != Some(1) {
        problems.push(format!("failing run exited {code:?}"));
    }
    for bad in ["2", "9", "abc"] {
        let (code, _) = run_cli(&["verify", "--prime", bad]);
        if code != Some(2) {
            problems.push(format!("--prime {bad} exited {code:?}"));
        }
    }
    let ok = problems.is_empty();
    outcome(ok, if ok { "round trip, exit codes 0/1/2, byte-identical reruns".to_string() } else { problems.join("; ") })
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 7] = [
        (1, "p=5 headline numbers", headline),
        (2, "fiber census equals formula", census),
        (3, "symbolic identity suite", symbolic),
        (4, "oracle cross-check and mutation", oracle),
        (5, "Hurwitz consistency", hurwitz),
        (6, "matrix shift identities over F_7", matrix_shift),
        (7, "CLI contract", cli_contract),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let o = check();
        let known = UNATTAINABLE.iter().find(|(k, _)| *k == id);
        println!("{} criterion {id} ({name}): {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        match (o.ok, known) {
            (false, Some((_, why))) => println!("    known: {why}"),
            (true, Some(_)) => unexpected.push(format!("criterion {id} now passes")),
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected outcomes: {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
