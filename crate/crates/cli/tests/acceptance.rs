//! Runs the eleven acceptance criteria and prints one line per criterion.
//! The spectrum table is also checked end to end through the binary.

use std::process::Command;
use std::time::{Duration, Instant};

use romik::verify::{self, Outcome, TABLE};

fn binary_table() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_romik")).args(["spectrum", "--count", "10"]).output().expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).expect("ASCII output");
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    let mut problems = vec![];
    if !out.status.success() {
        problems.push(format!("exit status {}", out.status));
    }
    if rows.len() != TABLE.len() {
        problems.push(format!("{} rows", rows.len()));
    }
    for (i, (r, want)) in rows.iter().zip(TABLE.iter()).enumerate() {
        let l2 = if want.l2.1 == 1 { want.l2.0.to_string() } else { format!("{}/{}", want.l2.0, want.l2.1) };
        let expect = [(i + 1).to_string(), want.decimal.into(), l2, want.m.to_string(), want.kind.into(), want.word.into(), want.period.into()];
        if r.len() < 7 || r[..7].iter().zip(expect.iter()).any(|(a, b)| a != b) {
            problems.push(format!("row {}: {:?}", i + 1, r));
        }
    }
    if elapsed > Duration::from_secs(1) {
        problems.push(format!("took {:.2}s", elapsed.as_secs_f64()));
    }
    Outcome {
        id: 1,
        name: "top-10 spectrum table (binary)",
        passed: problems.is_empty(),
        detail: if problems.is_empty() { "10 rows match".into() } else { problems.join("; ") },
        elapsed,
    }
}

#[test]
fn acceptance() {
    let mut outcomes = vec![binary_table()];
    for id in 1..=11 {
        let o = verify::run(id);
        println!("{}", o.line());
        outcomes.push(o);
    }
    println!("{}", outcomes[0].line());
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| format!("[{}] {}", o.id, o.name)).collect();
    assert!(failed.is_empty(), "failed criteria: {}", failed.join(", "));
}
