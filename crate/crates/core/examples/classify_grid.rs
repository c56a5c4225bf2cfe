//! Runs the classifier over every admissible scenario up to a dimension
//! and prints the non-contradictory ones.
//!
//!     cargo run --example classify_grid -- 12

use std::collections::BTreeMap;

use ddb_sphere::classifier::{classify, DdbScenario, Outcome};

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for n in (4..=max_n).step_by(2) {
        for l1 in 1..n {
            for l2 in l1..n {
                for (o1, o2) in [(true, true), (true, false), (false, false)] {
                    let sc = DdbScenario::new(n, l1, l2, o1, o2).unwrap();
                    let v = classify(&sc).unwrap();
                    *counts.entry(format!("{:?}", v.outcome)).or_default() += 1;
                    if v.outcome != Outcome::Contradiction {
                        let rules: Vec<String> = v.trace.iter().map(|s| format!("{:?}", s.rule)).collect();
                        let orient = if o1 { "orientable" } else { "non-orientable" };
                        println!("n = {n:>2}, l = ({l1}, {l2}), {orient}: {} [{}]", v.outcome, rules.join(" "));
                    }
                }
            }
        }
    }
    println!();
    for (outcome, count) in counts {
        println!("{outcome}: {count}");
    }

    let sc = DdbScenario::new(14, 9, 4, true, true).unwrap();
    println!("\ntrace for {sc:?}:");
    for step in classify(&sc).unwrap().trace {
        println!("  {:?} [{:?}] {}", step.rule, step.provenance, step.detail);
    }
}
