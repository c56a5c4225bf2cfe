//! Expands v_t = Sq^{2^t} ... Sq^2 Sq^1 w2 and splits off its leading
//! generator w_{2^{t+1}+1}.
//!
//!     cargo run --release --example spin_lemma -- 4

use std::time::Instant;

use ddb_sphere::charclass::SWRing;
use ddb_sphere::steenrod::{verify_spin_lemma, SqWord};

fn main() {
    let max_t: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for t in 0..=max_t {
        let rank = (1 << (t + 1)) + 1;
        let start = Instant::now();
        let report = verify_spin_lemma(t, SWRing::oriented(rank).unwrap()).unwrap();
        let elapsed = start.elapsed();
        println!("t = {t}: {} w2 in rank {rank}", SqWord::tower(t));
        println!("  terms: {}", report.v.len());
        match report.remainder_max_gen {
            Some(g) => println!("  remainder uses generators up to w{g} (bound w{})", report.remainder_bound()),
            None => println!("  remainder is zero"),
        }
        if report.v.len() <= 8 {
            println!("  v_{t} = {}", report.v);
        }
        println!("  holds: {} ({elapsed:?})", report.holds());
    }
}
