//! Squares of Stiefel-Whitney classes from the Wu formula, extended to
//! products by the Cartan formula.
//!
//!     cargo run --example steenrod_wu -- 8

use ddb_sphere::charclass::{parse_poly, SWRing};
use ddb_sphere::steenrod::{sq, sq_generator, total_square};

fn main() {
    let m: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let ring = SWRing::oriented(m).expect("rank must be at least 2");
    println!("Sq^i w_j in {ring}");
    for j in 2..=m {
        for i in 1..j {
            let value = sq_generator(i, j, ring).unwrap();
            if !value.is_zero() {
                println!("  Sq^{i} w{j} = {value}");
            }
        }
    }

    let x = parse_poly("w2^2 + w4", ring).unwrap();
    println!("\nx = {x}");
    for i in 0..=4 {
        println!("  Sq^{i} x = {}", sq(i, &x));
    }
    println!("  total square: {}", total_square(&x));
}
