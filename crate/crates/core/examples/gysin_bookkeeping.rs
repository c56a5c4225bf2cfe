//! Graded group bookkeeping: Euler characteristics, split Gysin sequences
//! and the candidate ring of a non-sphere base.
//!
//!     cargo run --example gysin_bookkeeping -- crates/core/examples/data/s4.txt 9

use ddb_sphere::graded::{btop_ring, ddb_euler_check, euler_char, gysin_total_space, GradedAbGroup};

fn main() {
    let mut args = std::env::args().skip(1);
    let base: GradedAbGroup = match args.next() {
        Some(path) => std::fs::read_to_string(&path).expect("readable base file").parse().expect("graded group"),
        None => GradedAbGroup::sphere(4),
    };
    let fiber: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(9);

    println!("base B:\n{base}\nchi(B) = {}", euler_char(&base));
    let total = match gysin_total_space(&base, fiber, true) {
        Ok(total) => total,
        Err(e) => {
            println!("\ncannot build L: {e}");
            return;
        }
    };
    println!("\nL, an S^{fiber} bundle over B with zero Euler class:\n{total}");
    println!("chi(L) = {}, torsion free: {}", euler_char(&total), total.is_torsion_free());

    let chi_b2 = euler_char(&GradedAbGroup::sphere(fiber));
    println!("\nchi(B) + chi(S^{fiber}) - chi(L) = 2: {}", ddb_euler_check(euler_char(&base), chi_b2, euler_char(&total)));

    println!("\ncandidate non-sphere bases of S^k -> L -> B:");
    for (dim_b, k) in [(5, 2), (6, 2), (7, 3), (11, 3), (9, 4)] {
        match btop_ring(dim_b, k) {
            Ok(r) => println!("  dim B = {dim_b}, k = {k}: {}", r.presentation()),
            Err(e) => println!("  dim B = {dim_b}, k = {k}: {e}"),
        }
    }
}
