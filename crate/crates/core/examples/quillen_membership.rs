//! The ideal J = ker(H*(BSO(m)) -> H*(BSpin(m))) and membership certificates.
//!
//!     cargo run --release --example quillen_membership -- 9

use ddb_sphere::charclass::parse_poly;
use ddb_sphere::quillen::{in_ideal, quillen_generators, spin_top_class_vanishes};

fn main() {
    let m: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    let ideal = quillen_generators(m).unwrap();
    println!("J for BSO({m}) has {} generators", ideal.generators().len());
    for g in ideal.generators() {
        let shown = g.poly.as_ref().map_or("(kept symbolic)".to_string(), |p| {
            if p.len() > 6 {
                format!("{} terms", p.len())
            } else {
                p.to_string()
            }
        });
        println!("  {:<24} deg {:>3}: {shown}", g.label(), g.degree);
    }

    for text in ["w2*w7", "w4", "w3^2 + w6", "w2^2*w3 + w5*w4"] {
        let Ok(q) = parse_poly(text, ideal.ring()) else { continue };
        let cert = in_ideal(&q, &ideal).unwrap();
        if cert.member {
            println!("\n{q} is in J:");
            for (i, cofactor) in &cert.combination {
                println!("  ({}) * ({cofactor})", ideal.generators()[*i].label());
            }
            assert!(cert.verify(&ideal, &q));
        } else {
            println!("\n{q} is not in J");
        }
    }

    for k in [4, 6, 8, 16] {
        let o = spin_top_class_vanishes(k).unwrap();
        println!("\nrank {} spin bundle, w{} forced to vanish: {}", k + 1, k + 1, o.vanishes);
        for line in o.trace() {
            println!("  {line}");
        }
    }
}
