//! Gluing two copies of a disk bundle over S^k along L = KP^2 # -KP^2 and
//! reading H^{k+1} of the result off the gluing matrix.
//!
//!     cargo run --example glue_enumeration

use ddb_sphere::glue::{
    admissible_dimensions, enumerate_gluings, primitive_square_zero_set, ConnectedSumRing, GluingVerdict,
};

fn main() {
    for ring in [ConnectedSumRing::connected_sum(4).unwrap(), ConnectedSumRing::product(4).unwrap()] {
        let set = primitive_square_zero_set(&ring, 20).unwrap();
        let classes: Vec<String> = set.classes.iter().map(ToString::to_string).collect();
        println!("{:?}: primitive classes with zero square: {}", ring.kind, classes.join(", "));
        let rows = enumerate_gluings(&ring);
        for row in &rows {
            println!("  {} | {} -> |det| = {}, {}", row.psi.rows[0], row.psi.rows[1], row.abs_det, row.verdict);
        }
        let z2 = rows.iter().filter(|r| r.verdict == GluingVerdict::RationalSphereWithZ2).count();
        println!("  {z2} of {} gluings give H^(k+1) = Z/2\n", rows.len());
    }
    let dims = admissible_dimensions();
    for line in &dims.trace {
        println!("{line}");
    }
    println!("dimensions: {:?}", dims.dimensions);
}
