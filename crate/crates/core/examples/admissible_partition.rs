//! Greedy partition of a block into admissible triples, with the
//! forbidden-color counts that keep it within 126 colors.

use fractional_coloring::admissible::{greedy_partition, is_admissible, STEP_BOUND};
use fractional_coloring::graph::catalog;

fn main() {
    let g = catalog::builtin("petersen:7:2").unwrap();
    let gp = greedy_partition(&g, 0).expect("girth 4..=6 block");
    println!("witness cycle {:?}", gp.witness_cycle);
    println!("elimination order {:?}", gp.order);
    for (i, t) in gp.partition.triples.iter().enumerate() {
        println!("triple {i}: X1={} X2={} X3={} admissible={}", t.x1, t.x2, t.x3, is_admissible(&g, t));
    }
    println!("max forbidden per step {} (bound {STEP_BOUND})", gp.max_step_forbidden());
    for rec in &gp.endgame {
        println!("endgame vertex {}: {} forbidden, bound {}", rec.vertex, rec.forbidden, rec.bound);
    }
}
