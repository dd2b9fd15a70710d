//! Exact fractional chromatic numbers of a few catalog graphs, with the
//! optimal independent-set weights and the a:b coloring they induce.

use fractional_coloring::graph::catalog;
use fractional_coloring::lp::{extract_ab_coloring, fractional_chromatic_number};

fn main() {
    for name in ["cycle:5", "cycle:7", "petersen:7:2", "k:4", "cycle_power:8:2", "strongprod_c5_k2"] {
        let g = catalog::builtin(name).expect("builtin graph");
        let (value, sol) = fractional_chromatic_number(&g).expect("LP solves");
        let c = extract_ab_coloring(&g, &sol).expect("coloring from weights");
        println!("{name:14} chi_f = {value:5}  ({}:{} coloring)", c.palette_size(), c.fold());
    }

    let g = catalog::builtin("petersen:7:2").unwrap();
    let (_, sol) = fractional_chromatic_number(&g).unwrap();
    println!("\nP(7,2) weights:");
    for (set, w) in &sol.weights {
        println!("  {set} -> {w}");
    }
    let (alpha, witness) = g.independence_number();
    println!("alpha = {alpha}, e.g. {witness}");
}
