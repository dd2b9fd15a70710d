//! Fractional chromatic number across clique cuts and 2-vertex cuts.

use fractional_coloring::graph::{Graph, VertexSet, DEFAULT_MIS_CAP};
use fractional_coloring::lp::{check_clique_cut, check_two_cut};

fn main() {
    // C5 and C7 sharing the edge {0, 1}
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    edges.extend([(1, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0)]);
    let g = Graph::new(10, edges).unwrap();
    let g1 = VertexSet::from([0, 1, 2, 3, 4]);
    let g2 = VertexSet::from([0, 1, 5, 6, 7, 8, 9]);
    let c = check_clique_cut(&g, &g1, &g2, DEFAULT_MIS_CAP).unwrap();
    println!("clique cut: chi_f = {}, sides {} and {}, equal to max: {}", c.whole, c.first, c.second, c.holds());

    // two paths of length 2 and 3 between nonadjacent 0 and 1
    let g = Graph::new(5, [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
    let t = check_two_cut(&g, 0, 1, DEFAULT_MIS_CAP).unwrap();
    println!(
        "two-cut: chi_f = {} <= max({}, {}, {}): {}",
        t.whole, t.first, t.second_plus_edge, t.second_contracted, t.holds()
    );
}
