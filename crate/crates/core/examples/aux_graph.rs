//! The quotient graph of an admissible triple and its 3-colorability,
//! including a gadget whose quotient needs four colors.

use fractional_coloring::admissible::{greedy_partition, AdmissibleTriple};
use fractional_coloring::aux::{build_aux, chromatic_number, critical_witness, ColoringOutcome, DEFAULT_NODE_BUDGET};
use fractional_coloring::graph::{catalog, Graph, VertexSet};

fn main() {
    let g = catalog::builtin("petersen:7:2").unwrap();
    let gp = greedy_partition(&g, 0).unwrap();
    for t in &gp.partition.triples {
        let aux = build_aux(&g, t).unwrap();
        let verdict = match aux.three_color() {
            ColoringOutcome::Colorable(_) => "3-colorable",
            ColoringOutcome::NotColorable => "not 3-colorable",
            ColoringOutcome::Undecided => "undecided",
        };
        println!("X = {}: quotient on {} vertices is {verdict}", t.union(), aux.graph.n());
    }

    // x joined to w1, w2, w3 whose neighbors sit on a 5-cycle; three copies
    // put one x in each part
    let one = Graph::new(
        9,
        [(0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (2, 5), (2, 7), (3, 8), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)],
    )
    .unwrap();
    let g = one.disjoint_union(&one).disjoint_union(&one);
    let t = AdmissibleTriple::new(VertexSet::from([0]), VertexSet::from([9]), VertexSet::from([18]));
    let aux = build_aux(&g, &t).unwrap();
    println!("gadget quotient: {:?}, chromatic number {}", aux.three_color(), chromatic_number(&aux.graph));
    let forced = [(aux.hubs[0], 1), (aux.hubs[1], 2), (aux.hubs[2], 3)];
    if let Some(w) = critical_witness(&aux.graph, &forced, DEFAULT_NODE_BUDGET) {
        println!("edge-minimal obstruction keeps {} of {} edges", w.edge_count(), aux.graph.edge_count());
    }
}
