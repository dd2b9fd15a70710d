//! Fold colorings as points of a convex set: addition, scaling, convex
//! combinations and gluing along a shared subgraph.

use fractional_coloring::fold::{add, convex_combine, equivalent, glue, restrict, scale, FoldColoring, Rational};
use fractional_coloring::graph::{catalog, VertexSet};

fn main() {
    let c5 = catalog::cycle(5);
    // 2-fold from 5 colors and a plain 3-coloring
    let c1 = FoldColoring::new(2, vec![vec![0, 1], vec![2, 3], vec![4, 0], vec![1, 2], vec![3, 4]]);
    let c2 = FoldColoring::from_proper(&[0, 1, 0, 1, 2]);
    println!("c1: {}:{}  c2: {}:{}", c1.palette_size(), c1.fold(), c2.palette_size(), c2.fold());

    let sum = add(&c1, &c2).unwrap();
    println!("c1 + c2 is {}:{}", sum.palette_size(), sum.fold());
    println!("c1 ~ 3*c1: {}", equivalent(&c1, &scale(3, &c1)));

    let (f1, f2) = (c1.to_fractional().unwrap(), c2.to_fractional().unwrap());
    let half = Rational::new(1.into(), 2.into());
    let mix = convex_combine(&half, &f1, &f2).unwrap();
    println!("g(c1) = {}, g(c2) = {}, g(mix) = {}", f1.gvalue(), f2.gvalue(), mix.gvalue());

    // glue the two halves of C5 back together from restrictions of c1
    let left = VertexSet::from([0, 1, 2]);
    let right = VertexSet::from([2, 3, 4, 0]);
    let a = restrict(&c1, &left).unwrap();
    let b = scale(2, &restrict(&c1, &right).unwrap());
    let glued = glue(&c5, &left, &right, &a, &b).unwrap();
    println!("glued: {}:{} (max of {}/{} and {}/{})", glued.palette_size(), glued.fold(), a.palette_size(), a.fold(), b.palette_size(), b.fold());
}
