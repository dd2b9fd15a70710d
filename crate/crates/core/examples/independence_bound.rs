//! Independence numbers of random triangle-free subcubic graphs against the
//! 5n/14 lower bound.

use fractional_coloring::graph::generate::{random_subcubic_triangle_free, GenConfig};

fn main() {
    let mut worst = f64::MAX;
    for seed in 0..200 {
        let n = 10 + (seed as usize % 21);
        let Some(g) = random_subcubic_triangle_free(&GenConfig::new(n, seed)) else {
            continue;
        };
        let (alpha, _) = g.independence_number();
        let need = (5 * n).div_ceil(14);
        assert!(alpha >= need, "seed {seed}");
        worst = worst.min(alpha as f64 / n as f64);
    }
    println!("smallest alpha/n seen: {worst:.4} (bound {:.4})", 5.0 / 14.0);
}
