//! End-to-end certificate for a generated graph: partition, compose, verify.

use fractional_coloring::composer::{pipeline, verify, PipelineConfig};
use fractional_coloring::graph::generate::{random_subcubic_triangle_free, GenConfig};

fn main() {
    let cfg = GenConfig {
        n: 40,
        seed: 7,
        girth_max: Some(6),
        two_connected: true,
    };
    let g = random_subcubic_triangle_free(&cfg).expect("sample found");
    let cert = pipeline(&g, &PipelineConfig::default()).expect("certificate");
    verify(&g, &cert).expect("certificate verifies");
    println!("n = {}, {}:{} coloring, ratio {}", g.n(), cert.a, cert.b, cert.ratio);
    println!("path {:?}, retries {}", cert.provenance.path, cert.provenance.retries);
    for block in &cert.provenance.blocks {
        let triples = block.partition.as_ref().map_or(0, |p| p.len());
        println!("  block of {} vertices: {:?}, {triples} triples, padding {}", block.vertices.len(), block.path, block.padding);
    }
}
