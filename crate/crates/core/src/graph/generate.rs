//! Random connected triangle-free graphs of maximum degree 3.
//!
//! A random spanning skeleton (a Hamiltonian cycle, or a random subcubic
//! tree) is saturated with random chords, rejecting any chord that would
//! create a triangle or push a degree past 3. The distribution is not
//! uniform; it is meant for property corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
    /// Reject samples whose girth exceeds this (forests have infinite girth).
    pub girth_max: Option<usize>,
    /// Start from a Hamiltonian cycle, which makes the result 2-connected.
    pub two_connected: bool,
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            n,
            seed,
            girth_max: None,
            two_connected: false,
        }
    }
}

const MAX_SAMPLES: usize = 10_000;

/// Returns `None` only when no sample within the attempt budget meets the
/// girth bound (or a 2-connected triangle-free graph is impossible, `n < 4`).
pub fn random_subcubic_triangle_free(cfg: &GenConfig) -> Option<Graph> {
    if cfg.two_connected && cfg.n < 4 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..MAX_SAMPLES {
        let g = sample(cfg, &mut rng);
        match (cfg.girth_max, g.girth()) {
            (None, _) => return Some(g),
            (Some(max), Some(girth)) if girth <= max => return Some(g),
            _ => {}
        }
    }
    None
}

fn sample(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Graph {
    let n = cfg.n;
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let link = |adj: &mut Vec<Vec<Vertex>>, u: Vertex, v: Vertex| {
        adj[u].push(v);
        adj[v].push(u);
    };
    if cfg.two_connected {
        for i in 0..n {
            link(&mut adj, order[i], order[(i + 1) % n]);
        }
    } else {
        for i in 1..n {
            let open: Vec<Vertex> = order[..i].iter().copied().filter(|&u| adj[u].len() < 3).collect();
            let parent = *open.choose(rng).expect("a subcubic tree always has a leaf");
            link(&mut adj, parent, order[i]);
        }
    }
    // chord budget varies so the corpus mixes sparse and near-cubic graphs
    let mut budget = if rng.gen_bool(0.7) { usize::MAX } else { rng.gen_range(0..=n) };
    loop {
        if budget == 0 {
            break;
        }
        let mut chords = Vec::new();
        for u in 0..n {
            if adj[u].len() >= 3 {
                continue;
            }
            for v in u + 1..n {
                if adj[v].len() < 3 && !adj[u].contains(&v) && !adj[u].iter().any(|w| adj[v].contains(w)) {
                    chords.push((u, v));
                }
            }
        }
        let Some(&(u, v)) = chords.choose(rng) else {
            break;
        };
        link(&mut adj, u, v);
        budget -= 1;
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>()).expect("generated edges are valid")
}
