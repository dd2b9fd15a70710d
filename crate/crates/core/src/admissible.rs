//! Admissible triples and the greedy 126-color partition.
//!
//! A triple `(X1, X2, X3)` of disjoint vertex sets is admissible when no two
//! vertices of one part are joined by a simple path of length 1, 3 or 5, and
//! no two vertices of different parts are joined by a simple path of length
//! 1, 2 or 4.
//!
//! [`greedy_partition`] colors a connected triangle-free subcubic graph of
//! girth 4 to 6 with colors `1..=126` so that each color block
//! `{3i-2, 3i-1, 3i}` is an admissible triple. The vertex order keeps every
//! suffix connected and ends with an adjacent pair on a shortest cycle,
//! which is what keeps the number of forbidden colors below 126.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, PathNeighborhoods, Vertex, VertexSet};

pub const PALETTE: usize = 126;
pub const MAX_TRIPLES: usize = PALETTE / 3;
/// Bound on forbidden colors for every vertex but the last two.
pub const STEP_BOUND: usize = 124;

/// Bound on forbidden colors for the final two vertices, by the length of the
/// cycle they lie on.
pub fn endgame_bound(cycle_len: usize) -> Option<usize> {
    match cycle_len {
        4 => Some(123),
        5 => Some(124),
        6 => Some(122),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AdmissibleTriple {
    #[serde(rename = "X1")]
    pub x1: VertexSet,
    #[serde(rename = "X2")]
    pub x2: VertexSet,
    #[serde(rename = "X3")]
    pub x3: VertexSet,
}

impl AdmissibleTriple {
    pub fn new(x1: impl Into<VertexSet>, x2: impl Into<VertexSet>, x3: impl Into<VertexSet>) -> Self {
        Self {
            x1: x1.into(),
            x2: x2.into(),
            x3: x3.into(),
        }
    }

    pub fn parts(&self) -> [&VertexSet; 3] {
        [&self.x1, &self.x2, &self.x3]
    }

    /// `X = X1 ∪ X2 ∪ X3`.
    pub fn union(&self) -> VertexSet {
        self.x1.union(&self.x2).union(&self.x3)
    }

    /// Index (0-based) of the part holding `v`.
    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.parts().iter().position(|p| p.contains(v))
    }

    pub fn is_empty(&self) -> bool {
        self.parts().iter().all(|p| p.is_empty())
    }
}

/// First reason a triple fails to be admissible. Parts are numbered 1..=3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityViolation {
    #[error("vertex {0} is not in the graph")]
    OutOfRange(Vertex),
    #[error("vertex {vertex} lies in parts {first} and {second}")]
    Overlap { vertex: Vertex, first: usize, second: usize },
    #[error("{u} and {v} share part {part} but are joined by a path of length {length}")]
    SamePart { part: usize, u: Vertex, v: Vertex, length: usize },
    #[error("{u} (part {part_u}) and {v} (part {part_v}) are joined by a path of length {length}")]
    CrossPart {
        part_u: usize,
        part_v: usize,
        u: Vertex,
        v: Vertex,
        length: usize,
    },
}

pub fn is_admissible(g: &Graph, t: &AdmissibleTriple) -> bool {
    check_admissible(g, t).is_ok()
}

/// Checks both conditions over all pairs, scanning `u` in increasing order.
pub fn check_admissible(g: &Graph, t: &AdmissibleTriple) -> Result<(), AdmissibilityViolation> {
    let parts = t.parts();
    for (i, p) in parts.iter().enumerate() {
        if let Some(v) = p.iter().find(|&v| v >= g.n()) {
            return Err(AdmissibilityViolation::OutOfRange(v));
        }
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if let Some(v) = p.intersection(q).iter().next() {
                return Err(AdmissibilityViolation::Overlap {
                    vertex: v,
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }
    for u in t.union().iter() {
        let pu = t.part_of(u).expect("u is in X");
        let nb = g.path_neighborhoods(u);
        for (pv, part) in parts.iter().enumerate() {
            let lengths: &[usize] = if pv == pu { &[1, 3, 5] } else { &[1, 2, 4] };
            for &length in lengths {
                if let Some(v) = nb.at(length).intersection(part).iter().next() {
                    return Err(if pv == pu {
                        AdmissibilityViolation::SamePart {
                            part: pu + 1,
                            u,
                            v,
                            length,
                        }
                    } else {
                        AdmissibilityViolation::CrossPart {
                            part_u: pu + 1,
                            part_v: pv + 1,
                            u,
                            v,
                            length,
                        }
                    });
                }
            }
        }
    }
    Ok(())
}

/// Ordered admissible triples covering the host graph, identified by its
/// content hash.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissiblePartition {
    pub graph_hash: String,
    pub triples: Vec<AdmissibleTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("partition was built for another graph")]
    HashMismatch,
    #[error("vertex {0} is not covered")]
    Uncovered(Vertex),
    #[error("vertex {0} is covered more than once")]
    CoveredTwice(Vertex),
    #[error("triple {index}: {violation}")]
    NotAdmissible {
        index: usize,
        violation: AdmissibilityViolation,
    },
}

impl AdmissiblePartition {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Exact cover of `V(g)` by admissible triples.
    pub fn check(&self, g: &Graph) -> Result<(), PartitionViolation> {
        if self.graph_hash != g.content_hash() {
            return Err(PartitionViolation::HashMismatch);
        }
        for (index, t) in self.triples.iter().enumerate() {
            check_admissible(g, t).map_err(|violation| PartitionViolation::NotAdmissible { index, violation })?;
        }
        let mut seen = vec![false; g.n()];
        for t in &self.triples {
            for v in t.union().iter() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionViolation::CoveredTwice(v));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(PartitionViolation::Uncovered(v)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("graph has a triangle")]
    NotTriangleFree,
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooHigh(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("girth {0:?} is outside 4..=6")]
    GirthOutOfRange(Option<usize>),
    #[error("reserved pair ({0}, {1}) is not an edge")]
    ReservedNotAdjacent(Vertex, Vertex),
    #[error("no feasible color for vertex {vertex} (step {step}, {forbidden} colors forbidden)")]
    NoFeasibleColor { vertex: Vertex, step: usize, forbidden: usize },
}

/// Forbidden-color count observed for one of the final two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndgameRecord {
    pub vertex: Vertex,
    pub forbidden: usize,
    pub cycle_len: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyPartition {
    pub partition: AdmissiblePartition,
    /// Color in `1..=126` per vertex.
    pub coloring: Vec<usize>,
    pub order: Vec<Vertex>,
    /// Forbidden-color count when each vertex of `order` was colored.
    pub forbidden: Vec<usize>,
    pub witness_cycle: Vec<Vertex>,
    pub endgame: [EndgameRecord; 2],
}

impl GreedyPartition {
    pub fn max_step_forbidden(&self) -> usize {
        let steps = self.forbidden.len().saturating_sub(2);
        self.forbidden[..steps].iter().copied().max().unwrap_or(0)
    }
}

/// Order ending with `reserved` in which every suffix induces a connected
/// subgraph. Built by growing a connected set outward from the reserved pair
/// and reversing. With `rng`, the next vertex is drawn at random from the
/// frontier; otherwise the smallest frontier vertex is taken.
pub fn elimination_order(
    g: &Graph,
    reserved: (Vertex, Vertex),
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<Vec<Vertex>, PartitionError> {
    let (a, b) = reserved;
    if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
        return Err(PartitionError::ReservedNotAdjacent(a, b));
    }
    let mut inside = vec![false; g.n()];
    let mut on_frontier = vec![false; g.n()];
    let mut frontier: Vec<Vertex> = Vec::new();
    let mut grown: Vec<Vertex> = Vec::new();
    let mut absorb = |v: Vertex, inside: &mut Vec<bool>, frontier: &mut Vec<Vertex>| {
        inside[v] = true;
        for &w in g.neighbors(v) {
            if !inside[w] && !on_frontier[w] {
                on_frontier[w] = true;
                frontier.push(w);
            }
        }
    };
    absorb(a, &mut inside, &mut frontier);
    absorb(b, &mut inside, &mut frontier);
    frontier.retain(|&v| !inside[v]);
    while !frontier.is_empty() {
        let idx = match rng.as_deref_mut() {
            Some(r) => r.gen_range(0..frontier.len()),
            None => (0..frontier.len()).min_by_key(|&i| frontier[i]).expect("nonempty"),
        };
        let v = frontier.swap_remove(idx);
        grown.push(v);
        absorb(v, &mut inside, &mut frontier);
    }
    if grown.len() + 2 != g.n() {
        return Err(PartitionError::Disconnected);
    }
    grown.reverse();
    grown.extend([a, b]);
    Ok(grown)
}

fn block_of(color: usize) -> usize {
    (color - 1) / 3
}

/// Greedy 126-coloring whose color blocks are admissible triples.
///
/// Seed 0 is canonical: the lexicographically smallest shortest cycle, its
/// first edge as the reserved pair, and the smallest frontier vertex at each
/// step. Other seeds draw the reserved edge on the cycle and the frontier
/// order at random, which changes the partition itself (relabeling blocks
/// alone would not). Colors are always the smallest feasible.
pub fn greedy_partition(g: &Graph, seed: u64) -> Result<GreedyPartition, PartitionError> {
    if !g.is_triangle_free() {
        return Err(PartitionError::NotTriangleFree);
    }
    if g.max_degree() > 3 {
        return Err(PartitionError::DegreeTooHigh(g.max_degree()));
    }
    if !g.is_connected() {
        return Err(PartitionError::Disconnected);
    }
    let cycle = match g.shortest_cycle() {
        Some(c) if (4..=6).contains(&c.len()) => c,
        other => return Err(PartitionError::GirthOutOfRange(other.map(|c| c.len()))),
    };
    let mut rng = (seed != 0).then(|| ChaCha8Rng::seed_from_u64(seed));
    let i = match rng.as_mut() {
        Some(r) => r.gen_range(0..cycle.len()),
        None => 0,
    };
    let mut pair = (cycle[i], cycle[(i + 1) % cycle.len()]);
    if let Some(r) = rng.as_mut() {
        if r.gen_bool(0.5) {
            pair = (pair.1, pair.0);
        }
    }
    let order = elimination_order(g, pair, rng.as_mut())?;

    let nbs: Vec<PathNeighborhoods> = g.vertices().map(|v| g.path_neighborhoods(v)).collect();
    let mut color = vec![0usize; g.n()];
    let mut forbidden_counts = Vec::with_capacity(g.n());
    for (step, &v) in order.iter().enumerate() {
        let mut forbidden = [false; PALETTE + 1];
        let nb = &nbs[v];
        for u in nb.at(1).iter().filter(|&u| color[u] != 0) {
            let base = 3 * block_of(color[u]);
            forbidden[base + 1..=base + 3].iter_mut().for_each(|f| *f = true);
        }
        for i in [3, 5] {
            for u in nb.at(i).iter().filter(|&u| color[u] != 0) {
                forbidden[color[u]] = true;
            }
        }
        for i in [2, 4] {
            for u in nb.at(i).iter().filter(|&u| color[u] != 0) {
                let base = 3 * block_of(color[u]);
                for h in base + 1..=base + 3 {
                    if h != color[u] {
                        forbidden[h] = true;
                    }
                }
            }
        }
        let count = forbidden[1..].iter().filter(|&&f| f).count();
        forbidden_counts.push(count);
        color[v] = (1..=PALETTE)
            .find(|&h| !forbidden[h])
            .ok_or(PartitionError::NoFeasibleColor {
                vertex: v,
                step,
                forbidden: count,
            })?;
    }

    let mut triples = vec![AdmissibleTriple::default(); MAX_TRIPLES];
    for v in g.vertices() {
        let t = &mut triples[block_of(color[v])];
        match (color[v] - 1) % 3 {
            0 => t.x1.insert(v),
            1 => t.x2.insert(v),
            _ => t.x3.insert(v),
        };
    }
    triples.retain(|t| !t.is_empty());

    let n = g.n();
    let bound = endgame_bound(cycle.len()).expect("girth checked");
    let endgame = [n - 2, n - 1].map(|i| EndgameRecord {
        vertex: order[i],
        forbidden: forbidden_counts[i],
        cycle_len: cycle.len(),
        bound,
    });
    Ok(GreedyPartition {
        partition: AdmissiblePartition {
            graph_hash: g.content_hash(),
            triples,
        },
        coloring: color,
        order,
        forbidden: forbidden_counts,
        witness_cycle: cycle,
        endgame,
    })
}
