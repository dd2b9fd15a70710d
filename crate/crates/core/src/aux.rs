//! The auxiliary graph `G′(X)` of an admissible triple, exact small-graph
//! coloring, and the constructive 3-coloring of a split odd wheel.
//!
//! `G′(X)` deletes `X`, contracts each `Y_i = Γ(X_i)` to a hub `y_i` and joins
//! the three hubs in a triangle. A proper 3-coloring of `G′(X_i)` for every
//! triple of a partition is the input of the fold composer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::admissible::{AdmissibilityViolation, AdmissibleTriple};
use crate::graph::{Graph, Vertex, VertexSet};

pub type Color = u8;

/// Backtracking-node budget for [`three_color`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuxError {
    #[error("malformed triple: {0}")]
    Triple(AdmissibilityViolation),
    #[error("Y{hub} contains the edge ({u}, {v})")]
    HubNotIndependent { hub: usize, u: Vertex, v: Vertex },
    #[error("vertex {vertex} lies in both Y{first} and Y{second}")]
    HubsOverlap { vertex: Vertex, first: usize, second: usize },
    #[error("vertex {vertex} of X{part} is adjacent to X")]
    XNotIsolated { vertex: Vertex, part: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub graph: Graph,
    /// Quotient vertices of `y1, y2, y3`; always the last three.
    pub hubs: [Vertex; 3],
    /// Original vertices behind each quotient vertex: `Y_i` for hub `i`, a
    /// singleton otherwise.
    pub back_map: Vec<VertexSet>,
    /// Quotient vertex of each original vertex, `None` for vertices of `X`.
    pub image: Vec<Option<Vertex>>,
}

impl AuxGraph {
    /// Colors `G′` with hubs forced to 1, 2, 3.
    pub fn three_color(&self) -> ColoringOutcome {
        self.three_color_with_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn three_color_with_budget(&self, budget: u64) -> ColoringOutcome {
        let forced = [(self.hubs[0], 1), (self.hubs[1], 2), (self.hubs[2], 3)];
        color_search(&self.graph, 3, &forced, budget)
    }
}

/// Builds `G′(X)`. Non-`X`, non-`Y` vertices keep their relative order and
/// come first, followed by the hubs `y1, y2, y3`.
pub fn build_aux(g: &Graph, t: &AdmissibleTriple) -> Result<AuxGraph, AuxError> {
    let parts = t.parts();
    for (i, p) in parts.iter().enumerate() {
        if let Some(v) = p.iter().find(|&v| v >= g.n()) {
            return Err(AuxError::Triple(AdmissibilityViolation::OutOfRange(v)));
        }
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if let Some(v) = p.intersection(q).iter().next() {
                return Err(AuxError::Triple(AdmissibilityViolation::Overlap {
                    vertex: v,
                    first: i + 1,
                    second: j + 1,
                }));
            }
        }
    }
    let x = t.union();
    let mut hub_of: Vec<Option<usize>> = vec![None; g.n()];
    let mut ys: [VertexSet; 3] = Default::default();
    for (i, p) in parts.iter().enumerate() {
        for u in p.iter() {
            for &w in g.neighbors(u) {
                if x.contains(w) {
                    return Err(AuxError::XNotIsolated { vertex: u, part: i + 1 });
                }
                match hub_of[w] {
                    Some(j) if j != i => {
                        return Err(AuxError::HubsOverlap {
                            vertex: w,
                            first: j.min(i) + 1,
                            second: j.max(i) + 1,
                        })
                    }
                    _ => {
                        hub_of[w] = Some(i);
                        ys[i].insert(w);
                    }
                }
            }
        }
    }
    for (i, y) in ys.iter().enumerate() {
        for u in y.iter() {
            if let Some(&w) = g.neighbors(u).iter().find(|&&w| w > u && y.contains(w)) {
                return Err(AuxError::HubNotIndependent { hub: i + 1, u, v: w });
            }
        }
    }

    let mut image = vec![None; g.n()];
    let mut back_map = Vec::new();
    for v in g.vertices() {
        if !x.contains(v) && hub_of[v].is_none() {
            image[v] = Some(back_map.len());
            back_map.push(VertexSet::singleton(v));
        }
    }
    let r = back_map.len();
    let hubs = [r, r + 1, r + 2];
    for (i, y) in ys.iter().enumerate() {
        for v in y.iter() {
            image[v] = Some(hubs[i]);
        }
        back_map.push(y.clone());
    }
    let mut edges = vec![(hubs[0], hubs[1]), (hubs[1], hubs[2]), (hubs[0], hubs[2])];
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (image[u], image[v]) {
            if a != b {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::new(r + 3, edges).expect("quotient edges are valid");
    Ok(AuxGraph {
        graph,
        hubs,
        back_map,
        image,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    /// Colors in `1..=k`, one per vertex.
    Colorable(Vec<Color>),
    NotColorable,
    /// The node budget ran out before the search finished.
    Undecided,
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&[Color]> {
        match self {
            ColoringOutcome::Colorable(c) => Some(c),
            _ => None,
        }
    }
}

pub fn three_color(g: &Graph, forced: &[(Vertex, Color)]) -> ColoringOutcome {
    color_search(g, 3, forced, DEFAULT_NODE_BUDGET)
}

/// Exact `k`-coloring by saturation-ordered backtracking, run per connected
/// component. `forced` pins colors of chosen vertices.
pub fn color_search(g: &Graph, k: Color, forced: &[(Vertex, Color)], budget: u64) -> ColoringOutcome {
    let mut color = vec![0 as Color; g.n()];
    for &(v, c) in forced {
        if v >= g.n() || c == 0 || c > k {
            return ColoringOutcome::NotColorable;
        }
        if color[v] != 0 && color[v] != c {
            return ColoringOutcome::NotColorable;
        }
        color[v] = c;
    }
    if g.edges().any(|(u, v)| color[u] != 0 && color[u] == color[v]) {
        return ColoringOutcome::NotColorable;
    }
    let mut search = Search {
        g,
        k,
        color,
        nodes: 0,
        budget,
    };
    for comp in g.components() {
        let mut free: Vec<Vertex> = comp.iter().filter(|&v| search.color[v] == 0).collect();
        match search.run(&mut free) {
            Some(true) => {}
            Some(false) => return ColoringOutcome::NotColorable,
            None => return ColoringOutcome::Undecided,
        }
    }
    ColoringOutcome::Colorable(search.color)
}

struct Search<'a> {
    g: &'a Graph,
    k: Color,
    color: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn used_mask(&self, v: Vertex) -> u128 {
        self.g
            .neighbors(v)
            .iter()
            .fold(0u128, |m, &w| if self.color[w] != 0 { m | (1 << self.color[w]) } else { m })
    }

    /// `Some(true)` if `free` can be colored, `None` when over budget.
    fn run(&mut self, free: &mut Vec<Vertex>) -> Option<bool> {
        if free.is_empty() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        // most saturated, then most uncolored neighbors, then smallest index
        let (idx, _) = free
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let sat = self.used_mask(v).count_ones();
                let open = self.g.neighbors(v).iter().filter(|&&w| self.color[w] == 0).count();
                (i, (sat, open, std::cmp::Reverse(v)))
            })
            .max_by_key(|&(_, key)| key)
            .expect("free is nonempty");
        let v = free.swap_remove(idx);
        let used = self.used_mask(v);
        for c in 1..=self.k {
            if used & (1 << c) != 0 {
                continue;
            }
            self.color[v] = c;
            match self.run(free) {
                Some(false) => {}
                other => return other,
            }
        }
        self.color[v] = 0;
        free.push(v);
        let last = free.len() - 1;
        free.swap(idx, last);
        Some(false)
    }
}

/// Smallest `k` admitting a proper coloring (exhaustive; small graphs only).
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| matches!(color_search(g, k as Color, &[], u64::MAX), ColoringOutcome::Colorable(_)))
        .expect("n colors always suffice")
}

/// Edge-minimal subgraph (same vertex set) that is still not 3-colorable
/// under `forced`, found by deleting edges greedily. `None` if `g` is
/// 3-colorable or the budget runs out.
pub fn critical_witness(g: &Graph, forced: &[(Vertex, Color)], budget: u64) -> Option<Graph> {
    if color_search(g, 3, forced, budget) != ColoringOutcome::NotColorable {
        return None;
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::new(g.n(), trial.iter().copied()).expect("subset of valid edges");
        match color_search(&h, 3, forced, budget) {
            ColoringOutcome::NotColorable => edges = trial,
            ColoringOutcome::Colorable(_) => i += 1,
            ColoringOutcome::Undecided => return None,
        }
    }
    Some(Graph::new(g.n(), edges).expect("subset of valid edges"))
}

/// An odd cycle `x_0 … x_{2k}` whose vertices each attach to one of three
/// hubs forming a triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HubSplitInstance {
    pub k: usize,
    /// Hub (1, 2 or 3) of each cycle position.
    pub attachment: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HubSplitError {
    #[error("expected {expected} attachments, got {got}")]
    Length { expected: usize, got: usize },
    #[error("attachment {0} is not a hub in 1..=3")]
    BadHub(Color),
    #[error("more than one hub has no attachments")]
    TwoBareHubs,
    #[error("hub 1 has no attachments")]
    NoHubOneSpokes,
}

impl HubSplitInstance {
    pub fn new(k: usize, attachment: Vec<Color>) -> Result<Self, HubSplitError> {
        if k == 0 || attachment.len() != 2 * k + 1 {
            return Err(HubSplitError::Length {
                expected: 2 * k + 1,
                got: attachment.len(),
            });
        }
        if let Some(&h) = attachment.iter().find(|&&h| !(1..=3).contains(&h)) {
            return Err(HubSplitError::BadHub(h));
        }
        let bare = (1..=3).filter(|h| !attachment.contains(h)).count();
        if bare > 1 {
            return Err(HubSplitError::TwoBareHubs);
        }
        Ok(Self { k, attachment })
    }

    pub fn cycle_len(&self) -> usize {
        self.attachment.len()
    }

    /// `H`: cycle on `0..2k+1`, hubs `y1, y2, y3` numbered `2k+1 ..= 2k+3`.
    pub fn graph(&self) -> Graph {
        let len = self.cycle_len();
        let hub = |h: Color| len + h as usize - 1;
        let mut edges: Vec<(Vertex, Vertex)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        edges.extend(self.attachment.iter().enumerate().map(|(i, &h)| (i, hub(h))));
        edges.extend([(hub(1), hub(2)), (hub(2), hub(3)), (hub(1), hub(3))]);
        Graph::new(len + 3, edges).expect("hub-split edges are valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalType {
    I,
    II,
    III,
    IV,
    /// Two consecutive hub-1 spokes.
    Empty,
}

impl IntervalType {
    /// Whether any coloring of the cycle vertices between spokes colored
    /// `(cu, cv)` extends properly, for hubs colored 1, 2, 3.
    pub fn extends(self, cu: Color, cv: Color) -> bool {
        match self {
            IntervalType::I => (cu, cv) != (3, 3),
            IntervalType::II => (cu, cv) != (3, 2),
            IntervalType::III => (cu, cv) != (2, 3),
            IntervalType::IV => (cu, cv) != (2, 2),
            IntervalType::Empty => cu != cv,
        }
    }

    /// Spoke colors around intervals of types II and III stay equal; all
    /// other types switch.
    fn keeps_color(self) -> bool {
        matches!(self, IntervalType::II | IntervalType::III)
    }
}

/// Run of non-spoke cycle positions between consecutive hub-1 spokes `u` and
/// `v`, in cyclic order from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub u: usize,
    pub v: usize,
    pub positions: Vec<usize>,
    /// Hub labels along the run with repeats collapsed, e.g. `[2, 3, 2]`.
    pub pattern: Vec<Color>,
    pub kind: IntervalType,
}

impl Interval {
    /// A run attached to a single hub.
    pub fn is_degenerate(&self) -> bool {
        self.pattern.len() == 1
    }
}

fn intervals_from(labels: &[Color], x0: usize) -> Vec<Interval> {
    let len = labels.len();
    let spokes: Vec<usize> = (0..len).map(|i| (x0 + i) % len).filter(|&p| labels[p] == 1).collect();
    let m = spokes.len();
    (0..m)
        .map(|t| {
            let u = spokes[t];
            let v = spokes[(t + 1) % m];
            let gap = (v + len - u - 1) % len;
            let gap = if m == 1 { len - 1 } else { gap };
            let positions: Vec<usize> = (1..=gap).map(|d| (u + d) % len).collect();
            let mut pattern: Vec<Color> = positions.iter().map(|&p| labels[p]).collect();
            pattern.dedup();
            let kind = match (pattern.first(), pattern.last()) {
                (None, _) | (_, None) => IntervalType::Empty,
                (Some(2), Some(2)) => IntervalType::I,
                (Some(2), Some(3)) => IntervalType::II,
                (Some(3), Some(2)) => IntervalType::III,
                _ => IntervalType::IV,
            };
            Interval {
                u,
                v,
                positions,
                pattern,
                kind,
            }
        })
        .collect()
}

/// Intervals cut out by the hub-1 spokes, starting at the smallest spoke.
pub fn classify_intervals(inst: &HubSplitInstance) -> Result<Vec<Interval>, HubSplitError> {
    let x0 = inst
        .attachment
        .iter()
        .position(|&h| h == 1)
        .ok_or(HubSplitError::NoHubOneSpokes)?;
    Ok(intervals_from(&inst.attachment, x0))
}

/// Proper 3-coloring of `H` (numbered as in [`HubSplitInstance::graph`])
/// with hub `j` colored `j`.
///
/// Hubs are relabeled so a bare hub, if any, is `y3`. Spokes of `y1` are
/// colored around the cycle so that every interval keeps or switches the
/// spoke color by its type; if the closing interval then has no extension,
/// colors 2 and 3 are swapped on all spokes. Each interval then has a free
/// end (its hub and outer spoke share a color) and is filled greedily
/// toward it.
pub fn hub_split_three_color(inst: &HubSplitInstance) -> Vec<Color> {
    let len = inst.cycle_len();
    let bare = (1..=3).find(|h| !inst.attachment.contains(h));
    // relabel[h - 1]: working label of original hub h
    let relabel: [Color; 3] = match bare {
        Some(1) => [3, 1, 2],
        Some(2) => [1, 3, 2],
        _ => [1, 2, 3],
    };
    let labels: Vec<Color> = inst.attachment.iter().map(|&h| relabel[h as usize - 1]).collect();
    let x0 = (0..len)
        .find(|&p| labels[p] == 1 && labels[(p + len - 1) % len] != 1)
        .expect("hub 1 and hub 2 both have spokes");
    let intervals = intervals_from(&labels, x0);

    let mut c: Vec<Color> = vec![0; len];
    c[intervals[0].u] = 2;
    for iv in &intervals[..intervals.len() - 1] {
        c[iv.v] = if iv.kind.keeps_color() { c[iv.u] } else { 5 - c[iv.u] };
    }
    let last = intervals.last().expect("at least one spoke");
    if !last.kind.extends(c[last.u], c[last.v]) {
        for iv in &intervals {
            c[iv.u] = 5 - c[iv.u];
        }
    }
    for iv in &intervals {
        assert!(iv.kind.extends(c[iv.u], c[iv.v]), "no extension for {iv:?} in {inst:?}");
    }

    for iv in intervals.iter().filter(|iv| !iv.positions.is_empty()) {
        let first = iv.positions[0];
        let right_free = c[iv.v] == labels[*iv.positions.last().expect("nonempty")];
        let left_free = c[iv.u] == labels[first];
        debug_assert!(right_free || left_free);
        let mut run = iv.positions.clone();
        if !right_free {
            run.reverse();
        }
        for p in run {
            let mut used = 1u8 << labels[p];
            for q in [(p + 1) % len, (p + len - 1) % len] {
                if c[q] != 0 {
                    used |= 1 << c[q];
                }
            }
            c[p] = (1..=3)
                .find(|&h| used & (1 << h) == 0)
                .unwrap_or_else(|| panic!("greedy fill stuck at {p} in {inst:?}"));
        }
    }

    // working color w belongs to the original hub h with relabel[h - 1] == w
    let mut to_original = [0 as Color; 4];
    for h in 1..=3u8 {
        to_original[relabel[h as usize - 1] as usize] = h;
    }
    let mut out: Vec<Color> = c.iter().map(|&w| to_original[w as usize]).collect();
    out.extend([1, 2, 3]);
    let h = inst.graph();
    assert!(
        h.edges().all(|(a, b)| out[a] != out[b]),
        "hub-split coloring is not proper for {inst:?}"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::is_admissible;
    use crate::graph::catalog;

    fn vs<const N: usize>(a: [Vertex; N]) -> VertexSet {
        VertexSet::from(a)
    }

    #[test]
    fn c6_aux_is_a_triangle() {
        let aux = build_aux(&catalog::cycle(6), &AdmissibleTriple::new(vs([0]), vs([3]), vs([]))).unwrap();
        assert_eq!(aux.graph, catalog::complete(3));
        assert_eq!(aux.back_map, vec![vs([1, 5]), vs([2, 4]), vs([])]);
        assert_eq!(aux.image[0], None);
    }

    #[test]
    fn c4_aux_is_a_triangle() {
        let aux = build_aux(&catalog::cycle(4), &AdmissibleTriple::new(vs([0, 2]), vs([]), vs([]))).unwrap();
        assert_eq!(aux.graph, catalog::complete(3));
        assert_eq!(aux.back_map[0], vs([1, 3]));
    }

    #[test]
    fn empty_triple_adds_a_disjoint_triangle() {
        let g = catalog::generalized_petersen(7, 2).unwrap();
        let aux = build_aux(&g, &AdmissibleTriple::default()).unwrap();
        assert_eq!(aux.graph, g.disjoint_union(&catalog::complete(3)));
    }

    #[test]
    fn malformed_triples_are_rejected() {
        let c6 = catalog::cycle(6);
        assert!(matches!(
            build_aux(&c6, &AdmissibleTriple::new(vs([0]), vs([2]), vs([]))),
            Err(AuxError::HubsOverlap { vertex: 1, .. })
        ));
        assert!(matches!(
            build_aux(&c6, &AdmissibleTriple::new(vs([0, 3]), vs([]), vs([]))),
            Err(AuxError::HubNotIndependent { hub: 1, .. })
        ));
        assert!(matches!(
            build_aux(&c6, &AdmissibleTriple::new(vs([0, 1]), vs([]), vs([]))),
            Err(AuxError::XNotIsolated { .. })
        ));
    }

    fn brute_force_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut c = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| c[u] != c[v]) {
                return true;
            }
            let mut i = 0;
            while i < n && c[i] == k - 1 {
                c[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
            c[i] += 1;
        }
    }

    #[test]
    fn search_agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.2..0.8);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let got = matches!(three_color(&g, &[]), ColoringOutcome::Colorable(_));
            assert_eq!(got, brute_force_colorable(&g, 3), "{}", g.to_edge_list());
            if let ColoringOutcome::Colorable(c) = three_color(&g, &[]) {
                assert!(g.edges().all(|(u, v)| c[u] != c[v]));
            }
        }
    }

    #[test]
    fn odd_wheel_is_four_chromatic() {
        let inst = HubSplitInstance::new(2, vec![1; 5]);
        assert_eq!(inst, Err(HubSplitError::TwoBareHubs));
        // W5 built directly
        let w5 = Graph::new(6, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)])).unwrap();
        assert_eq!(chromatic_number(&w5), 4);
        let witness = critical_witness(&w5, &[], DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(witness.edge_count(), 10);
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let g = catalog::generalized_petersen(7, 2).unwrap().disjoint_union(&catalog::complete(4));
        assert_eq!(color_search(&g, 3, &[], 3), ColoringOutcome::Undecided);
        assert_eq!(color_search(&g, 3, &[], u64::MAX), ColoringOutcome::NotColorable);
    }

    /// Wheel gadget: a 5-cycle whose vertices reach one vertex `x` through
    /// three middle vertices. `G′({x})` is a 5-wheel glued to the hub
    /// triangle.
    fn wheel_gadget() -> Graph {
        // x=0, w1=1, w2=2, w3=3, cycle v1..v5 = 4..8
        Graph::new(
            9,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 6),
                (2, 5),
                (2, 7),
                (3, 8),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn wheel_gadget_quotient_is_four_chromatic() {
        let one = wheel_gadget();
        assert!(one.is_triangle_free() && one.max_degree() <= 3);
        let g = one.disjoint_union(&one).disjoint_union(&one);
        let t = AdmissibleTriple::new(vs([0]), vs([9]), vs([18]));
        assert!(is_admissible(&g, &t));
        let aux = build_aux(&g, &t).unwrap();
        assert_eq!(aux.graph.n(), 18);
        assert_eq!(aux.three_color(), ColoringOutcome::NotColorable);
        assert_eq!(chromatic_number(&aux.graph), 4);
        let forced = [(aux.hubs[0], 1), (aux.hubs[1], 2), (aux.hubs[2], 3)];
        let w = critical_witness(&aux.graph, &forced, DEFAULT_NODE_BUDGET).unwrap();
        assert!(w.edge_count() < aux.graph.edge_count());
    }

    #[test]
    fn aux_degree_invariants() {
        use crate::admissible::greedy_partition;
        use crate::graph::generate::{random_subcubic_triangle_free, GenConfig};
        for seed in 0..30 {
            let cfg = GenConfig {
                n: 12 + seed as usize,
                seed,
                girth_max: Some(6),
                two_connected: true,
            };
            let g = random_subcubic_triangle_free(&cfg).unwrap();
            let gp = greedy_partition(&g, 0).unwrap();
            for t in &gp.partition.triples {
                let aux = build_aux(&g, t).unwrap();
                for q in 0..aux.hubs[0] {
                    let hub_nbrs = aux.graph.neighbors(q).iter().filter(|&&w| w >= aux.hubs[0]).count();
                    assert!(aux.graph.degree(q) <= 3);
                    assert!(hub_nbrs <= 1);
                }
                // non-Y survivors keep their adjacency
                for (u, v) in g.edges() {
                    if let (Some(a), Some(b)) = (aux.image[u], aux.image[v]) {
                        if a < aux.hubs[0] && b < aux.hubs[0] {
                            assert!(aux.graph.has_edge(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interval_types() {
        let inst = HubSplitInstance::new(2, vec![1, 2, 3, 2, 1]).unwrap();
        let ivs = classify_intervals(&inst).unwrap();
        assert_eq!(ivs.len(), 2);
        assert_eq!((ivs[0].kind, ivs[0].pattern.clone()), (IntervalType::I, vec![2, 3, 2]));
        assert_eq!(ivs[1].kind, IntervalType::Empty);
        let inst = HubSplitInstance::new(2, vec![1, 2, 2, 3, 1]).unwrap();
        assert_eq!(classify_intervals(&inst).unwrap()[0].kind, IntervalType::II);
        let inst = HubSplitInstance::new(2, vec![1, 2, 2, 1, 2]).unwrap();
        let ivs = classify_intervals(&inst).unwrap();
        assert!(ivs.iter().all(|iv| iv.is_degenerate() && iv.kind == IntervalType::I));
        let bare1 = HubSplitInstance::new(2, vec![2, 3, 2, 3, 3]).unwrap();
        assert_eq!(classify_intervals(&bare1), Err(HubSplitError::NoHubOneSpokes));
    }

    #[test]
    fn table_matches_free_end_rule() {
        // an entry extends iff an end's hub label equals its spoke color
        for (kind, first, last) in [
            (IntervalType::I, 2, 2),
            (IntervalType::II, 2, 3),
            (IntervalType::III, 3, 2),
            (IntervalType::IV, 3, 3),
        ] {
            for cu in [2, 3] {
                for cv in [2, 3] {
                    assert_eq!(kind.extends(cu, cv), cu == first || cv == last);
                }
            }
        }
    }

    #[test]
    fn hub_split_examples() {
        for att in [vec![1, 2, 3, 2, 3], vec![1, 2, 2, 3, 3], vec![2, 2, 2, 3, 3], vec![3, 1, 3, 1, 3]] {
            let inst = HubSplitInstance::new(2, att).unwrap();
            let c = hub_split_three_color(&inst);
            assert_eq!(&c[5..], &[1, 2, 3]);
            let h = inst.graph();
            assert!(h.edges().all(|(a, b)| c[a] != c[b]));
        }
    }

    #[test]
    fn hub_split_random_large_k() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 2000 {
            let k = rng.gen_range(2..=8);
            let att: Vec<Color> = (0..2 * k + 1).map(|_| rng.gen_range(1..=3)).collect();
            if let Ok(inst) = HubSplitInstance::new(k, att) {
                hub_split_three_color(&inst);
                done += 1;
            }
        }
    }
}
