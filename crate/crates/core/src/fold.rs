//! b-fold colorings and their algebra.
//!
//! A [`FoldColoring`] gives every vertex a set of `b` color ids so that
//! adjacent vertices get disjoint sets. Colorings add (disjoint union of the
//! color sets), scale, and are compared through their [`VennSignature`]: for
//! every color, the set of vertices that use it, counted with multiplicity.
//! Two colorings with the same fold are isomorphic exactly when their
//! signatures agree, and two colorings are equivalent (represent the same
//! fractional coloring) exactly when their signatures divided by their folds
//! agree.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

pub type ColorId = u64;
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldViolation {
    #[error("coloring covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("fold must be at least 1")]
    ZeroFold,
    #[error("vertex {vertex} has {found} colors, expected {expected}")]
    WrongFold { vertex: Vertex, expected: usize, found: usize },
    #[error("vertex {vertex} lists color {color} twice")]
    DuplicateColor { vertex: Vertex, color: ColorId },
    #[error("adjacent vertices {u} and {v} share color {color}")]
    SharedColor { u: Vertex, v: Vertex, color: ColorId },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldError {
    #[error("colorings live on different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("convex weight {0} outside [0, 1]")]
    LambdaOutOfRange(String),
    #[error("the zero-fold coloring has no fractional value")]
    ZeroFold,
    #[error("vertex {0} is not in the host graph")]
    NotInGraph(Vertex),
    #[error("subgraphs do not cover edge ({0}, {1})")]
    EdgeNotCovered(Vertex, Vertex),
    #[error("restrictions to the shared part differ: {0}")]
    GlueMismatch(String),
}

/// Per-vertex color sets with a common fold `b`. Instances built by this
/// crate are valid; data read from outside is checked with [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldColoring {
    b: usize,
    colors: Vec<Vec<ColorId>>,
}

impl FoldColoring {
    /// Sorts and stores the given sets; no validity check.
    pub fn new(b: usize, colors: Vec<Vec<ColorId>>) -> Self {
        let colors = colors
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Self { b, colors }
    }

    /// The identity `0` of addition on `n` vertices.
    pub fn zero(n: usize) -> Self {
        Self {
            b: 0,
            colors: vec![Vec::new(); n],
        }
    }

    /// A proper 1-fold coloring from a color index per vertex.
    pub fn from_proper(classes: &[ColorId]) -> Self {
        Self {
            b: 1,
            colors: classes.iter().map(|&c| vec![c]).collect(),
        }
    }

    pub fn fold(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors_of(&self, v: Vertex) -> &[ColorId] {
        &self.colors[v]
    }

    pub fn palette(&self) -> BTreeSet<ColorId> {
        self.colors.iter().flatten().copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// `|A(c)| / b`.
    pub fn ratio(&self) -> Result<Rational, FoldError> {
        if self.b == 0 {
            return Err(FoldError::ZeroFold);
        }
        Ok(Rational::new(self.palette_size().into(), self.b.into()))
    }

    fn max_id(&self) -> Option<ColorId> {
        self.colors.iter().flatten().copied().max()
    }

    /// Renumbers the palette to `0..|A|` preserving order.
    pub fn compacted(&self) -> FoldColoring {
        let rank: BTreeMap<ColorId, ColorId> = self
            .palette()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as ColorId))
            .collect();
        self.relabeled(|c| rank[&c])
    }

    fn relabeled(&self, f: impl Fn(ColorId) -> ColorId) -> FoldColoring {
        FoldColoring::new(
            self.b,
            self.colors.iter().map(|s| s.iter().map(|&c| f(c)).collect()).collect(),
        )
    }

    /// Colors of each region: color id -> set of vertices using it.
    fn color_classes(&self) -> BTreeMap<ColorId, VertexSet> {
        let mut classes: BTreeMap<ColorId, Vec<Vertex>> = BTreeMap::new();
        for (v, set) in self.colors.iter().enumerate() {
            for &c in set {
                classes.entry(c).or_default().push(v);
            }
        }
        classes.into_iter().map(|(c, vs)| (c, VertexSet::from(vs))).collect()
    }

    pub fn venn_signature(&self) -> VennSignature {
        let mut regions = BTreeMap::new();
        for (_, class) in self.color_classes() {
            *regions.entry(class).or_insert(0u64) += 1;
        }
        VennSignature { regions }
    }

    pub fn to_fractional(&self) -> Result<FractionalColoring, FoldError> {
        if self.b == 0 {
            return Err(FoldError::ZeroFold);
        }
        let b = Rational::from_integer(self.b.into());
        let weights = self
            .venn_signature()
            .regions
            .into_iter()
            .map(|(k, count)| (k, Rational::from_integer(count.into()) / &b))
            .collect();
        Ok(FractionalColoring { n: self.n(), weights })
    }
}

/// Checks fold size, duplicate ids, and disjointness across every edge.
pub fn validate(g: &Graph, c: &FoldColoring) -> Result<(), FoldViolation> {
    if c.n() != g.n() {
        return Err(FoldViolation::VertexCount {
            expected: g.n(),
            found: c.n(),
        });
    }
    if c.b == 0 {
        return Err(FoldViolation::ZeroFold);
    }
    for (v, set) in c.colors.iter().enumerate() {
        if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
            return Err(FoldViolation::DuplicateColor { vertex: v, color: w[0] });
        }
        if set.len() != c.b {
            return Err(FoldViolation::WrongFold {
                vertex: v,
                expected: c.b,
                found: set.len(),
            });
        }
    }
    for (u, v) in g.edges() {
        if let Some(color) = first_common(&c.colors[u], &c.colors[v]) {
            return Err(FoldViolation::SharedColor { u, v, color });
        }
    }
    Ok(())
}

fn first_common(a: &[ColorId], b: &[ColorId]) -> Option<ColorId> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// `c1 + c2`: the second palette is shifted past the first's largest id.
pub fn add(c1: &FoldColoring, c2: &FoldColoring) -> Result<FoldColoring, FoldError> {
    if c1.n() != c2.n() {
        return Err(FoldError::SizeMismatch(c1.n(), c2.n()));
    }
    let shift = c1.max_id().map_or(0, |m| m + 1);
    let colors = c1
        .colors
        .iter()
        .zip(&c2.colors)
        .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&x| x + shift)).collect())
        .collect();
    Ok(FoldColoring::new(c1.b + c2.b, colors))
}

/// `t · c`: `t` copies of a compacted palette; copy `j` of color `r` is
/// `j·|A| + r`.
pub fn scale(t: usize, c: &FoldColoring) -> FoldColoring {
    let compact = c.compacted();
    let size = c.palette_size() as ColorId;
    let colors = compact
        .colors
        .iter()
        .map(|set| {
            (0..t as ColorId)
                .flat_map(|j| set.iter().map(move |&r| j * size + r))
                .collect()
        })
        .collect();
    FoldColoring::new(t * c.b, colors)
}

pub fn isomorphic(c1: &FoldColoring, c2: &FoldColoring) -> bool {
    c1.b == c2.b && c1.n() == c2.n() && c1.venn_signature() == c2.venn_signature()
}

/// `c1 ~ c2`: same normalized signature.
pub fn equivalent(c1: &FoldColoring, c2: &FoldColoring) -> bool {
    match (c1.to_fractional(), c2.to_fractional()) {
        (Ok(f1), Ok(f2)) => f1 == f2,
        (Err(_), Err(_)) => c1.n() == c2.n(),
        _ => false,
    }
}

/// Restriction to the subgraph induced on `h`; vertex `h[i]` becomes `i`.
/// Colors unused on `h` drop out of the palette.
pub fn restrict(c: &FoldColoring, h: &VertexSet) -> Result<FoldColoring, FoldError> {
    let mut colors = Vec::with_capacity(h.len());
    for v in h {
        colors.push(c.colors.get(v).ok_or(FoldError::NotInGraph(v))?.clone());
    }
    Ok(FoldColoring { b: c.b, colors })
}

/// Combines colorings of two induced subgraphs covering every edge of `g`
/// into one coloring of `g`. Both are first rescaled to the lcm of their
/// folds; colors on the shared part are matched region by region (smallest
/// ids paired first), remaining colors of `c1` map onto unused colors of
/// `c2`, then onto fresh ids. The palette of the result is the larger of the
/// two rescaled palettes.
pub fn glue(
    g: &Graph,
    g1: &VertexSet,
    g2: &VertexSet,
    c1: &FoldColoring,
    c2: &FoldColoring,
) -> Result<FoldColoring, FoldError> {
    for v in g1.iter().chain(g2.iter()) {
        if v >= g.n() {
            return Err(FoldError::NotInGraph(v));
        }
    }
    if c1.n() != g1.len() {
        return Err(FoldError::SizeMismatch(c1.n(), g1.len()));
    }
    if c2.n() != g2.len() {
        return Err(FoldError::SizeMismatch(c2.n(), g2.len()));
    }
    for v in g.vertices() {
        if !g1.contains(v) && !g2.contains(v) {
            return Err(FoldError::NotInGraph(v));
        }
    }
    for (u, v) in g.edges() {
        let inside = |s: &VertexSet| s.contains(u) && s.contains(v);
        if !inside(g1) && !inside(g2) {
            return Err(FoldError::EdgeNotCovered(u, v));
        }
    }
    if c1.b == 0 || c2.b == 0 {
        return Err(FoldError::ZeroFold);
    }
    let lcm = c1.b.lcm(&c2.b);
    let c1 = scale(lcm / c1.b, c1);
    let c2 = scale(lcm / c2.b, c2);

    let shared = g1.intersection(g2);
    let local1: VertexSet = shared.iter().map(|v| g1.position(v).expect("shared ⊆ g1")).collect();
    let local2: VertexSet = shared.iter().map(|v| g2.position(v).expect("shared ⊆ g2")).collect();

    // region (as global shared vertices) -> sorted color ids
    let regions = |c: &FoldColoring, local: &VertexSet, host: &VertexSet| {
        let mut out: BTreeMap<VertexSet, Vec<ColorId>> = BTreeMap::new();
        for (color, class) in c.color_classes() {
            let on_shared: VertexSet = class
                .iter()
                .filter(|&i| local.contains(i))
                .map(|i| host.as_slice()[i])
                .collect();
            if !on_shared.is_empty() {
                out.entry(on_shared).or_default().push(color);
            }
        }
        out
    };
    let r1 = regions(&c1, &local1, g1);
    let r2 = regions(&c2, &local2, g2);
    let shape = |r: &BTreeMap<VertexSet, Vec<ColorId>>| -> BTreeMap<VertexSet, usize> {
        r.iter().map(|(k, v)| (k.clone(), v.len())).collect()
    };
    if shape(&r1) != shape(&r2) {
        return Err(FoldError::GlueMismatch(describe_diff(&shape(&r1), &shape(&r2))));
    }

    let mut phi: BTreeMap<ColorId, ColorId> = BTreeMap::new();
    for (region, ids1) in &r1 {
        for (&a, &b) in ids1.iter().zip(&r2[region]) {
            phi.insert(a, b);
        }
    }
    let used2: BTreeSet<ColorId> = phi.values().copied().collect();
    let mut spare2 = c2.palette().into_iter().filter(|c| !used2.contains(c));
    let mut fresh = c2.max_id().map_or(0, |m| m + 1);
    for a in c1.palette() {
        if phi.contains_key(&a) {
            continue;
        }
        let target = spare2.next().unwrap_or_else(|| {
            fresh += 1;
            fresh - 1
        });
        phi.insert(a, target);
    }

    let colors = g
        .vertices()
        .map(|v| match g2.position(v) {
            Some(i) => c2.colors[i].clone(),
            None => {
                let i = g1.position(v).expect("vertex covered by g1 or g2");
                c1.colors[i].iter().map(|c| phi[c]).collect()
            }
        })
        .collect();
    Ok(FoldColoring::new(lcm, colors))
}

fn describe_diff(a: &BTreeMap<VertexSet, usize>, b: &BTreeMap<VertexSet, usize>) -> String {
    let keys: BTreeSet<&VertexSet> = a.keys().chain(b.keys()).collect();
    keys.into_iter()
        .filter_map(|k| {
            let (x, y) = (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0));
            (x != y).then(|| format!("{k}: {x} vs {y}"))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Sparse Venn-diagram signature: region (set of vertices sharing a color)
/// -> number of colors in that region.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VennSignature {
    pub regions: BTreeMap<VertexSet, u64>,
}

impl VennSignature {
    pub fn total(&self) -> u64 {
        self.regions.values().sum()
    }

    pub fn sum(&self, other: &VennSignature) -> VennSignature {
        let mut regions = self.regions.clone();
        for (k, v) in &other.regions {
            *regions.entry(k.clone()).or_insert(0) += v;
        }
        VennSignature { regions }
    }

    pub fn times(&self, t: u64) -> VennSignature {
        VennSignature {
            regions: self
                .regions
                .iter()
                .filter(|_| t > 0)
                .map(|(k, v)| (k.clone(), v * t))
                .collect(),
        }
    }

    /// Every region is an independent set of `g`.
    pub fn regions_independent(&self, g: &Graph) -> bool {
        self.regions.keys().all(|k| g.is_independent(k))
    }
}

/// Normalized signature of a fold coloring (counts divided by the fold).
/// Zero weights are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalColoring {
    n: usize,
    weights: BTreeMap<VertexSet, Rational>,
}

impl FractionalColoring {
    pub fn weights(&self) -> &BTreeMap<VertexSet, Rational> {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `g(c/b) = |A(c)| / b`.
    pub fn gvalue(&self) -> Rational {
        self.weights.values().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Total weight of regions containing `v`.
    pub fn coverage(&self, v: Vertex) -> Rational {
        self.weights
            .iter()
            .filter(|(k, _)| k.contains(v))
            .fold(Rational::zero(), |acc, (_, w)| acc + w)
    }

    /// Membership in `F_t`.
    pub fn within(&self, t: &Rational) -> bool {
        &self.gvalue() <= t
    }
}

/// `λ·f1 + (1-λ)·f2` on normalized signatures.
pub fn convex_combine(
    lambda: &Rational,
    f1: &FractionalColoring,
    f2: &FractionalColoring,
) -> Result<FractionalColoring, FoldError> {
    if lambda < &Rational::zero() || lambda > &Rational::one() {
        return Err(FoldError::LambdaOutOfRange(lambda.to_string()));
    }
    if f1.n != f2.n {
        return Err(FoldError::SizeMismatch(f1.n, f2.n));
    }
    let mu = Rational::one() - lambda;
    let mut weights: BTreeMap<VertexSet, Rational> = BTreeMap::new();
    for (k, w) in &f1.weights {
        *weights.entry(k.clone()).or_insert_with(Rational::zero) += lambda * w;
    }
    for (k, w) in &f2.weights {
        *weights.entry(k.clone()).or_insert_with(Rational::zero) += &mu * w;
    }
    weights.retain(|_, w| !w.is_zero());
    Ok(FractionalColoring { n: f1.n, weights })
}

/// JSON shape `{"b": int, "colors": {"<vertex>": [ids...]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldColoringJson {
    pub b: usize,
    pub colors: BTreeMap<usize, Vec<ColorId>>,
}

impl From<&FoldColoring> for FoldColoringJson {
    fn from(c: &FoldColoring) -> Self {
        Self {
            b: c.b,
            colors: c.colors.iter().cloned().enumerate().collect(),
        }
    }
}

impl From<FoldColoringJson> for FoldColoring {
    /// Vertices missing from the map get an empty set (caught by `validate`).
    fn from(j: FoldColoringJson) -> Self {
        let n = j.colors.keys().next_back().map_or(0, |m| m + 1);
        let mut colors = vec![Vec::new(); n];
        for (v, set) in j.colors {
            colors[v] = set;
        }
        FoldColoring::new(j.b, colors)
    }
}

impl Serialize for FoldColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FoldColoringJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FoldColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        FoldColoringJson::deserialize(d).map(FoldColoring::from)
    }
}
