//! Fold-coloring composition and the certification pipeline.
//!
//! Given a partition of `V(G)` into `k` admissible triples and a proper
//! 3-coloring `c_i` of each `G′(X_i)`, every triple contributes one color from
//! its own three-color block to each vertex, except that vertices of `X_i^j`
//! receive both block colors other than `c_i(y_i^j)`. The union over all
//! triples is a `(k+1)`-fold coloring on `3k` colors.
//!
//! [`pipeline`] certifies a triangle-free subcubic graph block by block:
//! greedy partition, exact 3-coloring of every `G′`, composition, with
//! reseeded retries and an exact LP fallback, then glues blocks at their cut
//! vertices.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::admissible::{greedy_partition, AdmissiblePartition, AdmissibleTriple, PartitionError, PartitionViolation, MAX_TRIPLES};
use crate::aux::{build_aux, color_search, AuxError, Color, ColoringOutcome, DEFAULT_NODE_BUDGET};
use crate::fold::{glue, validate, ColorId, FoldColoring, FoldError, FoldViolation, Rational};
use crate::graph::{Graph, VertexSet, DEFAULT_MIS_CAP};
use crate::lp::{extract_ab_coloring, fractional_chromatic_number_with_cap, LpError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("partition: {0}")]
    Partition(#[from] PartitionViolation),
    #[error("expected {expected} colorings, got {got}")]
    ColoringCount { expected: usize, got: usize },
    #[error("triple {triple}: {source}")]
    Aux { triple: usize, source: AuxError },
    #[error("triple {triple}: coloring is not a proper 3-coloring of G′ ({reason})")]
    BadColoring { triple: usize, reason: String },
}

/// Fold coloring of `g` from `partition` and one 3-coloring (colors 1..=3,
/// indexed by quotient vertex) of each `G′(X_i)`. Triple `i` (0-based) owns
/// color ids `3i+1 ..= 3i+3`.
pub fn compose(g: &Graph, partition: &AdmissiblePartition, colorings: &[Vec<Color>]) -> Result<FoldColoring, ComposeError> {
    partition.check(g)?;
    let k = partition.triples.len();
    if colorings.len() != k {
        return Err(ComposeError::ColoringCount {
            expected: k,
            got: colorings.len(),
        });
    }
    let mut colors: Vec<Vec<ColorId>> = vec![Vec::with_capacity(k + 1); g.n()];
    for (i, (t, c)) in partition.triples.iter().zip(colorings).enumerate() {
        let aux = build_aux(g, t).map_err(|source| ComposeError::Aux { triple: i, source })?;
        check_three_coloring(&aux.graph, c).map_err(|reason| ComposeError::BadColoring { triple: i, reason })?;
        let id = |color: Color| (3 * i) as ColorId + color as ColorId;
        for v in g.vertices() {
            match (t.part_of(v), aux.image[v]) {
                (Some(j), _) => {
                    let hub = c[aux.hubs[j]];
                    colors[v].extend((1..=3).filter(|&h| h != hub).map(id));
                }
                (None, Some(q)) => colors[v].push(id(c[q])),
                (None, None) => unreachable!("vertex outside X has a quotient image"),
            }
        }
    }
    let out = FoldColoring::new(k + 1, colors);
    debug_assert_eq!(validate(g, &out), Ok(()));
    Ok(out)
}

fn check_three_coloring(g: &Graph, c: &[Color]) -> Result<(), String> {
    if c.len() != g.n() {
        return Err(format!("{} colors for {} vertices", c.len(), g.n()));
    }
    if let Some(v) = (0..c.len()).find(|&v| !(1..=3).contains(&c[v])) {
        return Err(format!("vertex {v} has color {}", c[v]));
    }
    match g.edges().find(|&(u, v)| c[u] == c[v]) {
        Some((u, v)) => Err(format!("edge ({u}, {v}) is monochromatic")),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelinePath {
    Composed,
    LpFallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockPath {
    /// A single vertex or edge.
    Trivial,
    Composed,
    LpFallback,
}

/// How one block was colored. Partitions use block-local vertex numbers
/// (position in `vertices`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockProvenance {
    pub vertices: VertexSet,
    pub path: BlockPath,
    pub girth: Option<usize>,
    /// Partition seeds tried.
    pub attempts: usize,
    /// Seed of the successful partition.
    pub seed: Option<u64>,
    pub uncolorable_triples: usize,
    pub undecided_triples: usize,
    pub partition: Option<AdmissiblePartition>,
    /// `(c(y1), c(y2), c(y3))` per triple.
    pub hub_colors: Vec<[Color; 3]>,
    /// Empty triples appended so all composed blocks share one fold.
    pub padding: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub max_retries: usize,
    pub path: PipelinePath,
    /// Extra partition attempts over all blocks.
    pub retries: usize,
    pub blocks: Vec<BlockProvenance>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub graph_hash: String,
    pub a: usize,
    pub b: usize,
    pub ratio: Rational,
    pub coloring: FoldColoring,
    pub provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    graph_hash: String,
    a: usize,
    b: usize,
    ratio: String,
    coloring: FoldColoring,
    provenance: Provenance,
}

impl ColoringCertificate {
    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            graph_hash: self.graph_hash.clone(),
            a: self.a,
            b: self.b,
            ratio: self.ratio.to_string(),
            coloring: self.coloring.clone(),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: CertificateJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let ratio = doc.ratio.parse().map_err(|_| format!("bad ratio `{}`", doc.ratio))?;
        Ok(Self {
            graph_hash: doc.graph_hash,
            a: doc.a,
            b: doc.b,
            ratio,
            coloring: doc.coloring,
            provenance: doc.provenance,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("graph hash mismatch: certificate {claimed}, graph {actual}")]
    HashMismatch { claimed: String, actual: String },
    #[error("invalid coloring: {0}")]
    Coloring(#[from] FoldViolation),
    #[error("palette mismatch: claimed a = {claimed}, coloring uses {actual}")]
    PaletteMismatch { claimed: usize, actual: usize },
    #[error("fold mismatch: claimed b = {claimed}, coloring has {actual}")]
    FoldMismatch { claimed: usize, actual: usize },
    #[error("ratio mismatch: claimed {claimed}, a/b = {actual}")]
    RatioMismatch { claimed: Rational, actual: Rational },
}

/// Rechecks a certificate from its raw data; provenance is ignored.
pub fn verify(g: &Graph, cert: &ColoringCertificate) -> Result<(), CertificateViolation> {
    let actual = g.content_hash();
    if cert.graph_hash != actual {
        return Err(CertificateViolation::HashMismatch {
            claimed: cert.graph_hash.clone(),
            actual,
        });
    }
    validate(g, &cert.coloring)?;
    if cert.coloring.fold() != cert.b {
        return Err(CertificateViolation::FoldMismatch {
            claimed: cert.b,
            actual: cert.coloring.fold(),
        });
    }
    if cert.coloring.palette_size() != cert.a {
        return Err(CertificateViolation::PaletteMismatch {
            claimed: cert.a,
            actual: cert.coloring.palette_size(),
        });
    }
    let actual = if cert.b == 0 {
        Rational::zero()
    } else {
        Rational::new(cert.a.into(), cert.b.into())
    };
    if cert.ratio != actual {
        return Err(CertificateViolation::RatioMismatch {
            claimed: cert.ratio.clone(),
            actual,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub seed: u64,
    /// Reseeded partitions tried after the first one fails.
    pub max_retries: usize,
    pub lp_fallback: bool,
    pub mis_cap: usize,
    pub node_budget: u64,
    /// Worker threads for per-triple searches; 0 uses the global pool.
    pub jobs: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_retries: 32,
            lp_fallback: true,
            mis_cap: DEFAULT_MIS_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("graph has a triangle")]
    NotTriangleFree,
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooHigh(usize),
    #[error("block {block} has girth {girth:?}: out of constructive scope")]
    OutOfScope { block: VertexSet, girth: Option<usize> },
    #[error("block {block}: no 3-colorable partition within {attempts} attempts")]
    RetriesExhausted { block: VertexSet, attempts: usize },
    #[error("instance too large: {0}")]
    TooLarge(LpError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<FoldError> for PipelineError {
    fn from(e: FoldError) -> Self {
        PipelineError::Internal(e.to_string())
    }
}

struct BlockResult {
    coloring: FoldColoring,
    provenance: BlockProvenance,
    /// Kept for padding composed blocks.
    composed: Option<(AdmissiblePartition, Vec<Vec<Color>>)>,
}

/// Certifies `χ_f(G) <= a/b` for a triangle-free graph of maximum degree 3.
pub fn pipeline(g: &Graph, config: &PipelineConfig) -> Result<ColoringCertificate, PipelineError> {
    if !g.is_triangle_free() {
        return Err(PipelineError::NotTriangleFree);
    }
    if g.max_degree() > 3 {
        return Err(PipelineError::DegreeTooHigh(g.max_degree()));
    }
    let run = || -> Result<ColoringCertificate, PipelineError> {
        let blocks = g.blocks().blocks;
        let mut results = blocks
            .iter()
            .map(|b| certify_block(&g.induced_subgraph(b), b, config))
            .collect::<Result<Vec<_>, _>>()?;
        pad_composed(g, &blocks, &mut results, config)?;
        assemble(g, &blocks, results, config)
    };
    if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| PipelineError::Internal(e.to_string()))?
            .install(run)
    } else {
        run()
    }
}

fn certify_block(h: &Graph, vertices: &VertexSet, config: &PipelineConfig) -> Result<BlockResult, PipelineError> {
    let girth = h.girth();
    let mut prov = BlockProvenance {
        vertices: vertices.clone(),
        path: BlockPath::Trivial,
        girth,
        attempts: 0,
        seed: None,
        uncolorable_triples: 0,
        undecided_triples: 0,
        partition: None,
        hub_colors: Vec::new(),
        padding: 0,
    };
    match h.n() {
        1 => {
            return Ok(BlockResult {
                coloring: FoldColoring::from_proper(&[0]),
                provenance: prov,
                composed: None,
            })
        }
        2 => {
            return Ok(BlockResult {
                coloring: FoldColoring::from_proper(&[0, 1]),
                provenance: prov,
                composed: None,
            })
        }
        _ => {}
    }
    if matches!(girth, Some(4..=6)) {
        for r in 0..=config.max_retries {
            let seed = config.seed.wrapping_add(r as u64);
            prov.attempts += 1;
            let gp = match greedy_partition(h, seed) {
                Ok(gp) => gp,
                Err(e @ PartitionError::NoFeasibleColor { .. }) => return Err(PipelineError::Internal(e.to_string())),
                Err(e) => return Err(PipelineError::Internal(format!("block {vertices}: {e}"))),
            };
            let outcomes: Vec<Result<ColoringOutcome, AuxError>> = gp
                .partition
                .triples
                .par_iter()
                .map(|t| build_aux(h, t).map(|aux| aux.three_color_with_budget(config.node_budget)))
                .collect();
            let mut colorings = Vec::with_capacity(outcomes.len());
            for o in outcomes {
                match o.map_err(|e| PipelineError::Internal(e.to_string()))? {
                    ColoringOutcome::Colorable(c) => colorings.push(c),
                    ColoringOutcome::NotColorable => prov.uncolorable_triples += 1,
                    ColoringOutcome::Undecided => prov.undecided_triples += 1,
                }
            }
            if colorings.len() == gp.partition.triples.len() {
                let coloring = compose(h, &gp.partition, &colorings).map_err(|e| PipelineError::Internal(e.to_string()))?;
                prov.path = BlockPath::Composed;
                prov.seed = Some(seed);
                prov.hub_colors = hub_colors(h, &gp.partition, &colorings);
                prov.partition = Some(gp.partition.clone());
                return Ok(BlockResult {
                    coloring,
                    provenance: prov,
                    composed: Some((gp.partition, colorings)),
                });
            }
        }
        if !config.lp_fallback {
            return Err(PipelineError::RetriesExhausted {
                block: vertices.clone(),
                attempts: prov.attempts,
            });
        }
    } else if !config.lp_fallback {
        return Err(PipelineError::OutOfScope {
            block: vertices.clone(),
            girth,
        });
    }
    let (_, sol) = fractional_chromatic_number_with_cap(h, config.mis_cap).map_err(|e| {
        if e.is_too_large() {
            PipelineError::TooLarge(e)
        } else {
            PipelineError::Internal(e.to_string())
        }
    })?;
    let coloring = extract_ab_coloring(h, &sol).map_err(|e| PipelineError::Internal(e.to_string()))?;
    prov.path = BlockPath::LpFallback;
    Ok(BlockResult {
        coloring,
        provenance: prov,
        composed: None,
    })
}

fn hub_colors(h: &Graph, p: &AdmissiblePartition, colorings: &[Vec<Color>]) -> Vec<[Color; 3]> {
    p.triples
        .iter()
        .zip(colorings)
        .map(|(t, c)| {
            let aux = build_aux(h, t).expect("triple was built before");
            aux.hubs.map(|y| c[y])
        })
        .collect()
}

/// Appends empty triples to composed blocks so they all reach the largest
/// triple count `K` and hence the common fold `K+1`; gluing then needs no
/// rescaling among them. An empty triple asks for a plain 3-coloring of the
/// block, which exists since it is subcubic and triangle-free.
fn pad_composed(
    g: &Graph,
    blocks: &[VertexSet],
    results: &mut [BlockResult],
    config: &PipelineConfig,
) -> Result<(), PipelineError> {
    let target = results
        .iter()
        .filter_map(|r| r.composed.as_ref().map(|(p, _)| p.len()))
        .max()
        .unwrap_or(0);
    debug_assert!(target <= MAX_TRIPLES);
    for (b, r) in blocks.iter().zip(results.iter_mut()) {
        let Some((partition, colorings)) = r.composed.as_mut() else {
            continue;
        };
        let missing = target - partition.len();
        if missing == 0 {
            continue;
        }
        let h = g.induced_subgraph(b);
        let ColoringOutcome::Colorable(mut plain) = color_search(&h, 3, &[], config.node_budget) else {
            return Err(PipelineError::Internal(format!("block {b} has no 3-coloring within budget")));
        };
        plain.extend([1, 2, 3]);
        for _ in 0..missing {
            partition.triples.push(AdmissibleTriple::default());
            colorings.push(plain.clone());
        }
        r.coloring = compose(&h, partition, colorings).map_err(|e| PipelineError::Internal(e.to_string()))?;
        r.provenance.padding = missing;
        r.provenance.partition = Some(partition.clone());
        r.provenance.hub_colors = hub_colors(&h, partition, colorings);
    }
    Ok(())
}

fn assemble(
    g: &Graph,
    blocks: &[VertexSet],
    results: Vec<BlockResult>,
    config: &PipelineConfig,
) -> Result<ColoringCertificate, PipelineError> {
    let mut glued = vec![false; blocks.len()];
    let mut union = VertexSet::new();
    let mut coloring = FoldColoring::zero(0);
    for _ in 0..blocks.len() {
        let next = (0..blocks.len())
            .find(|&i| !glued[i] && !blocks[i].is_disjoint(&union))
            .or_else(|| (0..blocks.len()).find(|&i| !glued[i]))
            .expect("an unglued block remains");
        glued[next] = true;
        if union.is_empty() {
            union = blocks[next].clone();
            coloring = results[next].coloring.clone();
            continue;
        }
        let all = union.union(&blocks[next]);
        let host = g.induced_subgraph(&all);
        let local = |s: &VertexSet| -> VertexSet { s.iter().map(|v| all.position(v).expect("subset")).collect() };
        coloring = glue(&host, &local(&union), &local(&blocks[next]), &coloring, &results[next].coloring)?;
        union = all;
    }
    if g.n() == 0 {
        coloring = FoldColoring::new(1, Vec::new());
    }
    let coloring = coloring.compacted();
    let a = coloring.palette_size();
    let b = coloring.fold();
    let provenance: Vec<BlockProvenance> = results.into_iter().map(|r| r.provenance).collect();
    let path = if provenance.iter().any(|p| p.path == BlockPath::LpFallback) {
        PipelinePath::LpFallback
    } else {
        PipelinePath::Composed
    };
    let cert = ColoringCertificate {
        graph_hash: g.content_hash(),
        a,
        b,
        ratio: if b == 0 { Rational::zero() } else { Rational::new(a.into(), b.into()) },
        coloring,
        provenance: Provenance {
            seed: config.seed,
            max_retries: config.max_retries,
            path,
            retries: provenance.iter().map(|p| p.attempts.saturating_sub(1)).sum(),
            blocks: provenance,
        },
    };
    verify(g, &cert).map_err(|e| PipelineError::Internal(format!("certificate failed verification: {e}")))?;
    Ok(cert)
}
