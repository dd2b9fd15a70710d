//! Exact fractional chromatic number.
//!
//! `χ_f(G) = min Σ_S f(S)` over nonnegative weights on the maximal
//! independent sets of `G`, subject to every vertex being covered with total
//! weight at least 1. Restricting to maximal sets loses nothing: any weight
//! on a non-maximal set can be moved to a maximal superset without breaking
//! coverage or changing the objective.
//!
//! The LP is solved by a dense two-phase primal simplex over exact rationals
//! with Bland's rule, so the result is exact and deterministic.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fold::{ColorId, FoldColoring, Rational};
use crate::graph::{Graph, GraphError, Vertex, VertexSet, DEFAULT_MIS_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("solution is not a fractional coloring: {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl LpError {
    pub fn is_too_large(&self) -> bool {
        matches!(self, LpError::Graph(GraphError::TooLarge { .. }))
    }
}

/// Optimal weights on maximal independent sets (zero weights omitted), the
/// objective, and optimal dual values per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub weights: BTreeMap<VertexSet, Rational>,
    pub objective: Rational,
    /// Dual vertex weights `y` with `Σ y = objective` and `Σ_{v∈S} y_v <= 1`
    /// for every independent `S`: a certificate of optimality.
    pub duals: Vec<Rational>,
}

impl LpSolution {
    /// Checks the primal constraints against `g` (not optimality).
    pub fn check_feasible(&self, g: &Graph) -> Result<(), LpError> {
        for (set, w) in &self.weights {
            if w.is_negative() {
                return Err(LpError::Infeasible(format!("negative weight on {set}")));
            }
            if set.iter().any(|v| v >= g.n()) || !g.is_independent(set) {
                return Err(LpError::Infeasible(format!("{set} is not an independent set")));
            }
        }
        for v in g.vertices() {
            if self.coverage(v) < Rational::one() {
                return Err(LpError::Infeasible(format!("vertex {v} covered below 1")));
            }
        }
        let total = self.weights.values().fold(Rational::zero(), |a, w| a + w);
        if total != self.objective {
            return Err(LpError::Infeasible("objective differs from total weight".into()));
        }
        Ok(())
    }

    pub fn coverage(&self, v: Vertex) -> Rational {
        self.weights
            .iter()
            .filter(|(s, _)| s.contains(v))
            .fold(Rational::zero(), |a, (_, w)| a + w)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    set: VertexSet,
    weight: String,
}

impl Serialize for LpSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<WeightEntry> = self
            .weights
            .iter()
            .map(|(set, w)| WeightEntry {
                set: set.clone(),
                weight: w.to_string(),
            })
            .collect();
        entries.serialize(s)
    }
}

impl LpSolution {
    /// Reads the `[{"set": [...], "weight": "p/q"}]` form; duals are not stored
    /// there and come back empty.
    pub fn from_json(text: &str) -> Result<LpSolution, String> {
        let entries: Vec<WeightEntry> = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut weights = BTreeMap::new();
        let mut objective = Rational::zero();
        for e in entries {
            let w: Rational = e.weight.parse().map_err(|_| format!("bad weight `{}`", e.weight))?;
            objective += &w;
            weights.insert(e.set, w);
        }
        Ok(LpSolution {
            weights,
            objective,
            duals: Vec::new(),
        })
    }
}

pub fn fractional_chromatic_number(g: &Graph) -> Result<(Rational, LpSolution), LpError> {
    fractional_chromatic_number_with_cap(g, DEFAULT_MIS_CAP)
}

pub fn fractional_chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<(Rational, LpSolution), LpError> {
    if g.n() == 0 {
        let sol = LpSolution {
            weights: BTreeMap::new(),
            objective: Rational::zero(),
            duals: Vec::new(),
        };
        return Ok((Rational::zero(), sol));
    }
    let sets = g.maximal_independent_sets(cap)?;
    let (x, duals) = solve_cover(g.n(), &sets);
    let weights: BTreeMap<VertexSet, Rational> = sets
        .into_iter()
        .zip(x)
        .filter(|(_, w)| !w.is_zero())
        .collect();
    let objective = weights.values().fold(Rational::zero(), |a, w| a + w);
    let sol = LpSolution {
        weights,
        objective: objective.clone(),
        duals,
    };
    debug_assert!(sol.check_feasible(g).is_ok());
    Ok((objective, sol))
}

/// Dense simplex tableau for `min 1ᵀx  s.t.  A x - s = 1,  x, s >= 0` where
/// `A` is the vertex/set incidence matrix. Artificial variables are kept
/// implicit: their columns are never needed since they never re-enter.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// basic variable per row; `>= width` means the artificial of that row
    basis: Vec<usize>,
    reduced: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let inv = Rational::one() / &self.rows[r][e];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.reduced[e].is_zero() {
            let f = self.reduced[e].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                self.reduced[j] -= delta;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    /// Bland's rule until no reduced cost is negative.
    fn optimize(&mut self) {
        while let Some(e) = (0..self.width).find(|&j| self.reduced[j].is_negative()) {
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][e];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let (r, _) = best.expect("covering LP is bounded below");
            self.pivot(r, e);
        }
    }

    fn set_costs(&mut self, cost: impl Fn(usize) -> Rational) {
        let basic_cost: Vec<Rational> = self.basis.iter().map(|&b| cost(b)).collect();
        self.reduced = (0..self.width)
            .map(|j| {
                let mut d = cost(j);
                for (i, cb) in basic_cost.iter().enumerate() {
                    if !cb.is_zero() && !self.rows[i][j].is_zero() {
                        d -= cb * &self.rows[i][j];
                    }
                }
                d
            })
            .collect();
    }
}

/// Returns the optimal `x` (one entry per set) and the vertex duals.
fn solve_cover(n: usize, sets: &[VertexSet]) -> (Vec<Rational>, Vec<Rational>) {
    let m = sets.len();
    let width = m + n;
    let mut rows = vec![vec![Rational::zero(); width]; n];
    for (j, s) in sets.iter().enumerate() {
        for v in s {
            rows[v][j] = Rational::one();
        }
    }
    for (v, row) in rows.iter_mut().enumerate() {
        row[m + v] = -Rational::one();
    }
    let mut t = Tableau {
        rows,
        rhs: vec![Rational::one(); n],
        basis: (0..n).map(|i| width + i).collect(),
        reduced: Vec::new(),
        width,
    };

    // phase 1: minimize the sum of artificials
    t.set_costs(|j| if j >= width { Rational::one() } else { Rational::zero() });
    t.optimize();
    debug_assert!(t.basis.iter().zip(&t.rhs).all(|(&b, r)| b < width || r.is_zero()));
    // drive zero-level artificials out of the basis
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= width {
            match (0..width).find(|&j| !t.rows[r][j].is_zero()) {
                Some(e) => t.pivot(r, e),
                None => {
                    // redundant constraint
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // phase 2: minimize total set weight
    t.set_costs(|j| if j < m { Rational::one() } else { Rational::zero() });
    t.optimize();

    let mut x = vec![Rational::zero(); m];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < m {
            x[b] = t.rhs[i].clone();
        }
    }
    let duals = (0..n).map(|v| t.reduced[m + v].clone()).collect();
    (x, duals)
}

/// Turns optimal LP weights into an `a:b` coloring with `a/b = objective`.
/// `b` is the lcm of the weight denominators; set `S` (in sorted order)
/// contributes `b·f(S)` fresh colors to each of its members. Over-covered
/// vertices keep their `b` smallest ids, i.e. drop colors from the
/// lexicographically largest sets first.
pub fn extract_ab_coloring(g: &Graph, sol: &LpSolution) -> Result<FoldColoring, LpError> {
    sol.check_feasible(g)?;
    let b = sol
        .weights
        .values()
        .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let b_usize: usize = (&b)
        .try_into()
        .map_err(|_| LpError::Infeasible("fold does not fit in usize".into()))?;
    let mut colors: Vec<Vec<ColorId>> = vec![Vec::new(); g.n()];
    let mut next: ColorId = 0;
    for (set, w) in &sol.weights {
        let copies = (w * Rational::from_integer(b.clone())).to_integer();
        let copies: u64 = copies
            .try_into()
            .map_err(|_| LpError::Infeasible("weight too large".into()))?;
        for v in set {
            colors[v].extend(next..next + copies);
        }
        next += copies;
    }
    for set in &mut colors {
        set.truncate(b_usize);
    }
    Ok(FoldColoring::new(b_usize, colors))
}

/// Outcome of an exact check of `χ_f(G) = max(χ_f(G1), χ_f(G2))` across a
/// clique cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCutCheck {
    pub whole: Rational,
    pub first: Rational,
    pub second: Rational,
}

impl CliqueCutCheck {
    pub fn holds(&self) -> bool {
        self.whole == std::cmp::max(&self.first, &self.second).clone()
    }
}

/// `g1` and `g2` (vertex sets, inducing subgraphs) must cover every vertex and
/// edge and meet in a clique.
pub fn check_clique_cut(g: &Graph, g1: &VertexSet, g2: &VertexSet, cap: usize) -> Result<CliqueCutCheck, LpError> {
    cover_check(g, g1, g2)?;
    let shared = g1.intersection(g2);
    for u in &shared {
        for w in &shared {
            if u < w && !g.has_edge(u, w) {
                return Err(LpError::Precondition(format!("shared part {shared} is not a clique")));
            }
        }
    }
    let chif = |h: &Graph| fractional_chromatic_number_with_cap(h, cap).map(|(r, _)| r);
    Ok(CliqueCutCheck {
        whole: chif(g)?,
        first: chif(&g.induced_subgraph(g1))?,
        second: chif(&g.induced_subgraph(g2))?,
    })
}

fn cover_check(g: &Graph, g1: &VertexSet, g2: &VertexSet) -> Result<(), LpError> {
    if let Some(v) = g.vertices().find(|&v| !g1.contains(v) && !g2.contains(v)) {
        return Err(LpError::Precondition(format!("vertex {v} in neither side")));
    }
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| !(g1.contains(u) && g1.contains(v)) && !(g2.contains(u) && g2.contains(v)))
    {
        return Err(LpError::Precondition(format!("edge ({u}, {v}) crosses the cut")));
    }
    Ok(())
}

/// Exact check of `χ_f(G) <= max(χ_f(G1), χ_f(G2 + uv), χ_f(G2 / uv))` for a
/// 2-vertex cut `{u, v}` with `uv` not an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCutCheck {
    pub first_side: VertexSet,
    pub second_side: VertexSet,
    pub whole: Rational,
    pub first: Rational,
    pub second_plus_edge: Rational,
    pub second_contracted: Rational,
}

impl TwoCutCheck {
    pub fn holds(&self) -> bool {
        let bound = [&self.first, &self.second_plus_edge, &self.second_contracted]
            .into_iter()
            .max()
            .expect("three values");
        &self.whole <= bound
    }
}

/// `G1` is the component of `G - {u, v}` holding the smallest vertex, plus
/// `u, v`; `G2` is everything else plus `u, v`.
pub fn check_two_cut(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<TwoCutCheck, LpError> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(LpError::Precondition(format!("bad cut pair ({u}, {v})")));
    }
    if g.has_edge(u, v) {
        return Err(LpError::Graph(GraphError::ContractAdjacent(u, v)));
    }
    let cut = VertexSet::from([u, v]);
    let comps = g.components_avoiding(&cut);
    if comps.len() < 2 {
        return Err(LpError::Precondition(format!("{cut} is not a vertex cut")));
    }
    let first_side = comps[0].union(&cut);
    let second_side = comps[1..].iter().fold(cut.clone(), |acc, c| acc.union(c));
    let g2 = g.induced_subgraph(&second_side);
    let (lu, lv) = (
        second_side.position(u).expect("u in side"),
        second_side.position(v).expect("v in side"),
    );
    let chif = |h: &Graph| fractional_chromatic_number_with_cap(h, cap).map(|(r, _)| r);
    Ok(TwoCutCheck {
        whole: chif(g)?,
        first: chif(&g.induced_subgraph(&first_side))?,
        second_plus_edge: chif(&g2.add_edge(lu, lv)?)?,
        second_contracted: chif(&g2.contract_pair(lu, lv)?)?,
        first_side,
        second_side,
    })
}
