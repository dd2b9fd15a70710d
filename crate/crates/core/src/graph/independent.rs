use fixedbitset::FixedBitSet;

use super::{Graph, GraphError, Vertex, VertexSet};

/// Default ceiling on the number of maximal independent sets enumerated.
pub const DEFAULT_MIS_CAP: usize = 100_000;

struct MisSearch<'a> {
    // closed neighborhoods: N(v) ∪ {v}
    closed: Vec<FixedBitSet>,
    out: &'a mut Vec<VertexSet>,
    cap: usize,
}

impl MisSearch<'_> {
    // Bron–Kerbosch on the complement with Tomita pivoting. `cand` holds
    // vertices that may still join `current`; `excluded` those already tried.
    fn expand(
        &mut self,
        current: &mut Vec<Vertex>,
        cand: FixedBitSet,
        excluded: FixedBitSet,
    ) -> Result<(), GraphError> {
        if cand.is_clear() {
            if excluded.is_clear() {
                if self.out.len() == self.cap {
                    return Err(GraphError::TooLarge { cap: self.cap });
                }
                self.out.push(VertexSet::from(current.clone()));
            }
            return Ok(());
        }
        // pivot maximizes |cand \ N[u]|, i.e. the candidates it stays independent of
        let pivot = cand
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| {
                let mut rest = cand.clone();
                rest.difference_with(&self.closed[u]);
                (rest.count_ones(..), std::cmp::Reverse(u))
            })
            .expect("cand is non-empty");
        let mut branch = cand.clone();
        branch.intersect_with(&self.closed[pivot]);
        let mut cand = cand;
        let mut excluded = excluded;
        for v in branch.ones() {
            let mut next_cand = cand.clone();
            next_cand.difference_with(&self.closed[v]);
            let mut next_excl = excluded.clone();
            next_excl.difference_with(&self.closed[v]);
            current.push(v);
            self.expand(current, next_cand, next_excl)?;
            current.pop();
            cand.set(v, false);
            excluded.insert(v);
        }
        Ok(())
    }
}

impl Graph {
    /// All inclusion-maximal independent sets in lexicographic order. Fails
    /// with [`GraphError::TooLarge`] once more than `cap` sets exist.
    pub fn maximal_independent_sets(&self, cap: usize) -> Result<Vec<VertexSet>, GraphError> {
        let n = self.n();
        if n == 0 {
            return Ok(vec![VertexSet::new()]);
        }
        let closed = (0..n)
            .map(|v| {
                let mut b = FixedBitSet::with_capacity(n);
                b.insert(v);
                for &w in self.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        let mut out = Vec::new();
        let mut search = MisSearch {
            closed,
            out: &mut out,
            cap,
        };
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        search.expand(&mut Vec::new(), all, FixedBitSet::with_capacity(n))?;
        out.sort();
        Ok(out)
    }

    /// `α(G)` with a maximum independent set as witness.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        let mut alive = vec![true; self.n()];
        let mut best = Vec::new();
        self.max_independent(&mut alive, &mut Vec::new(), &mut best);
        (best.len(), VertexSet::from(best))
    }

    fn max_independent(&self, alive: &mut [bool], current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
        let remaining: Vec<Vertex> = (0..self.n()).filter(|&v| alive[v]).collect();
        if current.len() + remaining.len() <= best.len() {
            return;
        }
        let live_degree = |v: Vertex, alive: &[bool]| self.neighbors(v).iter().filter(|&&w| alive[w]).count();
        // a vertex of live degree <= 1 can always be taken
        let pick = remaining
            .iter()
            .copied()
            .min_by_key(|&v| (live_degree(v, alive), v));
        let Some(v) = pick else {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        };
        if live_degree(v, alive) <= 1 {
            let removed = self.take(v, alive, current);
            self.max_independent(alive, current, best);
            self.untake(&removed, alive, current);
            return;
        }
        let v = remaining
            .iter()
            .copied()
            .max_by_key(|&v| (live_degree(v, alive), std::cmp::Reverse(v)))
            .expect("remaining is non-empty");
        let removed = self.take(v, alive, current);
        self.max_independent(alive, current, best);
        self.untake(&removed, alive, current);
        alive[v] = false;
        self.max_independent(alive, current, best);
        alive[v] = true;
    }

    fn take(&self, v: Vertex, alive: &mut [bool], current: &mut Vec<Vertex>) -> Vec<Vertex> {
        let mut removed = vec![v];
        alive[v] = false;
        for &w in self.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                removed.push(w);
            }
        }
        current.push(v);
        removed
    }

    fn untake(&self, removed: &[Vertex], alive: &mut [bool], current: &mut Vec<Vertex>) {
        for &w in removed {
            alive[w] = true;
        }
        current.pop();
    }
}
