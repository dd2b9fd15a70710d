use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex, VertexSet};

/// Longest simple-path length any query needs.
pub const MAX_PATH_LENGTH: usize = 5;

/// `N^1(u) .. N^5(u)` for one vertex: `v` is in `N^i(u)` when some simple
/// path with exactly `i` edges joins `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathNeighborhoods {
    sets: [VertexSet; MAX_PATH_LENGTH],
}

impl PathNeighborhoods {
    /// `N^i`, for `1 <= i <= 5`.
    pub fn at(&self, i: usize) -> &VertexSet {
        &self.sets[i - 1]
    }

    pub fn contains(&self, i: usize, v: Vertex) -> bool {
        self.sets[i - 1].contains(v)
    }
}

impl Graph {
    /// Vertices joined to `u` by a simple path of exactly `i` edges.
    pub fn distance_neighborhood(&self, u: Vertex, i: usize) -> Result<VertexSet, GraphError> {
        if !(1..=MAX_PATH_LENGTH).contains(&i) {
            return Err(GraphError::PathLength(i));
        }
        Ok(self.path_neighborhoods(u).sets[i - 1].clone())
    }

    /// All five path neighborhoods of `u` from one bounded DFS.
    pub fn path_neighborhoods(&self, u: Vertex) -> PathNeighborhoods {
        let mut found: [Vec<Vertex>; MAX_PATH_LENGTH] = Default::default();
        let mut on_path = vec![false; self.n()];
        on_path[u] = true;
        self.extend_paths(u, 0, &mut on_path, &mut found);
        PathNeighborhoods {
            sets: found.map(VertexSet::from),
        }
    }

    fn extend_paths(
        &self,
        at: Vertex,
        len: usize,
        on_path: &mut [bool],
        found: &mut [Vec<Vertex>; MAX_PATH_LENGTH],
    ) {
        if len == MAX_PATH_LENGTH {
            return;
        }
        for &w in self.neighbors(at) {
            if on_path[w] {
                continue;
            }
            found[len].push(w);
            on_path[w] = true;
            self.extend_paths(w, len + 1, on_path, found);
            on_path[w] = false;
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// A shortest cycle as a vertex sequence; among all shortest cycles the
    /// lexicographically smallest sequence is returned.
    pub fn shortest_cycle(&self) -> Option<Vec<Vertex>> {
        let g = self.girth()?;
        let mut path = Vec::with_capacity(g);
        let mut on_path = vec![false; self.n()];
        for s in 0..self.n() {
            path.clear();
            path.push(s);
            on_path[s] = true;
            let hit = self.close_cycle(s, g, &mut path, &mut on_path);
            on_path[s] = false;
            if hit {
                return Some(path);
            }
        }
        None
    }

    // DFS over vertices > start in ascending order, so the first closed cycle
    // is the lexicographic minimum among cycles whose smallest vertex is `start`.
    fn close_cycle(&self, start: Vertex, len: usize, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
        let at = *path.last().expect("path starts non-empty");
        if path.len() == len {
            return self.has_edge(at, start);
        }
        for &w in self.neighbors(at) {
            if w <= start || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if self.close_cycle(start, len, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }
}
