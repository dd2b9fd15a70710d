use super::{Graph, Vertex, VertexSet};

/// Block–cut decomposition. Blocks are maximal 2-connected subgraphs,
/// bridges (as `K2`) and isolated vertices (as `K1`); they are given by their
/// vertex sets, which induce them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl Graph {
    /// Iterative Hopcroft–Tarjan over an edge stack. Blocks come back sorted.
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.degree(root) == 0 {
                disc[root] = time;
                time += 1;
                blocks.push(VertexSet::singleton(root));
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
                if *next < self.degree(u) {
                    let w = self.neighbors(u)[*next];
                    *next += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = VertexSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        blocks.sort();
        BlockDecomposition {
            blocks,
            cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        }
    }

    pub fn is_biconnected(&self) -> bool {
        self.n() >= 2 && self.blocks().blocks.len() == 1
    }
}
