//! Named graph families.
//!
//! | name | graph |
//! |------|-------|
//! | `cycle:<n>` | cycle `C_n`, `n >= 3` |
//! | `path:<n>` | path on `n` vertices |
//! | `k:<n>` | complete graph `K_n` |
//! | `petersen:<n>:<k>` | generalized Petersen graph `P(n, k)` |
//! | `cycle_power:<n>:<k>` | `k`-th power of `C_n` (e.g. `cycle_power:8:2`) |
//! | `strongprod_c5_k2` | strong product `C_5 ⊠ K_2` |
//! | `hypercube:<d>` | `d`-dimensional cube `Q_d` |

use super::{Graph, GraphError};

pub const BUILTIN_NAMES: &[&str] = &[
    "cycle:<n>",
    "path:<n>",
    "k:<n>",
    "petersen:<n>:<k>",
    "cycle_power:<n>:<k>",
    "strongprod_c5_k2",
    "hypercube:<d>",
];

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete edges are valid")
}

/// `P(n, k)`: outer cycle on `0..n`, spokes `i - n+i`, inner edges
/// `n+i - n+(i+k mod n)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GraphError::UnknownBuiltin(format!("petersen:{n}:{k}")));
    }
    let edges = (0..n).flat_map(|i| {
        [
            (i, (i + 1) % n),
            (i, n + i),
            (n + i, n + (i + k) % n),
        ]
    });
    Graph::new(2 * n, edges)
}

pub fn cycle_power(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 {
        return Err(GraphError::UnknownBuiltin(format!("cycle_power:{n}:{k}")));
    }
    let edges = (0..n).flat_map(|i| (1..=k).map(move |j| (i, (i + j) % n)));
    Graph::new(n, edges.filter(|(a, b)| a != b))
}

/// `C_5 ⊠ K_2`; vertex `(i, a)` is numbered `2i + a`.
pub fn strong_product_c5_k2() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((2 * i, 2 * i + 1));
        let j = (i + 1) % 5;
        for a in 0..2 {
            for b in 0..2 {
                edges.push((2 * i + a, 2 * j + b));
            }
        }
    }
    Graph::new(10, edges).expect("strong product edges are valid")
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
    Graph::new(n, edges).expect("hypercube edges are valid")
}

/// Resolves a builtin name such as `petersen:7:2`.
pub fn builtin(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownBuiltin(name.to_string());
    let parts: Vec<&str> = name.split(':').collect();
    let num = |i: usize| -> Result<usize, GraphError> {
        parts.get(i).and_then(|s| s.parse().ok()).ok_or_else(unknown)
    };
    match (parts[0], parts.len()) {
        ("cycle", 2) if num(1)? >= 3 => Ok(cycle(num(1)?)),
        ("path", 2) => Ok(path(num(1)?)),
        ("k", 2) => Ok(complete(num(1)?)),
        ("petersen", 3) => generalized_petersen(num(1)?, num(2)?).map_err(|_| unknown()),
        ("cycle_power", 3) => cycle_power(num(1)?, num(2)?).map_err(|_| unknown()),
        ("strongprod_c5_k2", 1) => Ok(strong_product_c5_k2()),
        ("hypercube", 2) if num(1)? <= 16 => Ok(hypercube(num(1)?)),
        _ => Err(unknown()),
    }
}
