//! Graph families used for sequences, each with a fixed edge coloring.
//!
//! Cycles and even-sided tori get translation-invariant colorings so that
//! every vertex sees the same colored neighborhood and censuses agree
//! along a sequence:
//!
//! * cycle: edge `{i, i+1}` gets color 1 for even `i`, 2 for odd `i`; on
//!   odd cycles the closing edge `{n−1, 0}` gets color 3.
//! * torus (even side): horizontal edges get 1 or 2 by column parity,
//!   vertical edges 3 or 4 by row parity. Odd sides fall back to
//!   [`proper_edge_coloring`].
//!
//! Random regular graphs and binary trees use [`proper_edge_coloring`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{proper_edge_coloring, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Retry cap for the configuration model.
pub const MAX_RETRIES: usize = 1000;

/// Seed of member `index` in a sequence with master seed `seed`.
pub fn member_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("a cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new_connected(n, &edges, 2)
}

pub fn cycle_coloring(g: &Graph) -> Result<EdgeColoring> {
    let n = g.n();
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            // edges are stored with u < v, so the closing edge is (0, n-1)
            let i = if (u, v) == (0, n - 1) { n - 1 } else { u };
            if i == n - 1 && n % 2 == 1 {
                3
            } else {
                1 + (i % 2) as Color
            }
        })
        .collect();
    EdgeColoring::new(g, colors)
}

fn torus_vertex(s: usize, i: usize, j: usize) -> Vertex {
    (i % s) * s + (j % s)
}

/// `s × s` grid with wraparound; vertex `(i, j)` has id `i·s + j`.
pub fn torus2d(s: usize) -> Result<Graph> {
    if s < 3 {
        return Err(Error::BadParams(format!("a torus needs side >= 3, got {s}")));
    }
    let mut edges = Vec::with_capacity(2 * s * s);
    for i in 0..s {
        for j in 0..s {
            edges.push((torus_vertex(s, i, j), torus_vertex(s, i, j + 1)));
            edges.push((torus_vertex(s, i, j), torus_vertex(s, i + 1, j)));
        }
    }
    Graph::new_connected(s * s, &edges, 4)
}

pub fn torus_coloring(g: &Graph, s: usize) -> Result<EdgeColoring> {
    if s % 2 == 1 {
        return Ok(proper_edge_coloring(g));
    }
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (ui, uj) = (u / s, u % s);
            let (vi, vj) = (v / s, v % s);
            if ui == vi {
                // horizontal: the left endpoint's column decides
                let left = if (uj + 1) % s == vj { uj } else { vj };
                1 + (left % 2) as Color
            } else {
                let top = if (ui + 1) % s == vi { ui } else { vi };
                3 + (top % 2) as Color
            }
        })
        .collect();
    EdgeColoring::new(g, colors)
}

/// Complete binary tree with levels `0..=depth` (`2^(depth+1) − 1` vertices).
pub fn binary_tree(depth: usize) -> Result<Graph> {
    if depth > 20 {
        return Err(Error::BadParams(format!("tree depth {depth} is too large")));
    }
    let n = (1usize << (depth + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    Graph::new_connected(n, &edges, 3)
}

/// Uniform pairing of `n·d` half-edges (seeded Fisher–Yates), retried
/// until the result is simple and connected.
pub fn random_regular(d: usize, n: usize, seed: u64) -> Result<Graph> {
    if d == 0 || n <= d || (n * d) % 2 == 1 {
        return Err(Error::BadParams(format!(
            "no connected simple {d}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vertex> = (0..n * d).map(|h| h / d).collect();
    'retry: for _ in 0..MAX_RETRIES {
        points.shuffle(&mut rng);
        let mut edges: Vec<(Vertex, Vertex)> = points
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue 'retry;
        }
        match Graph::new_connected(n, &edges, d) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}
