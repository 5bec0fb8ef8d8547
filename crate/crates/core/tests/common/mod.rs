#![allow(dead_code)]

use graph_limits::coloring::{proper_edge_coloring, EdgeColoring};
use graph_limits::fraction::Fraction;
use graph_limits::generators;
use graph_limits::{Graph, Vertex};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree with degrees `≤ dmax`, plus up to `extra` random
/// chords that keep the bound.
pub fn random_connected(rng: &mut impl Rng, n: usize, dmax: usize, extra: usize) -> Graph {
    assert!(n >= 1 && (dmax >= 2 || n <= 2));
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&u| deg[u] < dmax).collect();
        let u = *open.choose(rng).expect("a tree vertex with spare degree");
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 20 * (extra + 1) {
        tries += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u == v || deg[u] >= dmax || deg[v] >= dmax || edges.contains(&(u, v)) || edges.contains(&(v, u)) {
            continue;
        }
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
        added += 1;
    }
    Graph::new_connected(n, &edges, dmax).unwrap()
}

/// Member `i` of a mixed bag of families with `d ≤ 5` and `n ≤ 300`.
pub fn mixed_graph(seed: u64, i: usize) -> Graph {
    let mut r = rng(seed ^ ((i as u64) << 20));
    match i % 5 {
        0 => generators::cycle(r.gen_range(3..=300)).unwrap(),
        1 => generators::torus2d(r.gen_range(3..=17)).unwrap(),
        2 => {
            let d = r.gen_range(3..=4);
            let n = 2 * r.gen_range(10..=150);
            generators::random_regular(d, n, r.gen()).unwrap()
        }
        3 => generators::binary_tree(r.gen_range(1..=7)).unwrap(),
        _ => {
            let n = r.gen_range(2..=300);
            let dmax = r.gen_range(2..=5);
            let extra = r.gen_range(0..=n);
            random_connected(&mut r, n, dmax, extra)
        }
    }
}

pub fn colored(g: Graph) -> (Graph, EdgeColoring) {
    let col = proper_edge_coloring(&g);
    (g, col)
}

/// `g` with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges, g.d()).unwrap()
}

/// Coloring of `relabel(g, perm)` that gives each image edge its original color.
pub fn relabel_coloring(g: &Graph, col: &EdgeColoring, h: &Graph, perm: &[Vertex]) -> EdgeColoring {
    let mut colors = vec![0; h.edge_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        colors[h.edge_index(perm[u], perm[v]).unwrap()] = col.color_of_edge(e);
    }
    EdgeColoring::new(h, colors).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `Tr(Lᵖ)/n` by dense big-integer matrix powers.
pub fn dense_moment(g: &Graph, p: usize) -> BigRational {
    let n = g.n();
    let mut l = vec![vec![BigInt::from(0); n]; n];
    for (v, row) in l.iter_mut().enumerate() {
        row[v] = BigInt::from(g.degree(v));
        for &w in g.neighbors(v) {
            row[w] = BigInt::from(-1);
        }
    }
    let mut power: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    for _ in 0..p {
        let mut next = vec![vec![BigInt::from(0); n]; n];
        for i in 0..n {
            for k in 0..n {
                if l[k].iter().all(|x| *x == BigInt::from(0)) || power[i][k] == BigInt::from(0) {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += &power[i][k] * &l[k][j];
                }
            }
        }
        power = next;
    }
    let trace: BigInt = (0..n).map(|i| power[i][i].clone()).sum();
    BigRational::new(trace, BigInt::from(n))
}

fn mask_boundary(g: &Graph, mask: u64) -> usize {
    (0..g.n())
        .filter(|&v| mask >> v & 1 == 1 && g.neighbors(v).iter().any(|&w| mask >> w & 1 == 0))
        .count()
}

fn mask_connected(g: &Graph, mask: u64) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Every connected set with `|A| ≤ k` and ratio `≤ eps`, by scanning all
/// subsets. Sets are returned as sorted vertex lists, sorted.
pub fn brute_good_sets(g: &Graph, eps: Fraction, k: usize) -> Vec<Vec<Vertex>> {
    assert!(g.n() <= 22);
    let mut out = Vec::new();
    for mask in 1u64..(1 << g.n()) {
        let size = mask.count_ones() as usize;
        if size > k || !mask_connected(g, mask) {
            continue;
        }
        if Ratio::new(mask_boundary(g, mask) as u64, size as u64) <= eps {
            out.push((0..g.n()).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// `min |∂A|/|A|` over connected `A` with `|A| ≤ n/2`, by scanning all subsets.
pub fn brute_cheeger(g: &Graph) -> Fraction {
    assert!(g.n() <= 22 && g.n() >= 2);
    let mut best: Option<Fraction> = None;
    for mask in 1u64..(1 << g.n()) {
        let size = mask.count_ones() as usize;
        if size > g.n() / 2 || !mask_connected(g, mask) {
            continue;
        }
        let r = Ratio::new(mask_boundary(g, mask) as u64, size as u64);
        if best.is_none_or(|b| r < b) {
            best = Some(r);
        }
    }
    best.unwrap()
}

/// Largest pairwise-disjoint subfamily, by scanning all subfamilies.
pub fn brute_max_packing(sets: &[Vec<Vertex>]) -> usize {
    assert!(sets.len() <= 22);
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut best = 0;
    for pick in 0u64..(1 << sets.len()) {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &m) in masks.iter().enumerate() {
            if pick >> i & 1 == 1 {
                if used & m != 0 {
                    ok = false;
                    break;
                }
                used |= m;
            }
        }
        if ok {
            best = best.max(pick.count_ones() as usize);
        }
    }
    best
}
