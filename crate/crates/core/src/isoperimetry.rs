//! Vertex-boundary isoperimetry: Cheeger constants, small sets with small
//! boundary ("good sets"), the fraction of vertices they cover, and disjoint
//! packings of them.

use std::collections::HashMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::{serde_fraction, Fraction};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::spectral::fiedler_vector;

/// Default cap on visited subsets during good-set enumeration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Largest size cap accepted by the enumerator.
pub const MAX_SET_SIZE: usize = 30;
/// Largest graph accepted by [`cheeger_exact`].
pub const MAX_EXACT_CHEEGER: usize = 18;

/// `|∂A| / |A|` for a nonempty set spanning a connected subgraph.
pub fn boundary_ratio(g: &Graph, a: &VertexSet) -> Result<Fraction> {
    if !g.is_connected_induced(a)? {
        return Err(Error::NotConnected);
    }
    let boundary = g.vertex_boundary(a)?;
    Ok(Ratio::new(boundary.len() as u64, a.len() as u64))
}

/// A connected vertex set together with its boundary statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSet {
    pub vertices: VertexSet,
    pub boundary_size: usize,
    #[serde(with = "serde_fraction")]
    pub ratio: Fraction,
}

impl GoodSet {
    fn new(mut vertices: Vec<Vertex>, boundary_size: usize) -> Self {
        vertices.sort_unstable();
        let ratio = Ratio::new(boundary_size as u64, vertices.len() as u64);
        GoodSet {
            vertices: VertexSet::from_sorted(vertices),
            boundary_size,
            ratio,
        }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Re-derives connectivity and ratio from the graph.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let ratio = boundary_ratio(g, &self.vertices)?;
        if ratio != self.ratio || g.vertex_boundary(&self.vertices)?.len() != self.boundary_size {
            return Err(Error::CheckFailed(format!(
                "set {:?} reports ratio {} but has {}",
                self.vertices.as_slice(),
                self.ratio,
                ratio
            )));
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut v = Vec::<Vertex>::deserialize(d)?;
        v.sort_unstable();
        v.dedup();
        Ok(VertexSet::from_sorted(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Complete,
    BudgetExceeded,
}

/// Connected induced subsets of size `≤ k`, each produced exactly once.
///
/// Sets are grown from their minimum vertex with exclusive-neighborhood
/// extension, so no set is produced twice. Among the pending extension
/// vertices the one with the most neighbors already in the set is taken
/// first (smallest id on ties), which reaches compact sets early. The
/// budget counts visited sets and is shared evenly among root vertices:
/// each root gets the unused budget divided by the number of roots left.
pub struct ConnectedSets<'a> {
    g: &'a Graph,
    k: usize,
    in_set: Vec<bool>,
    // number of set members in the closed neighborhood of each vertex
    near: Vec<u32>,
    inside_deg: Vec<u32>,
    set: Vec<Vertex>,
    boundary: usize,
    visited: u64,
    quota_end: u64,
    truncated: bool,
}

impl<'a> ConnectedSets<'a> {
    pub fn new(g: &'a Graph, k: usize) -> Self {
        ConnectedSets {
            g,
            k,
            in_set: vec![false; g.n()],
            near: vec![0; g.n()],
            inside_deg: vec![0; g.n()],
            set: Vec::with_capacity(k),
            boundary: 0,
            visited: 0,
            quota_end: 0,
            truncated: false,
        }
    }

    /// Calls `visit(set, boundary_size)` for every connected set of size
    /// `1..=k`. Returns the number of visited sets and whether the budget
    /// cut the enumeration short.
    pub fn run<F>(mut self, budget: u64, mut visit: F) -> (u64, Status)
    where
        F: FnMut(&[Vertex], usize),
    {
        let n = self.g.n();
        if self.k == 0 {
            return (0, Status::Complete);
        }
        for root in 0..n {
            let remaining = budget.saturating_sub(self.visited);
            let quota = remaining / (n - root) as u64;
            self.quota_end = self.visited + quota;
            if quota == 0 {
                self.truncated = true;
                continue;
            }
            self.add(root);
            let ext: Vec<Vertex> = self
                .g
                .neighbors(root)
                .iter()
                .copied()
                .filter(|&u| u > root)
                .collect();
            self.extend(root, ext, &mut visit);
            self.remove(root);
        }
        let status = if self.truncated {
            Status::BudgetExceeded
        } else {
            Status::Complete
        };
        (self.visited, status)
    }

    fn extend<F>(&mut self, root: Vertex, mut ext: Vec<Vertex>, visit: &mut F) -> bool
    where
        F: FnMut(&[Vertex], usize),
    {
        if self.visited >= self.quota_end {
            self.truncated = true;
            return false;
        }
        self.visited += 1;
        visit(&self.set, self.boundary);
        if self.set.len() == self.k {
            return true;
        }
        while !ext.is_empty() {
            let pick = (0..ext.len())
                .max_by_key(|&i| (self.inside_deg[ext[i]], std::cmp::Reverse(ext[i])))
                .unwrap();
            let w = ext.swap_remove(pick);
            let mut next_ext = ext.clone();
            next_ext.extend(
                self.g
                    .neighbors(w)
                    .iter()
                    .copied()
                    .filter(|&u| u > root && self.near[u] == 0),
            );
            self.add(w);
            let keep_going = self.extend(root, next_ext, visit);
            self.remove(w);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn add(&mut self, w: Vertex) {
        let g = self.g;
        self.in_set[w] = true;
        self.set.push(w);
        self.near[w] += 1;
        if (self.inside_deg[w] as usize) < g.degree(w) {
            self.boundary += 1;
        }
        for &x in g.neighbors(w) {
            self.near[x] += 1;
            self.inside_deg[x] += 1;
            if self.in_set[x] && self.inside_deg[x] as usize == g.degree(x) {
                self.boundary -= 1;
            }
        }
    }

    fn remove(&mut self, w: Vertex) {
        let g = self.g;
        for &x in g.neighbors(w) {
            if self.in_set[x] && self.inside_deg[x] as usize == g.degree(x) {
                self.boundary += 1;
            }
            self.near[x] -= 1;
            self.inside_deg[x] -= 1;
        }
        if (self.inside_deg[w] as usize) < g.degree(w) {
            self.boundary -= 1;
        }
        self.near[w] -= 1;
        self.in_set[w] = false;
        self.set.pop();
    }
}

/// Result of a (possibly budget-limited) good-set enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodSetEnumeration {
    pub sets: Vec<GoodSet>,
    pub visited: u64,
    pub status: Status,
}

impl GoodSetEnumeration {
    /// The sets, or [`Error::BudgetExceeded`] if the enumeration was cut short.
    pub fn into_complete(self, budget: u64) -> Result<Vec<GoodSet>> {
        match self.status {
            Status::Complete => Ok(self.sets),
            Status::BudgetExceeded => Err(Error::BudgetExceeded { budget }),
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_SET_SIZE {
        return Err(Error::BadParams(format!(
            "size cap k must be in 1..={MAX_SET_SIZE}, got {k}"
        )));
    }
    Ok(())
}

/// Every connected set with `|A| ≤ k` and `|∂A|/|A| ≤ eps`, in enumeration
/// order. A budget overrun is reported through [`Status`], with the sets
/// found so far.
pub fn enumerate_good_sets(
    g: &Graph,
    eps: Fraction,
    k: usize,
    budget: u64,
) -> Result<GoodSetEnumeration> {
    check_k(k)?;
    let mut sets = Vec::new();
    let (num, den) = (*eps.numer() as u128, *eps.denom() as u128);
    let (visited, status) = ConnectedSets::new(g, k).run(budget, |set, boundary| {
        if boundary as u128 * den <= num * set.len() as u128 {
            sets.push(GoodSet::new(set.to_vec(), boundary));
        }
    });
    Ok(GoodSetEnumeration {
        sets,
        visited,
        status,
    })
}

/// Fraction of vertices lying in at least one of `sets`.
pub fn covered_fraction(n: usize, sets: &[GoodSet]) -> Fraction {
    let mut covered = vec![false; n];
    for s in sets {
        for v in s.vertices.iter() {
            covered[v] = true;
        }
    }
    Ratio::new(
        covered.iter().filter(|&&c| c).count() as u64,
        n.max(1) as u64,
    )
}

/// `h(G, ε, k)` with the enumeration status that produced it.
pub fn coverable_fraction(
    g: &Graph,
    eps: Fraction,
    k: usize,
    budget: u64,
) -> Result<(Fraction, Status)> {
    let e = enumerate_good_sets(g, eps, k, budget)?;
    Ok((covered_fraction(g.n(), &e.sets), e.status))
}

/// A family of good sets with its normalized size `|family| / n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSetFamily {
    pub sets: Vec<GoodSet>,
    pub disjoint: bool,
    pub m_count: usize,
    #[serde(with = "serde_fraction")]
    pub m_norm: Fraction,
    pub status: Status,
}

impl GoodSetFamily {
    fn new(n: usize, sets: Vec<GoodSet>, status: Status) -> Self {
        let disjoint = pairwise_disjoint(n, &sets);
        let m_count = sets.len();
        GoodSetFamily {
            sets,
            disjoint,
            m_count,
            m_norm: Ratio::new(m_count as u64, n.max(1) as u64),
            status,
        }
    }

    /// No candidate is disjoint from the union of the family.
    pub fn is_maximal_among(&self, n: usize, candidates: &[GoodSet]) -> bool {
        let mut used = vec![false; n];
        for s in &self.sets {
            for v in s.vertices.iter() {
                used[v] = true;
            }
        }
        candidates
            .iter()
            .all(|c| c.vertices.iter().any(|v| used[v]))
    }
}

fn pairwise_disjoint(n: usize, sets: &[GoodSet]) -> bool {
    let mut used = vec![false; n];
    for s in sets {
        for v in s.vertices.iter() {
            if std::mem::replace(&mut used[v], true) {
                return false;
            }
        }
    }
    true
}

/// Greedy inclusion-maximal disjoint subfamily of `candidates`, scanning
/// by ratio ascending, then size descending, then vertex list.
pub fn greedy_packing(n: usize, candidates: &[GoodSet]) -> Vec<GoodSet> {
    let mut order: Vec<&GoodSet> = candidates.iter().collect();
    order.sort_by(|a, b| {
        a.ratio
            .cmp(&b.ratio)
            .then(b.size().cmp(&a.size()))
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    let mut used = vec![false; n];
    let mut family = Vec::new();
    for c in order {
        if c.vertices.iter().all(|v| !used[v]) {
            for v in c.vertices.iter() {
                used[v] = true;
            }
            family.push(c.clone());
        }
    }
    family
}

pub fn pack_greedy(g: &Graph, eps: Fraction, k: usize, budget: u64) -> Result<GoodSetFamily> {
    let e = enumerate_good_sets(g, eps, k, budget)?;
    let family = greedy_packing(g.n(), &e.sets);
    Ok(GoodSetFamily::new(g.n(), family, e.status))
}

/// Guard for exact packing: at most this many candidates, unless the
/// graph is small (see [`EXACT_PACK_MAX_VERTICES`]).
pub const EXACT_PACK_MAX_SETS: usize = 24;
pub const EXACT_PACK_MAX_VERTICES: usize = 16;

/// Maximum-cardinality disjoint subfamily of `candidates`.
pub fn exact_packing(n: usize, candidates: &[GoodSet]) -> Result<Vec<GoodSet>> {
    if candidates.len() > EXACT_PACK_MAX_SETS && n > EXACT_PACK_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "exact packing (candidate sets)",
            size: candidates.len(),
            limit: EXACT_PACK_MAX_SETS,
        });
    }
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut avail = Bits::new(n);
    for (i, c) in candidates.iter().enumerate() {
        for v in c.vertices.iter() {
            by_vertex[v].push(i);
            avail.set(v, true);
        }
    }
    let mut solver = ExactPacker {
        candidates,
        by_vertex,
        memo: HashMap::new(),
    };
    solver.best(&avail);
    // replay recorded choices
    let mut family = Vec::new();
    let mut state = avail;
    while let Some(v) = state.first() {
        let (_, choice) = solver.memo[&state];
        match choice {
            Some(i) => {
                for x in candidates[i].vertices.iter() {
                    state.set(x, false);
                }
                family.push(candidates[i].clone());
            }
            None => state.set(v, false),
        }
    }
    Ok(family)
}

pub fn pack_exact(g: &Graph, eps: Fraction, k: usize, budget: u64) -> Result<GoodSetFamily> {
    let e = enumerate_good_sets(g, eps, k, budget)?;
    let family = exact_packing(g.n(), &e.sets)?;
    Ok(GoodSetFamily::new(g.n(), family, e.status))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, on: bool) {
        if on {
            self.0[i / 64] |= 1 << (i % 64);
        } else {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

struct ExactPacker<'a> {
    candidates: &'a [GoodSet],
    by_vertex: Vec<Vec<usize>>,
    // best count from a state, and the choice at its smallest vertex
    memo: HashMap<Bits, (usize, Option<usize>)>,
}

impl ExactPacker<'_> {
    fn best(&mut self, avail: &Bits) -> usize {
        let Some(v) = avail.first() else {
            return 0;
        };
        if let Some(&(count, _)) = self.memo.get(avail) {
            return count;
        }
        let mut without = avail.clone();
        without.set(v, false);
        let mut best = (self.best(&without), None);
        for idx in 0..self.by_vertex[v].len() {
            let i = self.by_vertex[v][idx];
            let c = &self.candidates[i];
            if !c.vertices.iter().all(|x| avail.get(x)) {
                continue;
            }
            let mut rest = avail.clone();
            for x in c.vertices.iter() {
                rest.set(x, false);
            }
            let count = 1 + self.best(&rest);
            if count > best.0 {
                best = (count, Some(i));
            }
        }
        self.memo.insert(avail.clone(), best);
        best.0
    }
}

/// A Cheeger-type value with the set that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheegerCut {
    #[serde(with = "serde_fraction")]
    pub ratio: Fraction,
    pub witness: VertexSet,
}

/// `h(G)`: minimum of `|∂A|/|A|` over connected `A` with `|A| ≤ n/2`,
/// by exhaustive enumeration. Ties go to the smaller set, then the
/// lexicographically smaller vertex list.
pub fn cheeger_exact(g: &Graph) -> Result<CheegerCut> {
    if g.n() > MAX_EXACT_CHEEGER {
        return Err(Error::TooLarge {
            what: "exact Cheeger constant",
            size: g.n(),
            limit: MAX_EXACT_CHEEGER,
        });
    }
    let half = g.n() / 2;
    if half == 0 {
        return Err(Error::BadParams(
            "the Cheeger constant needs at least two vertices".into(),
        ));
    }
    let mut best: Option<(Fraction, usize, Vec<Vertex>)> = None;
    ConnectedSets::new(g, half).run(u64::MAX, |set, boundary| {
        let ratio = Ratio::new(boundary as u64, set.len() as u64);
        let better = match &best {
            None => true,
            Some((r, size, verts)) => {
                (ratio, set.len()) < (*r, *size) || {
                    (ratio, set.len()) == (*r, *size) && {
                        let mut s = set.to_vec();
                        s.sort_unstable();
                        s < *verts
                    }
                }
            }
        };
        if better {
            let mut s = set.to_vec();
            s.sort_unstable();
            best = Some((ratio, set.len(), s));
        }
    });
    let (ratio, _, witness) = best.expect("singletons are always candidates");
    Ok(CheegerCut {
        ratio,
        witness: VertexSet::from_sorted(witness),
    })
}

/// Upper bound on `h(G)` from a Fiedler-vector sweep: vertices are sorted
/// by their Fiedler coordinate and every connected component of every
/// prefix of size `≤ n/2` is evaluated.
pub fn cheeger_sweep(g: &Graph) -> Result<CheegerCut> {
    let n = g.n();
    if n / 2 == 0 {
        return Err(Error::BadParams(
            "the Cheeger constant needs at least two vertices".into(),
        ));
    }
    let (_, x) = fiedler_vector(g)?;
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));

    let mut uf = UnionFind::new(n);
    let mut in_prefix = vec![false; n];
    let mut outside = vec![0usize; n];
    let mut comp_boundary = vec![0usize; n];
    // (ratio, prefix length, representative)
    let mut best: Option<(Fraction, usize, Vertex)> = None;
    for (step, &u) in order.iter().take(n / 2).enumerate() {
        in_prefix[u] = true;
        outside[u] = g.neighbors(u).iter().filter(|&&w| !in_prefix[w]).count();
        comp_boundary[u] = usize::from(outside[u] > 0);
        for &w in g.neighbors(u) {
            if !in_prefix[w] {
                continue;
            }
            outside[w] -= 1;
            if outside[w] == 0 {
                comp_boundary[uf.find(w)] -= 1;
            }
        }
        for &w in g.neighbors(u) {
            if in_prefix[w] {
                let (a, b) = (uf.find(u), uf.find(w));
                if a != b {
                    let root = uf.union(a, b);
                    comp_boundary[root] = comp_boundary[a] + comp_boundary[b];
                }
            }
        }
        let root = uf.find(u);
        let ratio = Ratio::new(comp_boundary[root] as u64, uf.size[root] as u64);
        if best.as_ref().is_none_or(|(r, _, _)| ratio < *r) {
            best = Some((ratio, step + 1, u));
        }
    }
    let (ratio, len, rep) = best.expect("n/2 >= 1");
    // rebuild the component of `rep` inside the prefix
    let prefix: Vec<bool> = {
        let mut p = vec![false; n];
        for &v in &order[..len] {
            p[v] = true;
        }
        p
    };
    let mut seen = vec![false; n];
    let mut stack = vec![rep];
    seen[rep] = true;
    let mut comp = Vec::new();
    while let Some(v) = stack.pop() {
        comp.push(v);
        for &w in g.neighbors(v) {
            if prefix[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    comp.sort_unstable();
    Ok(CheegerCut {
        ratio,
        witness: VertexSet::from_sorted(comp),
    })
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        big
    }
}

/// `c(ε, d, k) = 1 / (k · Σ_{i<k} dⁱ)`: every inclusion-maximal disjoint
/// family of good sets has `m_norm ≥ c · h(G, ε, k)`, because each covered
/// vertex is within distance `k − 1` of the family's union.
pub fn packing_constant(d: usize, k: usize) -> num_rational::BigRational {
    use num_bigint::BigInt;
    let geometric: BigInt = (0..k as u32).map(|i| BigInt::from(d).pow(i)).sum();
    num_rational::BigRational::new(1.into(), BigInt::from(k) * geometric)
}

/// Summary of the isoperimetric quantities of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoperimetryReport {
    #[serde(with = "serde_fraction")]
    pub eps: Fraction,
    pub k: usize,
    pub n: usize,
    /// Exact `h(G)` for small graphs, otherwise a sweep upper bound.
    pub cheeger: CheegerCut,
    pub cheeger_exact: bool,
    #[serde(with = "serde_fraction")]
    pub h_cover: Fraction,
    pub covered: usize,
    pub family: GoodSetFamily,
}

pub fn isoperimetry_report(
    g: &Graph,
    eps: Fraction,
    k: usize,
    budget: u64,
) -> Result<IsoperimetryReport> {
    let (cheeger, exact) = if g.n() <= MAX_EXACT_CHEEGER {
        (cheeger_exact(g)?, true)
    } else {
        (cheeger_sweep(g)?, false)
    };
    let e = enumerate_good_sets(g, eps, k, budget)?;
    let h_cover = covered_fraction(g.n(), &e.sets);
    let family = GoodSetFamily::new(g.n(), greedy_packing(g.n(), &e.sets), e.status);
    Ok(IsoperimetryReport {
        eps,
        k,
        n: g.n(),
        cheeger,
        cheeger_exact: exact,
        covered: (h_cover * g.n().max(1) as u64).to_integer() as usize,
        h_cover,
        family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges, 2).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges, n - 1).unwrap()
    }

    fn set(v: &[usize], n: usize) -> VertexSet {
        VertexSet::new(v.to_vec(), n).unwrap()
    }

    fn frac(a: u64, b: u64) -> Fraction {
        Ratio::new(a, b)
    }

    #[test]
    fn ratios() {
        assert_eq!(boundary_ratio(&cycle(6), &set(&[0, 1, 2], 6)).unwrap(), frac(2, 3));
        assert_eq!(boundary_ratio(&cycle(6), &VertexSet::full(6)).unwrap(), frac(0, 1));
        assert_eq!(boundary_ratio(&complete(4), &set(&[0], 4)).unwrap(), frac(1, 1));
        assert_eq!(
            boundary_ratio(&cycle(6), &set(&[0, 3], 6)),
            Err(Error::NotConnected)
        );
        assert_eq!(
            boundary_ratio(&cycle(6), &VertexSet::default()),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn exact_cheeger() {
        let c6 = cheeger_exact(&cycle(6)).unwrap();
        assert_eq!(c6.ratio, frac(2, 3));
        assert_eq!(c6.witness.as_slice(), &[0, 1, 2]);
        assert_eq!(cheeger_exact(&complete(4)).unwrap().ratio, frac(1, 1));
        let k2 = Graph::new(2, &[(0, 1)], 1).unwrap();
        let cut = cheeger_exact(&k2).unwrap();
        assert_eq!(cut.ratio, frac(1, 1));
        assert_eq!(cut.witness.as_slice(), &[0]);
        assert!(matches!(cheeger_exact(&cycle(19)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sweep_cheeger() {
        assert_eq!(cheeger_sweep(&cycle(6)).unwrap().ratio, frac(2, 3));
        assert_eq!(cheeger_sweep(&complete(4)).unwrap().ratio, frac(1, 1));
        let cut = cheeger_sweep(&cycle(40)).unwrap();
        assert_eq!(cut.ratio, frac(2, 20));
        assert_eq!(boundary_ratio(&cycle(40), &cut.witness).unwrap(), cut.ratio);
    }

    #[test]
    fn good_sets_of_c12() {
        let g = cycle(12);
        let e = enumerate_good_sets(&g, frac(7, 10), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.status, Status::Complete);
        let mut found: Vec<Vec<usize>> = e.sets.iter().map(|s| s.vertices.as_slice().to_vec()).collect();
        found.sort();
        let mut expected: Vec<Vec<usize>> = (0..12)
            .map(|i| {
                let mut v = vec![i, (i + 1) % 12, (i + 2) % 12];
                v.sort();
                v
            })
            .collect();
        expected.sort();
        assert_eq!(found, expected);
        for s in &e.sets {
            s.verify(&g).unwrap();
        }
    }

    #[test]
    fn no_good_sets_in_k4() {
        let g = complete(4);
        assert!(enumerate_good_sets(&g, frac(1, 2), 2, DEFAULT_BUDGET)
            .unwrap()
            .sets
            .is_empty());
        assert_eq!(coverable_fraction(&g, frac(1, 2), 2, DEFAULT_BUDGET).unwrap().0, frac(0, 1));
        let greedy = pack_greedy(&g, frac(1, 2), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(greedy.m_count, 0);
        assert_eq!(pack_exact(&g, frac(1, 2), 2, DEFAULT_BUDGET).unwrap().m_count, 0);
    }

    #[test]
    fn singletons_when_eps_is_one() {
        let g = cycle(7);
        let e = enumerate_good_sets(&g, frac(1, 1), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.sets.len(), 7);
    }

    #[test]
    fn c12_packings() {
        let g = cycle(12);
        assert_eq!(coverable_fraction(&g, frac(7, 10), 3, DEFAULT_BUDGET).unwrap().0, frac(1, 1));
        let exact = pack_exact(&g, frac(7, 10), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(exact.m_count, 4);
        assert_eq!(exact.m_norm, frac(1, 3));
        assert!(exact.disjoint);
        let greedy = pack_greedy(&g, frac(7, 10), 3, DEFAULT_BUDGET).unwrap();
        assert!(greedy.m_norm >= frac(1, 4));
        assert!(greedy.disjoint);
        let all = enumerate_good_sets(&g, frac(7, 10), 3, DEFAULT_BUDGET).unwrap().sets;
        assert!(greedy.is_maximal_among(12, &all));
    }

    #[test]
    fn budget_is_reported() {
        let g = cycle(30);
        let e = enumerate_good_sets(&g, frac(1, 1), 10, 50).unwrap();
        assert_eq!(e.status, Status::BudgetExceeded);
        assert!(e.visited <= 50);
        assert!(matches!(e.into_complete(50), Err(Error::BudgetExceeded { budget: 50 })));
        assert!(enumerate_good_sets(&g, frac(1, 1), 0, 50).is_err());
        assert!(enumerate_good_sets(&g, frac(1, 1), 31, 50).is_err());
    }

    #[test]
    fn exact_packing_guard() {
        let g = cycle(40);
        let e = enumerate_good_sets(&g, frac(1, 1), 2, DEFAULT_BUDGET).unwrap();
        assert!(e.sets.len() > EXACT_PACK_MAX_SETS);
        assert!(matches!(exact_packing(40, &e.sets), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn packing_constant_values() {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        assert_eq!(packing_constant(2, 3), BigRational::new(BigInt::from(1), BigInt::from(21)));
        assert_eq!(packing_constant(4, 1), BigRational::new(BigInt::from(1), BigInt::from(1)));
    }
}
