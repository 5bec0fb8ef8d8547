//! Rooted colored balls, their canonical codes, and neighborhood censuses.
//!
//! A ball of radius `r` around `v` is labeled breadth-first from the root:
//! the root gets label 1, the queue is processed in FIFO order, and the
//! unlabeled neighbors of each dequeued vertex are labeled in increasing
//! order of the color of the connecting edge. Because the coloring is
//! proper, this labeling is forced, so two balls get equal codes exactly
//! when they are rooted, color-preserving isomorphic.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Version tag prepended to codes stored in files.
pub const CODE_VERSION: &str = "v1|";

/// Largest ball accepted by [`canonical_code_uncolored`].
pub const UNCOLORED_BALL_LIMIT: usize = 20;

/// A canonically labeled rooted colored ball.
///
/// Labels are stored 0-based (`0` is the root); codes print them 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBall {
    radius: usize,
    d: usize,
    // per label: (neighbor label, color), sorted by color
    adjacency: Vec<Vec<(u32, Color)>>,
}

impl RootedBall {
    /// Builds a ball from raw labeled adjacency (0-based labels) and checks
    /// every invariant, including that the labeling is the canonical one.
    pub fn from_adjacency(
        radius: usize,
        d: usize,
        mut adjacency: Vec<Vec<(u32, Color)>>,
    ) -> Result<Self> {
        for nbrs in &mut adjacency {
            nbrs.sort_unstable_by_key(|&(_, c)| c);
        }
        let ball = RootedBall {
            radius,
            d,
            adjacency,
        };
        ball.check()?;
        Ok(ball)
    }

    pub fn k(&self) -> usize {
        self.adjacency.len()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `(neighbor label, color)` pairs of a 0-based label, sorted by color.
    pub fn neighbors(&self, label: usize) -> &[(u32, Color)] {
        &self.adjacency[label]
    }

    /// Degree of a vertex inside the ball (the induced degree).
    pub fn degree(&self, label: usize) -> usize {
        self.adjacency[label].len()
    }

    /// Distances from the root, indexed by 0-based label.
    pub fn distances(&self) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.k()];
        if self.k() == 0 {
            return dist;
        }
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adjacency[u] {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The sub-ball of radius `radius` around the root. Its labels are the
    /// prefix of this ball's labels, so no relabeling takes place.
    pub fn truncate(&self, radius: usize) -> RootedBall {
        if radius >= self.radius {
            return self.clone();
        }
        let dist = self.distances();
        let k = dist.iter().take_while(|&&x| x <= radius).count();
        debug_assert!(dist[k..].iter().all(|&x| x > radius));
        let adjacency = self.adjacency[..k]
            .iter()
            .map(|nbrs| {
                nbrs.iter()
                    .copied()
                    .filter(|&(w, _)| (w as usize) < k)
                    .collect()
            })
            .collect();
        RootedBall {
            radius,
            d: self.d,
            adjacency,
        }
    }

    fn check(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::InvariantViolation("ball has no root".into()));
        }
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            if nbrs.len() > self.d {
                return Err(Error::InvariantViolation(format!(
                    "label {} has degree {} above {}",
                    u + 1,
                    nbrs.len(),
                    self.d
                )));
            }
            for (i, &(w, c)) in nbrs.iter().enumerate() {
                let w = w as usize;
                if w >= k || w == u {
                    return Err(Error::InvariantViolation(format!(
                        "label {} has invalid neighbor {}",
                        u + 1,
                        w + 1
                    )));
                }
                if c == 0 || c as usize > self.d + 1 {
                    return Err(Error::InvariantViolation(format!("color {c} out of range")));
                }
                if i > 0 && nbrs[i - 1].1 == c {
                    return Err(Error::InvariantViolation(format!(
                        "label {} repeats color {c}",
                        u + 1
                    )));
                }
                if !self.adjacency[w].contains(&(u as u32, c)) {
                    return Err(Error::InvariantViolation(format!(
                        "edge {}-{} is not symmetric",
                        u + 1,
                        w + 1
                    )));
                }
            }
        }
        let dist = self.distances();
        if dist.contains(&usize::MAX) {
            return Err(Error::InvariantViolation("ball is disconnected".into()));
        }
        if dist.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvariantViolation(
                "labels are not monotone in the distance from the root".into(),
            ));
        }
        if dist[k - 1] > self.radius {
            return Err(Error::InvariantViolation(format!(
                "eccentricity {} exceeds radius {}",
                dist[k - 1],
                self.radius
            )));
        }
        if self.canonical_order() != (0..k as u32).collect::<Vec<_>>() {
            return Err(Error::InvariantViolation(
                "labeling is not the canonical breadth-first labeling".into(),
            ));
        }
        Ok(())
    }

    // Order in which the canonical traversal visits the current labels.
    fn canonical_order(&self) -> Vec<u32> {
        let k = self.k();
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut order = vec![0u32];
        let mut head = 0;
        while head < order.len() {
            let u = order[head] as usize;
            head += 1;
            for &(w, _) in &self.adjacency[u] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Rebuilds a ball from its code.
    pub fn from_code(code: &BallCode, radius: usize, d: usize) -> Result<Self> {
        let bad = |m: &str| Error::BadCode(format!("{m} in {:?}", code.0));
        let mut parts = code.0.split(';');
        let k: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("missing vertex count"))?;
        let mut adjacency = Vec::with_capacity(k);
        for (i, part) in parts.enumerate() {
            let (label, rest) = part.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            if label.parse::<usize>().ok() != Some(i + 1) {
                return Err(bad("labels out of order"));
            }
            let mut nbrs = Vec::new();
            if !rest.is_empty() {
                for pair in rest.split("),(") {
                    let pair = pair.trim_start_matches('(').trim_end_matches(')');
                    let (w, c) = pair.split_once(',').ok_or_else(|| bad("bad pair"))?;
                    let w: u32 = w.parse().map_err(|_| bad("bad neighbor"))?;
                    let c: Color = c.parse().map_err(|_| bad("bad color"))?;
                    if w == 0 {
                        return Err(bad("label 0"));
                    }
                    nbrs.push((w - 1, c));
                }
            }
            adjacency.push(nbrs);
        }
        if adjacency.len() != k {
            return Err(bad("vertex count mismatch"));
        }
        let ball = RootedBall::from_adjacency(radius, d, adjacency)?;
        if ball.code_unchecked() != *code {
            return Err(bad("non-canonical formatting"));
        }
        Ok(ball)
    }

    fn code_unchecked(&self) -> BallCode {
        use std::fmt::Write;
        let mut s = self.k().to_string();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            write!(s, ";{}:", u + 1).unwrap();
            for (i, &(w, c)) in nbrs.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write!(s, "({},{c})", w + 1).unwrap();
            }
        }
        BallCode(s)
    }
}

/// Canonical serialization of a rooted colored ball,
/// e.g. `2;1:(2,1);2:(1,1)` for a single edge of color 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BallCode(String);

impl BallCode {
    pub fn new(s: impl Into<String>) -> Self {
        BallCode(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Code with the file-format version tag.
    pub fn to_versioned(&self) -> String {
        format!("{CODE_VERSION}{}", self.0)
    }

    pub fn from_versioned(s: &str) -> Result<Self> {
        s.strip_prefix(CODE_VERSION)
            .map(|c| BallCode(c.to_string()))
            .ok_or_else(|| Error::BadCode(format!("missing {CODE_VERSION} tag in {s:?}")))
    }
}

impl fmt::Display for BallCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Reusable scratch space for extracting many balls from one graph.
pub struct BallExtractor<'a> {
    g: &'a Graph,
    col: &'a EdgeColoring,
    label: Vec<u32>,
    dist: Vec<usize>,
}

const UNLABELED: u32 = u32::MAX;

impl<'a> BallExtractor<'a> {
    pub fn new(g: &'a Graph, col: &'a EdgeColoring) -> Self {
        BallExtractor {
            g,
            col,
            label: vec![UNLABELED; g.n()],
            dist: vec![0; g.n()],
        }
    }

    pub fn extract(&mut self, v: Vertex, r: usize) -> Result<RootedBall> {
        self.g.check_vertex(v)?;
        let (g, col) = (self.g, self.col);
        let mut order = vec![v];
        self.label[v] = 0;
        self.dist[v] = 0;
        let mut head = 0;
        let mut by_color: Vec<(Color, Vertex)> = Vec::with_capacity(g.d());
        while head < order.len() {
            let u = order[head];
            head += 1;
            if self.dist[u] == r {
                continue;
            }
            by_color.clear();
            by_color.extend(g.incident_edges(u).map(|(w, e)| (col.color_of_edge(e), w)));
            by_color.sort_unstable();
            for &(_, w) in &by_color {
                if self.label[w] == UNLABELED {
                    self.label[w] = order.len() as u32;
                    self.dist[w] = self.dist[u] + 1;
                    order.push(w);
                }
            }
        }
        let adjacency = order
            .iter()
            .map(|&u| {
                let mut nbrs: Vec<(u32, Color)> = g
                    .incident_edges(u)
                    .filter(|&(w, _)| self.label[w] != UNLABELED)
                    .map(|(w, e)| (self.label[w], col.color_of_edge(e)))
                    .collect();
                nbrs.sort_unstable_by_key(|&(_, c)| c);
                nbrs
            })
            .collect();
        for &u in &order {
            self.label[u] = UNLABELED;
        }
        Ok(RootedBall {
            radius: r,
            d: g.d(),
            adjacency,
        })
    }
}

/// The canonically labeled radius-`r` ball around `v`.
pub fn extract_rooted_ball(
    g: &Graph,
    col: &EdgeColoring,
    v: Vertex,
    r: usize,
) -> Result<RootedBall> {
    BallExtractor::new(g, col).extract(v, r)
}

/// Serializes a ball after re-checking its invariants.
pub fn canonical_code(b: &RootedBall) -> Result<BallCode> {
    b.check()?;
    Ok(b.code_unchecked())
}

/// Distribution of radius-`r` ball classes over the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallCensus {
    pub r: usize,
    pub d: usize,
    pub n: usize,
    pub classes: BTreeMap<BallCode, u64>,
}

impl BallCensus {
    /// Exact fraction of vertices whose ball has the given code.
    pub fn probability(&self, code: &BallCode) -> Ratio<u64> {
        let count = self.classes.get(code).copied().unwrap_or(0);
        Ratio::new(count, self.n as u64)
    }

    pub fn total_probability(&self) -> BigRational {
        self.classes
            .keys()
            .map(|c| {
                let p = self.probability(c);
                BigRational::new(BigInt::from(*p.numer()), BigInt::from(*p.denom()))
            })
            .fold(BigRational::zero(), |acc, p| acc + p)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Merges classes by their truncation to a smaller radius.
    pub fn coarsen(&self, radius: usize) -> Result<BallCensus> {
        let mut classes = BTreeMap::new();
        for (code, &count) in &self.classes {
            let ball = RootedBall::from_code(code, self.r, self.d)?;
            let coarse = canonical_code(&ball.truncate(radius))?;
            *classes.entry(coarse).or_insert(0) += count;
        }
        Ok(BallCensus {
            r: radius.min(self.r),
            d: self.d,
            n: self.n,
            classes,
        })
    }
}

/// Census of radius-`r` classes over every root of `g`.
pub fn census(g: &Graph, col: &EdgeColoring, r: usize) -> BallCensus {
    let mut ex = BallExtractor::new(g, col);
    let mut classes = BTreeMap::new();
    for v in 0..g.n() {
        let ball = ex.extract(v, r).expect("vertex in range");
        *classes.entry(ball.code_unchecked()).or_insert(0) += 1;
    }
    BallCensus {
        r,
        d: g.d(),
        n: g.n(),
        classes,
    }
}

/// Same result as [`census`], with roots split across the rayon pool.
pub fn census_parallel(g: &Graph, col: &EdgeColoring, r: usize) -> BallCensus {
    const CHUNK: usize = 256;
    let starts: Vec<usize> = (0..g.n()).step_by(CHUNK).collect();
    let classes = starts
        .into_par_iter()
        .map(|start| {
            let mut ex = BallExtractor::new(g, col);
            let mut local = BTreeMap::new();
            for v in start..(start + CHUNK).min(g.n()) {
                let ball = ex.extract(v, r).expect("vertex in range");
                *local.entry(ball.code_unchecked()).or_insert(0u64) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (code, count) in b {
                *a.entry(code).or_insert(0) += count;
            }
            a
        });
    BallCensus {
        r,
        d: g.d(),
        n: g.n(),
        classes,
    }
}

/// Total variation distance `½ Σ |p_a − p_b|` over the union of classes.
pub fn tv_distance(a: &BallCensus, b: &BallCensus) -> Result<BigRational> {
    if a.r != b.r || a.d != b.d {
        return Err(Error::RadiusMismatch(format!(
            "(r={}, d={}) vs (r={}, d={})",
            a.r, a.d, b.r, b.d
        )));
    }
    let p = |c: &BallCensus, code: &BallCode| {
        BigRational::new(
            BigInt::from(c.classes.get(code).copied().unwrap_or(0)),
            BigInt::from(c.n.max(1)),
        )
    };
    let mut total = BigRational::zero();
    let mut codes: Vec<&BallCode> = a.classes.keys().chain(b.classes.keys()).collect();
    codes.sort();
    codes.dedup();
    for code in codes {
        total += (p(a, code) - p(b, code)).abs();
    }
    Ok(total / BigRational::from_integer(BigInt::from(2)))
}

/// Coloring-free canonical code of the radius-`r` ball around `v`.
///
/// Among all labelings that list vertices layer by layer (root first, then
/// distance 1, and so on, any order inside a layer), picks the one whose
/// sequence of back-neighbor lists is lexicographically smallest. Branches
/// whose prefix already exceeds the best sequence are cut.
pub fn canonical_code_uncolored(g: &Graph, v: Vertex, r: usize) -> Result<BallCode> {
    let ball = g.bfs_ball(v, r)?;
    let k = ball.vertices.len();
    if k > UNCOLORED_BALL_LIMIT {
        return Err(Error::BallTooLarge {
            size: k,
            limit: UNCOLORED_BALL_LIMIT,
        });
    }
    let verts = ball.vertices.as_slice();
    let local = |x: Vertex| verts.binary_search(&x).ok();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&x| g.neighbors(x).iter().filter_map(|&w| local(w)).collect())
        .collect();
    let dist: Vec<usize> = verts.iter().map(|x| ball.distance[x]).collect();
    let root = local(v).unwrap();

    let mut search = UncoloredSearch {
        adj: &adj,
        dist: &dist,
        label: vec![None; k],
        words: Vec::with_capacity(k),
        best: None,
    };
    search.label[root] = Some(0);
    search.run(1);

    let best = search.best.expect("at least one labeling");
    let mut s = k.to_string();
    for (i, word) in best.iter().enumerate() {
        s.push_str(&format!(";{}:", i + 2));
        let parts: Vec<String> = word.iter().map(|w| (w + 1).to_string()).collect();
        s.push_str(&parts.join(","));
    }
    Ok(BallCode(s))
}

struct UncoloredSearch<'a> {
    adj: &'a [Vec<usize>],
    dist: &'a [usize],
    label: Vec<Option<u32>>,
    // words[i]: sorted labels of earlier neighbors of the vertex labeled i + 1
    words: Vec<Vec<u32>>,
    best: Option<Vec<Vec<u32>>>,
}

impl UncoloredSearch<'_> {
    fn run(&mut self, next: usize) {
        let k = self.adj.len();
        if next == k {
            if self.best.as_ref().is_none_or(|b| self.words < *b) {
                self.best = Some(self.words.clone());
            }
            return;
        }
        let layer = (0..k)
            .filter(|&x| self.label[x].is_none())
            .map(|x| self.dist[x])
            .min()
            .expect("unlabeled vertex remains");
        let mut candidates: Vec<(Vec<u32>, usize)> = (0..k)
            .filter(|&x| self.label[x].is_none() && self.dist[x] == layer)
            .map(|x| {
                let mut word: Vec<u32> =
                    self.adj[x].iter().filter_map(|&w| self.label[w]).collect();
                word.sort_unstable();
                (word, x)
            })
            .collect();
        // only the smallest word can lead to the minimum
        let min_word = candidates.iter().map(|(w, _)| w).min().unwrap().clone();
        candidates.retain(|(w, _)| *w == min_word);

        for (word, x) in candidates {
            if let Some(best) = &self.best {
                let ord = self.words[..]
                    .cmp(&best[..next - 1])
                    .then_with(|| word.cmp(&best[next - 1]));
                if ord == std::cmp::Ordering::Greater {
                    return;
                }
            }
            self.label[x] = Some(next as u32);
            self.words.push(word);
            self.run(next + 1);
            self.words.pop();
            self.label[x] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::proper_edge_coloring;

    fn cycle_alternating(n: usize) -> (Graph, EdgeColoring) {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n, &edges, 2).unwrap();
        let colors = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let low = if v == u + 1 { u } else { v };
                (low % 2) as Color + 1
            })
            .collect();
        let col = EdgeColoring::new(&g, colors).unwrap();
        (g, col)
    }

    #[test]
    fn k2_ball() {
        let g = Graph::new(2, &[(0, 1)], 1).unwrap();
        let col = EdgeColoring::new(&g, vec![1]).unwrap();
        let b0 = extract_rooted_ball(&g, &col, 0, 1).unwrap();
        let b1 = extract_rooted_ball(&g, &col, 1, 1).unwrap();
        assert_eq!(canonical_code(&b0).unwrap().as_str(), "2;1:(2,1);2:(1,1)");
        assert_eq!(b0, b1);
    }

    #[test]
    fn alternating_cycle_radius_one() {
        let (g, col) = cycle_alternating(6);
        let codes: Vec<_> = (0..6)
            .map(|v| canonical_code(&extract_rooted_ball(&g, &col, v, 1).unwrap()).unwrap())
            .collect();
        assert!(codes.iter().all(|c| *c == codes[0]));
        assert_eq!(codes[0].as_str(), "3;1:(2,1),(3,2);2:(1,1);3:(1,2)");
    }

    #[test]
    fn path_ball_excludes_far_vertex() {
        let g = Graph::new(3, &[(0, 1), (1, 2)], 2).unwrap();
        let col = proper_edge_coloring(&g);
        let b = extract_rooted_ball(&g, &col, 0, 1).unwrap();
        assert_eq!(b.k(), 2);
        assert_eq!(extract_rooted_ball(&g, &col, 1, 0).unwrap().k(), 1);
        assert_eq!(
            canonical_code(&extract_rooted_ball(&g, &col, 1, 0).unwrap())
                .unwrap()
                .as_str(),
            "1;1:"
        );
    }

    #[test]
    fn census_of_cycles() {
        let (g, col) = cycle_alternating(6);
        let c = census(&g, &col, 1);
        assert_eq!(c.num_classes(), 1);
        assert_eq!(c.classes.values().sum::<u64>(), 6);

        let edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let c5 = Graph::new(5, &edges, 2).unwrap();
        let col5 = proper_edge_coloring(&c5);
        let cen = census(&c5, &col5, 1);
        assert!(cen.num_classes() >= 2);
        assert_eq!(cen.classes.values().sum::<u64>(), 5);
        assert_eq!(cen.total_probability(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn tv_examples() {
        let mk = |classes: &[(&str, u64)], n| BallCensus {
            r: 1,
            d: 2,
            n,
            classes: classes
                .iter()
                .map(|&(c, k)| (BallCode::new(c), k))
                .collect(),
        };
        let a = mk(&[("A", 2)], 2);
        let b = mk(&[("A", 1), ("B", 1)], 2);
        let c = mk(&[("C", 4)], 4);
        assert!(tv_distance(&a, &a).unwrap().is_zero());
        assert_eq!(tv_distance(&a, &c).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(
            tv_distance(&a, &b).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        let mut other = a.clone();
        other.r = 2;
        assert!(matches!(tv_distance(&a, &other), Err(Error::RadiusMismatch(_))));
    }

    #[test]
    fn code_round_trip_and_rejection() {
        let (g, col) = cycle_alternating(8);
        let b = extract_rooted_ball(&g, &col, 3, 3).unwrap();
        let code = canonical_code(&b).unwrap();
        assert_eq!(RootedBall::from_code(&code, 3, 2).unwrap(), b);
        assert!(RootedBall::from_code(&BallCode::new("2;1:(2,1)"), 1, 2).is_err());
        assert!(RootedBall::from_code(&BallCode::new("2;1:(2,1);2:(1,2)"), 1, 2).is_err());
        assert_eq!(
            BallCode::from_versioned(&code.to_versioned()).unwrap(),
            code
        );
    }

    #[test]
    fn non_canonical_labeling_is_rejected() {
        // path 1 -(2)- root -(1)- 2: the color-1 neighbor must get label 2
        let adjacency = vec![vec![(1, 2), (2, 1)], vec![(0, 2)], vec![(0, 1)]];
        assert!(matches!(
            RootedBall::from_adjacency(1, 2, adjacency),
            Err(Error::InvariantViolation(_))
        ));
        let adjacency = vec![vec![(1, 1), (2, 2)], vec![(0, 1)], vec![(0, 2)]];
        assert!(RootedBall::from_adjacency(1, 2, adjacency).is_ok());
    }

    #[test]
    fn uncolored_codes() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = Graph::new(6, &edges, 2).unwrap();
        let codes: Vec<_> = (0..6)
            .map(|v| canonical_code_uncolored(&c6, v, 1).unwrap())
            .collect();
        assert!(codes.iter().all(|c| *c == codes[0]));

        let p7 = Graph::new(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>(), 2).unwrap();
        assert_eq!(canonical_code_uncolored(&p7, 3, 1).unwrap(), codes[0]);
        assert_ne!(canonical_code_uncolored(&p7, 0, 1).unwrap(), codes[0]);

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 3).unwrap();
        assert_ne!(canonical_code_uncolored(&k4, 0, 1).unwrap(), codes[0]);

        let big = Graph::new(
            30,
            &(0..30).map(|i| (i, (i + 1) % 30)).collect::<Vec<_>>(),
            2,
        )
        .unwrap();
        assert!(matches!(
            canonical_code_uncolored(&big, 0, 10),
            Err(Error::BallTooLarge { .. })
        ));
    }
}
