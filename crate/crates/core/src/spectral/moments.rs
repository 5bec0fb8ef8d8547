//! Exact moments `Tr(Δᵖ)/n` of the Laplacian spectral measure.
//!
//! Two routes compute the same number. [`moment_global`] sums the diagonal
//! of `Δᵖ` over the whole graph. [`moment_local`] only looks at the census
//! of radius-`p` balls: the diagonal entry at `v` is a function of the ball
//! around `v`, so the moment is the census-weighted average of that
//! function. Diagonal entries are computed as `⟨Δᵃ e_v, Δᵇ e_v⟩` with
//! `a + b = p`, in `i128` with a `BigInt` fallback on overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::census::{census_parallel, BallCensus, RootedBall};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

trait Exact: Clone + Zero + CheckedAdd + CheckedSub + CheckedMul + From<i64> {}
impl Exact for i128 {}
impl Exact for BigInt {}

struct Walker<T> {
    cur: Vec<T>,
    next: Vec<T>,
    cur_support: Vec<usize>,
    next_support: Vec<usize>,
    in_next: Vec<bool>,
}

impl<T: Exact> Walker<T> {
    fn new(n: usize) -> Self {
        Walker {
            cur: vec![T::zero(); n],
            next: vec![T::zero(); n],
            cur_support: Vec::new(),
            next_support: Vec::new(),
            in_next: vec![false; n],
        }
    }

    fn reset(&mut self) {
        for &u in &self.cur_support {
            self.cur[u] = T::zero();
        }
        self.cur_support.clear();
    }

    fn add_next(&mut self, u: usize, x: &T) -> Option<()> {
        if !self.in_next[u] {
            self.in_next[u] = true;
            self.next_support.push(u);
        }
        self.next[u] = self.next[u].checked_add(x)?;
        Some(())
    }

    // cur <- Δ cur
    fn step<'a, F>(&mut self, nbrs: &F) -> Option<()>
    where
        F: Fn(usize) -> &'a [usize],
    {
        let support = std::mem::take(&mut self.cur_support);
        for &u in &support {
            let xu = std::mem::replace(&mut self.cur[u], T::zero());
            if xu.is_zero() {
                continue;
            }
            let adj = nbrs(u);
            let diag = xu.checked_mul(&T::from(adj.len() as i64))?;
            self.add_next(u, &diag)?;
            let neg = T::zero().checked_sub(&xu)?;
            for &w in adj {
                self.add_next(w, &neg)?;
            }
        }
        self.cur_support = support;
        self.cur_support.clear();
        std::mem::swap(&mut self.cur, &mut self.next);
        std::mem::swap(&mut self.cur_support, &mut self.next_support);
        for &u in &self.cur_support {
            self.in_next[u] = false;
        }
        Some(())
    }

    /// `(Δᵖ)_{vv}`, or `None` on overflow of `T`.
    fn diagonal<'a, F>(&mut self, nbrs: &F, v: usize, p: usize) -> Option<T>
    where
        F: Fn(usize) -> &'a [usize],
    {
        self.reset();
        self.cur[v] = T::from(1);
        self.cur_support.push(v);
        let half = p / 2;
        let mut snapshot = Vec::new();
        for step in 0..p - half {
            if step == half {
                snapshot = self.sparse();
            }
            self.step(nbrs)?;
        }
        if half == p - half {
            snapshot = self.sparse();
        }
        let mut acc = T::zero();
        for (u, x) in &snapshot {
            acc = acc.checked_add(&x.checked_mul(&self.cur[*u])?)?;
        }
        Some(acc)
    }

    fn sparse(&self) -> Vec<(usize, T)> {
        self.cur_support
            .iter()
            .map(|&u| (u, self.cur[u].clone()))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }
}

fn diagonal_exact<'a, F>(
    fast: &mut Walker<i128>,
    slow: &mut Option<Walker<BigInt>>,
    nbrs: &F,
    v: usize,
    p: usize,
) -> BigInt
where
    F: Fn(usize) -> &'a [usize],
{
    if let Some(x) = fast.diagonal(nbrs, v, p) {
        return BigInt::from(x);
    }
    let n = fast.cur.len();
    slow.get_or_insert_with(|| Walker::new(n))
        .diagonal(nbrs, v, p)
        .expect("big integers do not overflow")
}

/// `Tr(Δᵖ)/|V|` over the whole graph, exact.
pub fn moment_global(g: &Graph, p: usize) -> BigRational {
    if g.n() == 0 {
        return BigRational::zero();
    }
    let nbrs = |u: usize| g.neighbors(u);
    let mut fast = Walker::new(g.n());
    let mut slow = None;
    let trace = (0..g.n()).fold(BigInt::zero(), |acc, v| {
        acc + diagonal_exact(&mut fast, &mut slow, &nbrs, v, p)
    });
    BigRational::new(trace, BigInt::from(g.n()))
}

/// `(Δ_ballᵖ)` at the root. Requires `radius ≥ p`, which keeps every
/// closed walk of length `p` inside the part of the ball whose induced
/// degrees are the true degrees.
pub fn root_moment(b: &RootedBall, p: usize) -> Result<BigInt> {
    if b.radius() < p {
        return Err(Error::RadiusTooSmall {
            radius: b.radius(),
            power: p,
        });
    }
    if p == 0 {
        return Ok(BigInt::one());
    }
    let adjacency: Vec<Vec<usize>> = (0..b.k())
        .map(|u| b.neighbors(u).iter().map(|&(w, _)| w as usize).collect())
        .collect();
    let nbrs = |u: usize| adjacency[u].as_slice();
    let mut fast = Walker::new(b.k());
    let mut slow = None;
    Ok(diagonal_exact(&mut fast, &mut slow, &nbrs, 0, p))
}

/// Census-weighted average of [`root_moment`] for a census of radius `≥ p`.
pub fn moment_from_census(c: &BallCensus, p: usize) -> Result<BigRational> {
    if c.n == 0 {
        return Ok(BigRational::zero());
    }
    let mut total = BigInt::zero();
    for (code, &count) in &c.classes {
        let ball = RootedBall::from_code(code, c.r, c.d)?;
        total += root_moment(&ball, p)? * BigInt::from(count);
    }
    Ok(BigRational::new(total, BigInt::from(c.n)))
}

/// `Σ_A p_G(A) · s_p(A)` over the radius-`p` census.
pub fn moment_local(g: &Graph, col: &EdgeColoring, p: usize) -> Result<BigRational> {
    moment_from_census(&census_parallel(g, col, p), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::extract_rooted_ball;
    use crate::coloring::proper_edge_coloring;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges, 2).unwrap()
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn global_moments_of_cycles() {
        let c = cycle(12);
        assert_eq!(moment_global(&c, 0), int(1));
        assert_eq!(moment_global(&c, 1), int(2));
        assert_eq!(moment_global(&c, 2), int(6));
        assert_eq!(moment_global(&c, 3), int(20));
    }

    #[test]
    fn root_moment_examples() {
        let c = cycle(10);
        let col = proper_edge_coloring(&c);
        let b = extract_rooted_ball(&c, &col, 0, 2).unwrap();
        assert_eq!(root_moment(&b, 0).unwrap(), BigInt::one());
        assert_eq!(root_moment(&b, 1).unwrap(), BigInt::from(2));
        assert_eq!(root_moment(&b, 2).unwrap(), BigInt::from(6));
        assert!(matches!(
            root_moment(&b, 3),
            Err(Error::RadiusTooSmall { radius: 2, power: 3 })
        ));
    }

    #[test]
    fn local_equals_global_small() {
        let c = cycle(12);
        let col = proper_edge_coloring(&c);
        assert_eq!(moment_local(&c, &col, 3).unwrap(), int(20));
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 3).unwrap();
        let col = proper_edge_coloring(&k4);
        for p in 0..6 {
            assert_eq!(moment_local(&k4, &col, p).unwrap(), moment_global(&k4, p));
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // 4·5^69 does not fit in i128
        let k5 = Graph::new(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            4,
        )
        .unwrap();
        // spectrum of K5 is {0, 5, 5, 5, 5}: Tr(Δᵖ)/5 = 4·5ᵖ/5
        let p = 70;
        let expected = BigRational::from_integer(BigInt::from(4) * BigInt::from(5).pow(p - 1));
        assert_eq!(moment_global(&k5, p as usize), expected);
    }
}
