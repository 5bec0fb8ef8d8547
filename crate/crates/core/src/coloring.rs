//! Proper edge colorings with colors `1..=d+1`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Color = u32;

/// A color for every edge of a graph, indexed by the graph's edge numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Wraps per-edge colors and checks that they form a proper coloring of
    /// `g` with colors in `1..=g.d() + 1`.
    pub fn new(g: &Graph, colors: Vec<Color>) -> Result<Self> {
        let coloring = EdgeColoring { colors };
        coloring.validate(g)?;
        Ok(coloring)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} edges",
                self.colors.len(),
                g.edge_count()
            )));
        }
        let max = g.d() as Color + 1;
        if let Some((e, &c)) = self
            .colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > max)
        {
            return Err(Error::InvalidColoring(format!(
                "edge {:?} has color {c} outside 1..={max}",
                g.edges()[e]
            )));
        }
        for v in 0..g.n() {
            let mut seen: Vec<Color> = g.incident_edges(v).map(|(_, e)| self.colors[e]).collect();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidColoring(format!(
                    "two edges at vertex {v} share a color"
                )));
            }
        }
        Ok(())
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of_edge(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn color(&self, g: &Graph, u: Vertex, v: Vertex) -> Option<Color> {
        g.edge_index(u, v).map(|e| self.colors[e])
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Colors the edges of `g` with at most `Δ + 1 ≤ d + 1` colors using
/// Misra–Gries fan rotation. Edges are processed in lexicographic order, so
/// the result is a deterministic function of the graph.
pub fn proper_edge_coloring(g: &Graph) -> EdgeColoring {
    let mut mg = MisraGries::new(g);
    for &(u, v) in g.edges() {
        mg.color_edge(u, v);
    }
    let colors = mg
        .colors
        .into_iter()
        .map(|c| c.expect("every edge colored"))
        .collect();
    let coloring = EdgeColoring { colors };
    debug_assert!(coloring.validate(g).is_ok());
    coloring
}

struct MisraGries<'a> {
    g: &'a Graph,
    palette: Color,
    colors: Vec<Option<Color>>,
    // at[v][c] = neighbor joined to v by the edge of color c
    at: Vec<Vec<Option<Vertex>>>,
}

impl<'a> MisraGries<'a> {
    fn new(g: &'a Graph) -> Self {
        let palette = g.max_degree() as Color + 1;
        MisraGries {
            g,
            palette,
            colors: vec![None; g.edge_count()],
            at: vec![vec![None; palette as usize + 1]; g.n()],
        }
    }

    fn edge(&self, u: Vertex, v: Vertex) -> usize {
        self.g.edge_index(u, v).expect("edge exists")
    }

    fn color_at(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.colors[self.edge(u, v)]
    }

    fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn free_color(&self, v: Vertex) -> Color {
        (1..=self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("degree < palette leaves a free color")
    }

    fn set(&mut self, u: Vertex, v: Vertex, c: Option<Color>) {
        let e = self.edge(u, v);
        if let Some(old) = self.colors[e] {
            self.at[u][old as usize] = None;
            self.at[v][old as usize] = None;
        }
        self.colors[e] = c;
        if let Some(c) = c {
            debug_assert!(self.is_free(u, c) && self.is_free(v, c));
            self.at[u][c as usize] = Some(v);
            self.at[v][c as usize] = Some(u);
        }
    }

    /// Maximal fan at `u` starting with the uncolored edge `(u, v)`.
    fn maximal_fan(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.g.degree(u)];
        let nbrs = self.g.neighbors(u);
        in_fan[nbrs.binary_search(&v).unwrap()] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = nbrs.iter().enumerate().find(|&(i, &w)| {
                !in_fan[i] && matches!(self.color_at(u, w), Some(c) if self.is_free(last, c))
            });
            match next {
                Some((i, &w)) => {
                    in_fan[i] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    fn is_fan(&self, u: Vertex, fan: &[Vertex]) -> bool {
        if self.color_at(u, fan[0]).is_some() {
            return false;
        }
        fan.windows(2).all(|w| match self.color_at(u, w[1]) {
            Some(c) => self.is_free(w[0], c),
            None => false,
        })
    }

    fn color_edge(&mut self, u: Vertex, v: Vertex) {
        let fan = self.maximal_fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());

        // invert the d/c alternating path starting at u
        if c != d {
            let mut path = Vec::new();
            let (mut cur, mut col) = (u, d);
            while let Some(next) = self.at[cur][col as usize] {
                path.push((cur, next, col));
                cur = next;
                col = if col == d { c } else { d };
            }
            for &(a, b, _) in &path {
                self.set(a, b, None);
            }
            for &(a, b, col) in &path {
                let flipped = if col == d { c } else { d };
                self.set(a, b, Some(flipped));
            }
        }

        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(u, &fan[..=i]))
            .expect("Misra-Gries guarantees a rotatable sub-fan");

        // rotate the sub-fan fan[0..=w] and close it with color d
        let shifted: Vec<Option<Color>> =
            (0..w).map(|i| self.color_at(u, fan[i + 1])).collect();
        for &x in &fan[..=w] {
            self.set(u, x, None);
        }
        for (i, col) in shifted.into_iter().enumerate() {
            self.set(u, fan[i], col);
        }
        self.set(u, fan[w], Some(d));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges, 2).unwrap()
    }

    #[test]
    fn star_gets_distinct_colors() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)], 3).unwrap();
        let col = proper_edge_coloring(&g);
        assert_eq!(col.num_colors(), 3);
        col.validate(&g).unwrap();
    }

    #[test]
    fn path_adjacent_edges_differ() {
        let g = Graph::new(3, &[(0, 1), (1, 2)], 2).unwrap();
        let col = proper_edge_coloring(&g);
        assert_ne!(col.color(&g, 0, 1), col.color(&g, 1, 2));
    }

    #[test]
    fn odd_cycle_needs_three_colors() {
        let g = cycle(5);
        let col = proper_edge_coloring(&g);
        col.validate(&g).unwrap();
        assert_eq!(col.num_colors(), 3);
        // brute force: no assignment from {1, 2} is proper
        let proper_two = (0u32..1 << 5).any(|mask| {
            let colors: Vec<Color> = (0..5).map(|i| 1 + (mask >> i & 1)).collect();
            EdgeColoring::new(&g, colors).is_ok()
        });
        assert!(!proper_two);
    }

    #[test]
    fn complete_graphs_within_palette() {
        for n in 2..9 {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            let g = Graph::new(n, &edges, n - 1).unwrap();
            let col = proper_edge_coloring(&g);
            col.validate(&g).unwrap();
            assert!(col.num_colors() <= n);
        }
    }

    #[test]
    fn deterministic() {
        let g = cycle(9);
        assert_eq!(proper_edge_coloring(&g), proper_edge_coloring(&g));
    }

    #[test]
    fn rejects_improper_colorings() {
        let g = Graph::new(3, &[(0, 1), (1, 2)], 2).unwrap();
        assert!(EdgeColoring::new(&g, vec![1, 1]).is_err());
        assert!(EdgeColoring::new(&g, vec![1, 4]).is_err());
        assert!(EdgeColoring::new(&g, vec![0, 1]).is_err());
        assert!(EdgeColoring::new(&g, vec![1]).is_err());
        assert!(EdgeColoring::new(&g, vec![3, 1]).is_ok());
    }
}
