//! Graph Laplacian spectra and spectral measures.
//!
//! The spectral measure of a graph on `n` vertices puts mass `1/n` on every
//! Laplacian eigenvalue, counted with multiplicity. Exact moments of that
//! measure live in [`moments`]; they never pass through floating point.

pub mod eigen;
pub mod moments;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use eigen::{jacobi_eigenvalues, SymMatrix, Tridiagonal};

pub use moments::{moment_from_census, moment_global, moment_local, root_moment};

/// Largest graph accepted by the dense solvers.
pub const MAX_DENSE_VERTICES: usize = 4096;

/// Absolute tolerance used when comparing eigenvalues with thresholds.
pub const EIGEN_TOLERANCE: f64 = 1e-9;

/// Dense integer Laplacian `D − A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_f64(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..=i {
                m.set(i, j, self.get(i, j) as f64);
            }
        }
        m
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for &w in g.neighbors(v) {
            entries[v * n + w] = -1;
        }
    }
    LaplacianMatrix { n, entries }
}

fn laplacian_f64(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
        for &w in g.neighbors(v) {
            m.set(v, w, -1.0);
        }
    }
    m
}

/// Which dense eigensolver computes a spectrum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Eigensolver {
    /// Householder tridiagonalization followed by implicit QL.
    #[default]
    Householder,
    /// Cyclic Jacobi rotations on the full matrix.
    Jacobi,
}

/// Laplacian eigenvalues with uniform weight `1/n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralMeasure {
    pub d: usize,
    /// Ascending, clamped to `[0, 2d]`.
    pub eigenvalues: Vec<f64>,
    /// Largest distance any raw eigenvalue was moved by clamping.
    pub clamped_by: f64,
}

impl SpectralMeasure {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `∫ xᵖ dλ`, in floating point.
    pub fn moment(&self, p: u32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(p as i32)).sum::<f64>() / self.n() as f64
    }

    /// Mass of `[0, x]`.
    pub fn cdf(&self, x: f64) -> f64 {
        self.eigenvalues.partition_point(|&e| e <= x) as f64 / self.n() as f64
    }

    /// Smallest eigenvalue above the kernel tolerance.
    pub fn first_nonzero(&self) -> Option<f64> {
        self.eigenvalues
            .iter()
            .copied()
            .find(|&x| x > EIGEN_TOLERANCE)
    }
}

pub fn spectrum(g: &Graph) -> Result<SpectralMeasure> {
    spectrum_with(g, Eigensolver::default())
}

pub fn spectrum_with(g: &Graph, solver: Eigensolver) -> Result<SpectralMeasure> {
    guard(g)?;
    let m = laplacian_f64(g);
    let raw = match solver {
        Eigensolver::Householder => Tridiagonal::reduce(m).eigenvalues(),
        Eigensolver::Jacobi => jacobi_eigenvalues(m),
    };
    let upper = 2.0 * g.d() as f64;
    let mut clamped_by = 0.0f64;
    let eigenvalues = raw
        .into_iter()
        .map(|x| {
            let c = x.clamp(0.0, upper);
            clamped_by = clamped_by.max((c - x).abs());
            c
        })
        .collect();
    Ok(SpectralMeasure {
        d: g.d(),
        eigenvalues,
        clamped_by,
    })
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_DENSE_VERTICES {
        return Err(Error::TooLarge {
            what: "dense eigensolver",
            size: g.n(),
            limit: MAX_DENSE_VERTICES,
        });
    }
    Ok(())
}

/// Second-smallest Laplacian eigenvalue and a unit eigenvector for it,
/// orthogonal to the constant vector.
pub fn fiedler_vector(g: &Graph) -> Result<(f64, Vec<f64>)> {
    guard(g)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::BadParams(
            "a Fiedler vector needs at least two vertices".into(),
        ));
    }
    let tri = Tridiagonal::reduce(laplacian_f64(g));
    let lambda = tri.eigenvalues()[1];
    let ones = vec![1.0 / (n as f64).sqrt(); n];
    Ok((lambda, tri.eigenvector(lambda, &[ones])))
}

/// `s(G, δ)`: fraction of eigenvalues at most `δ` (with the fixed
/// [`EIGEN_TOLERANCE`] slack).
pub fn s_fraction(m: &SpectralMeasure, delta: f64) -> Ratio<u64> {
    let count = m
        .eigenvalues
        .partition_point(|&x| x <= delta + EIGEN_TOLERANCE);
    Ratio::new(count as u64, m.n().max(1) as u64)
}

/// Equal-width, right-closed binning of a spectral measure on `[0, 2d]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub d: usize,
    pub bins: usize,
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub masses: Vec<f64>,
}

pub fn ids_histogram(m: &SpectralMeasure, bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::BadParams("histogram needs at least one bin".into()));
    }
    let upper = 2.0 * m.d as f64;
    let edges: Vec<f64> = (0..=bins)
        .map(|i| upper * i as f64 / bins as f64)
        .collect();
    let mut counts = vec![0u64; bins];
    for &x in &m.eigenvalues {
        // first bin whose right edge reaches x; bin 0 also holds x = 0
        let i = edges[1..]
            .partition_point(|&e| e + EIGEN_TOLERANCE < x)
            .min(bins - 1);
        counts[i] += 1;
    }
    let n = m.n().max(1) as f64;
    let masses = counts.iter().map(|&c| c as f64 / n).collect();
    Ok(Histogram {
        d: m.d,
        bins,
        edges,
        counts,
        masses,
    })
}

/// `sup_x |F_a(x) − F_b(x)|` over the right-continuous distribution
/// functions, evaluated at every breakpoint of either measure.
pub fn kolmogorov_distance(a: &SpectralMeasure, b: &SpectralMeasure) -> Result<f64> {
    if a.d != b.d {
        return Err(Error::BadParams(format!(
            "spectral measures have different degree bounds {} and {}",
            a.d, b.d
        )));
    }
    let (na, nb) = (a.n() as f64, b.n() as f64);
    let (ea, eb) = (&a.eigenvalues, &b.eigenvalues);
    let (mut i, mut j) = (0, 0);
    let mut best = 0.0f64;
    while i < ea.len() || j < eb.len() {
        let x = match (ea.get(i), eb.get(j)) {
            (Some(&p), Some(&q)) => p.min(q),
            (Some(&p), None) => p,
            (None, Some(&q)) => q,
            (None, None) => unreachable!(),
        };
        while i < ea.len() && ea[i] <= x {
            i += 1;
        }
        while j < eb.len() && eb[j] <= x {
            j += 1;
        }
        best = best.max((i as f64 / na - j as f64 / nb).abs());
    }
    Ok(best)
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

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn laplacian_matrices() {
        let k2 = Graph::new(2, &[(0, 1)], 1).unwrap();
        let l = laplacian(&k2);
        assert_eq!(l.row(0), &[1, -1]);
        assert_eq!(l.row(1), &[-1, 1]);

        let l4 = laplacian(&cycle(4));
        assert_eq!(l4.row(0), &[2, -1, 0, -1]);
        assert_eq!(l4.row(2), &[0, -1, 2, -1]);
        for i in 0..4 {
            assert_eq!(l4.row(i).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn closed_form_spectra() {
        for solver in [Eigensolver::Householder, Eigensolver::Jacobi] {
            let k2 = Graph::new(2, &[(0, 1)], 1).unwrap();
            assert!(close(
                &spectrum_with(&k2, solver).unwrap().eigenvalues,
                &[0.0, 2.0],
                1e-9
            ));
            assert!(close(
                &spectrum_with(&cycle(4), solver).unwrap().eigenvalues,
                &[0.0, 2.0, 2.0, 4.0],
                1e-9
            ));
            assert!(close(
                &spectrum_with(&complete(4), solver).unwrap().eigenvalues,
                &[0.0, 4.0, 4.0, 4.0],
                1e-9
            ));
        }
    }

    #[test]
    fn s_fraction_examples() {
        let m = spectrum(&cycle(4)).unwrap();
        assert_eq!(s_fraction(&m, 2.0), Ratio::new(3, 4));
        assert_eq!(s_fraction(&m, 0.0), Ratio::new(1, 4));
        assert_eq!(s_fraction(&m, 4.0), Ratio::new(1, 1));
    }

    #[test]
    fn histograms() {
        let m = spectrum(&cycle(4)).unwrap();
        let h = ids_histogram(&m, 2).unwrap();
        assert_eq!(h.edges, vec![0.0, 2.0, 4.0]);
        assert_eq!(h.counts, vec![3, 1]);
        assert_eq!(h.masses, vec![0.75, 0.25]);
        assert_eq!(ids_histogram(&m, 1).unwrap().masses, vec![1.0]);
        assert!(ids_histogram(&m, 0).is_err());

        let points = SpectralMeasure {
            d: 2,
            eigenvalues: vec![0.5, 1.5, 2.5, 3.5],
            clamped_by: 0.0,
        };
        assert_eq!(ids_histogram(&points, 4).unwrap().masses, vec![0.25; 4]);
    }

    #[test]
    fn kolmogorov_examples() {
        let m = spectrum(&cycle(6)).unwrap();
        assert_eq!(kolmogorov_distance(&m, &m).unwrap(), 0.0);
        let at = |x: f64| SpectralMeasure {
            d: 2,
            eigenvalues: vec![x],
            clamped_by: 0.0,
        };
        assert_eq!(kolmogorov_distance(&at(0.0), &at(2.0)).unwrap(), 1.0);
        let other_d = SpectralMeasure {
            d: 3,
            ..at(0.0)
        };
        assert!(kolmogorov_distance(&at(0.0), &other_d).is_err());
    }

    #[test]
    fn fiedler_of_a_path() {
        let n = 9;
        let path = Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>(), 2).unwrap();
        let (lambda, x) = fiedler_vector(&path).unwrap();
        let expected = 2.0 - 2.0 * (std::f64::consts::PI / n as f64).cos();
        assert!((lambda - expected).abs() < 1e-12);
        // monotone along the path
        let increasing = x.windows(2).all(|w| w[0] < w[1]);
        let decreasing = x.windows(2).all(|w| w[0] > w[1]);
        assert!(increasing || decreasing);
        assert!(x.iter().sum::<f64>().abs() < 1e-9);
    }

    #[test]
    fn size_guard() {
        let big = cycle(MAX_DENSE_VERTICES + 1);
        assert!(matches!(spectrum(&big), Err(Error::TooLarge { .. })));
    }
}
