//! Local statistics, Laplacian spectra and isoperimetry of bounded-degree
//! graphs, and of sequences of them.
//!
//! * [`graph`] and [`coloring`]: validated simple graphs with a degree
//!   bound, BFS balls, vertex boundaries, and proper `d + 1` edge colorings
//!   (Misra–Gries).
//! * [`census`]: canonically labeled rooted colored balls, their codes,
//!   and the distribution of codes over all roots of a graph.
//! * [`spectral`]: the Laplacian, its spectrum as a uniform measure,
//!   small-eigenvalue fractions, histograms, Kolmogorov distances, and
//!   exact trace moments computed globally or from a ball census.
//! * [`isoperimetry`]: boundary ratios, Cheeger constants, enumeration of
//!   small connected sets with small boundary, and disjoint packings.
//! * [`generators`], [`harness`] and [`io`]: graph families, experiments
//!   along sequences, and file formats.
//!
//! ```
//! use graph_limits::census::{census, tv_distance};
//! use graph_limits::generators::{cycle, cycle_coloring};
//! use graph_limits::spectral::{moment_global, moment_local};
//!
//! let a = cycle(100).unwrap();
//! let b = cycle(200).unwrap();
//! let (ca, cb) = (cycle_coloring(&a).unwrap(), cycle_coloring(&b).unwrap());
//! let tv = tv_distance(&census(&a, &ca, 3), &census(&b, &cb, 3)).unwrap();
//! assert!(num_traits::Zero::is_zero(&tv));
//! assert_eq!(moment_local(&a, &ca, 3).unwrap(), moment_global(&a, 3));
//! ```

pub mod census;
pub mod coloring;
pub mod error;
pub mod fraction;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod isoperimetry;
pub mod spectral;

pub use coloring::{proper_edge_coloring, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
