//! Graph sequences and the experiments run along them.

use std::path::PathBuf;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{census_parallel, tv_distance, BallCensus};
use crate::coloring::{proper_edge_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::fraction::{big_f64, serde_big, serde_fraction, Fraction};
use crate::generators::{self, member_seed};
use crate::graph::{Graph, Vertex};
use crate::isoperimetry::{covered_fraction, enumerate_good_sets, greedy_packing, Status};
use crate::spectral::{
    ids_histogram, kolmogorov_distance, moment_from_census, moment_global, s_fraction,
    spectrum, Histogram, SpectralMeasure,
};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Consecutive TV distances below this count as a plateau.
pub const PLATEAU: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Size is the number of vertices.
    Cycle,
    /// Size is the side length `s` of an `s × s` torus.
    Torus2d,
    /// Size is the number of vertices; `d` is the regularity.
    RandomRegular,
    /// Size is the depth.
    BinaryTree,
    /// One graph file (`n m d` format) per member; sizes are ignored.
    FromFiles(Vec<PathBuf>),
}

/// A graph sequence: family, increasing sizes, degree bound and master seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub d: usize,
    pub seed: u64,
}

impl SequenceSpec {
    /// Spec with the family's natural degree bound.
    pub fn new(family: Family, sizes: Vec<usize>, seed: u64) -> Self {
        let d = match family {
            Family::Cycle => 2,
            Family::Torus2d => 4,
            Family::RandomRegular | Family::BinaryTree => 3,
            Family::FromFiles(_) => 0,
        };
        SequenceSpec {
            family,
            sizes,
            d,
            seed,
        }
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = d;
        self
    }

    pub fn len(&self) -> usize {
        match &self.family {
            Family::FromFiles(paths) => paths.len(),
            _ => self.sizes.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::BadParams("sequence has no members".into()));
        }
        if !matches!(self.family, Family::FromFiles(_))
            && self.sizes.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::BadParams(format!(
                "sizes must be strictly increasing, got {:?}",
                self.sizes
            )));
        }
        let natural = match self.family {
            Family::Cycle => 2,
            Family::Torus2d => 4,
            Family::BinaryTree => 3,
            Family::RandomRegular => 1,
            Family::FromFiles(_) => 0,
        };
        if self.d < natural {
            return Err(Error::BadParams(format!(
                "degree bound {} is below the family's degree {natural}",
                self.d
            )));
        }
        Ok(())
    }

    pub fn member_seeds(&self) -> Vec<u64> {
        (0..self.len()).map(|i| member_seed(self.seed, i)).collect()
    }
}

/// Member `index` of the sequence with its coloring.
pub fn generate(spec: &SequenceSpec, index: usize) -> Result<(Graph, EdgeColoring)> {
    spec.validate()?;
    if index >= spec.len() {
        return Err(Error::BadParams(format!(
            "member {index} requested from a sequence of {}",
            spec.len()
        )));
    }
    let size = spec.sizes.get(index).copied().unwrap_or(0);
    let (g, col) = match &spec.family {
        Family::Cycle => {
            let g = generators::cycle(size)?;
            let col = generators::cycle_coloring(&g)?;
            (g, col)
        }
        Family::Torus2d => {
            let g = generators::torus2d(size)?;
            let col = generators::torus_coloring(&g, size)?;
            (g, col)
        }
        Family::RandomRegular => {
            let g = generators::random_regular(spec.d, size, member_seed(spec.seed, index))?;
            let col = proper_edge_coloring(&g);
            (g, col)
        }
        Family::BinaryTree => {
            let g = generators::binary_tree(size)?;
            let col = proper_edge_coloring(&g);
            (g, col)
        }
        Family::FromFiles(paths) => {
            let g = crate::io::read_graph_file(&paths[index], None)?;
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            let col = proper_edge_coloring(&g);
            return Ok((g, col));
        }
    };
    let g = g.with_bound(spec.d)?;
    let col = EdgeColoring::new(&g, col.colors().to_vec())?;
    Ok((g, col))
}

pub fn generate_all(spec: &SequenceSpec) -> Result<Vec<(Graph, EdgeColoring)>> {
    spec.validate()?;
    (0..spec.len())
        .into_par_iter()
        .map(|i| generate(spec, i))
        .collect()
}

/// Where a report's numbers came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub spec: Option<SequenceSpec>,
    pub member_seeds: Vec<u64>,
}

impl Provenance {
    pub fn new(spec: Option<&SequenceSpec>) -> Self {
        Provenance {
            tool: TOOL.into(),
            version: VERSION.into(),
            spec: spec.cloned(),
            member_seeds: spec.map(|s| s.member_seeds()).unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberInfo {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    pub d: usize,
}

impl MemberInfo {
    fn new(index: usize, g: &Graph) -> Self {
        MemberInfo {
            index,
            n: g.n(),
            edges: g.edge_count(),
            d: g.d(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub member: MemberInfo,
    pub classes: usize,
    /// Count of the most frequent class.
    pub top_count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub provenance: Provenance,
    pub r: usize,
    pub members: Vec<CensusSummary>,
    /// `tv[i][j]` between members `i` and `j`, exact.
    pub tv: Vec<Vec<String>>,
    /// TV distance between members `i` and `i + 1`, as floats.
    pub consecutive: Vec<f64>,
    /// Whether each consecutive distance is below [`PLATEAU`].
    pub plateau: Vec<bool>,
    #[serde(skip)]
    pub censuses: Vec<BallCensus>,
    #[serde(skip)]
    pub tv_exact: Vec<Vec<BigRational>>,
}

pub fn run_convergence(spec: &SequenceSpec, r: usize) -> Result<ConvergenceReport> {
    let members = generate_all(spec)?;
    let mut report = convergence_of(&members, r)?;
    report.provenance = Provenance::new(Some(spec));
    Ok(report)
}

/// Census comparison over explicit members (which may mix families).
pub fn convergence_of(members: &[(Graph, EdgeColoring)], r: usize) -> Result<ConvergenceReport> {
    let censuses: Vec<BallCensus> = members
        .par_iter()
        .map(|(g, col)| census_parallel(g, col, r))
        .collect();
    let m = censuses.len();
    let mut tv_exact = vec![vec![BigRational::default(); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let t = tv_distance(&censuses[i], &censuses[j])?;
            tv_exact[j][i] = t.clone();
            tv_exact[i][j] = t;
        }
    }
    let consecutive: Vec<f64> = (1..m).map(|i| big_f64(&tv_exact[i - 1][i])).collect();
    Ok(ConvergenceReport {
        provenance: Provenance::new(None),
        r,
        members: members
            .iter()
            .zip(&censuses)
            .enumerate()
            .map(|(i, ((g, _), c))| CensusSummary {
                member: MemberInfo::new(i, g),
                classes: c.num_classes(),
                top_count: c.classes.values().copied().max().unwrap_or(0),
            })
            .collect(),
        tv: tv_exact
            .iter()
            .map(|row| row.iter().map(crate::fraction::big_string).collect())
            .collect(),
        plateau: consecutive.iter().map(|&t| t < PLATEAU).collect(),
        consecutive,
        censuses,
        tv_exact,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub p: usize,
    #[serde(with = "serde_big")]
    pub global: BigRational,
    #[serde(with = "serde_big")]
    pub local: BigRational,
    pub equal: bool,
    /// `Σ λᵖ / n` from the floating-point spectrum.
    pub spectral: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SFraction {
    pub delta: f64,
    #[serde(with = "serde_fraction")]
    pub s: Fraction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdsMember {
    pub member: MemberInfo,
    pub lambda_min: f64,
    pub lambda_1: Option<f64>,
    pub lambda_max: f64,
    pub clamped_by: f64,
    pub histogram: Histogram,
    pub s: Vec<SFraction>,
    pub moments: Vec<MomentRow>,
    #[serde(skip)]
    pub spectrum: Option<SpectralMeasure>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdsReport {
    pub provenance: Provenance,
    pub bins: usize,
    pub max_p: usize,
    pub deltas: Vec<f64>,
    pub members: Vec<IdsMember>,
    /// Kolmogorov distance between members `i` and `i + 1`.
    pub kolmogorov: Vec<f64>,
    /// Whether every member's local and global moments agree.
    pub moments_agree: bool,
}

pub fn run_ids(spec: &SequenceSpec, bins: usize, max_p: usize, deltas: &[f64]) -> Result<IdsReport> {
    let members = generate_all(spec)?;
    let mut report = ids_of(&members, bins, max_p, deltas)?;
    report.provenance = Provenance::new(Some(spec));
    Ok(report)
}

pub fn ids_of(
    members: &[(Graph, EdgeColoring)],
    bins: usize,
    max_p: usize,
    deltas: &[f64],
) -> Result<IdsReport> {
    if deltas.iter().any(|&x| x.is_nan() || x < 0.0) {
        return Err(Error::BadParams("thresholds must be non-negative".into()));
    }
    let rows: Vec<IdsMember> = members
        .par_iter()
        .enumerate()
        .map(|(i, (g, col))| ids_member(i, g, col, bins, max_p, deltas))
        .collect::<Result<_>>()?;
    let kolmogorov = rows
        .windows(2)
        .map(|w| {
            kolmogorov_distance(
                w[0].spectrum.as_ref().expect("kept"),
                w[1].spectrum.as_ref().expect("kept"),
            )
        })
        .collect::<Result<_>>()?;
    Ok(IdsReport {
        provenance: Provenance::new(None),
        bins,
        max_p,
        deltas: deltas.to_vec(),
        moments_agree: rows.iter().all(|r| r.moments.iter().all(|m| m.equal)),
        members: rows,
        kolmogorov,
    })
}

fn ids_member(
    index: usize,
    g: &Graph,
    col: &EdgeColoring,
    bins: usize,
    max_p: usize,
    deltas: &[f64],
) -> Result<IdsMember> {
    let m = spectrum(g)?;
    let histogram = ids_histogram(&m, bins)?;
    // the radius-max_p census serves every p <= max_p after coarsening
    let top = census_parallel(g, col, max_p);
    let mut moments = Vec::with_capacity(max_p + 1);
    for p in 0..=max_p {
        let c = if p == max_p { top.clone() } else { top.coarsen(p)? };
        let global = moment_global(g, p);
        let local = moment_from_census(&c, p)?;
        moments.push(MomentRow {
            p,
            equal: global == local,
            spectral: m.moment(p as u32),
            global,
            local,
        });
    }
    Ok(IdsMember {
        member: MemberInfo::new(index, g),
        lambda_min: m.eigenvalues.first().copied().unwrap_or(0.0),
        lambda_1: m.first_nonzero(),
        lambda_max: m.eigenvalues.last().copied().unwrap_or(0.0),
        clamped_by: m.clamped_by,
        histogram,
        s: deltas
            .iter()
            .map(|&delta| SFraction {
                delta,
                s: s_fraction(&m, delta),
            })
            .collect(),
        moments,
        spectrum: Some(m),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingRow {
    pub member: MemberInfo,
    #[serde(with = "serde_fraction")]
    pub s: Fraction,
    #[serde(with = "serde_fraction")]
    pub h_cover: Fraction,
    #[serde(with = "serde_fraction")]
    pub m_norm: Fraction,
    pub m_count: usize,
    pub status: Status,
    pub visited: u64,
    /// The greedy disjoint family behind `m_norm`.
    pub family: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PackingSweepReport {
    pub provenance: Provenance,
    pub delta: f64,
    #[serde(with = "serde_fraction")]
    pub eps: Fraction,
    pub k: usize,
    pub budget: u64,
    pub rows: Vec<PackingRow>,
    /// Every member has `s(G, δ) > 0`.
    pub spectral_mass: bool,
    /// Every member has `m_norm > 0`.
    pub packing: bool,
    /// `m_norm` comes from a greedy maximal family and bounds the maximum
    /// from below; a budget-limited row bounds it further from below.
    pub note: String,
}

pub fn run_theorem2(
    spec: &SequenceSpec,
    delta: f64,
    eps: Fraction,
    k: usize,
    budget: u64,
) -> Result<PackingSweepReport> {
    let members = generate_all(spec)?;
    let mut report = packing_sweep_of(&members, delta, eps, k, budget)?;
    report.provenance = Provenance::new(Some(spec));
    Ok(report)
}

pub fn packing_sweep_of(
    members: &[(Graph, EdgeColoring)],
    delta: f64,
    eps: Fraction,
    k: usize,
    budget: u64,
) -> Result<PackingSweepReport> {
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::BadParams("delta must be non-negative".into()));
    }
    let rows: Vec<PackingRow> = members
        .par_iter()
        .enumerate()
        .map(|(i, (g, _))| {
            let s = s_fraction(&spectrum(g)?, delta);
            let e = enumerate_good_sets(g, eps, k, budget)?;
            let h_cover = covered_fraction(g.n(), &e.sets);
            let family = greedy_packing(g.n(), &e.sets);
            Ok(PackingRow {
                member: MemberInfo::new(i, g),
                s,
                h_cover,
                m_norm: Fraction::new(family.len() as u64, g.n().max(1) as u64),
                m_count: family.len(),
                status: e.status,
                visited: e.visited,
                family: family
                    .iter()
                    .map(|s| s.vertices.as_slice().to_vec())
                    .collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(PackingSweepReport {
        provenance: Provenance::new(None),
        delta,
        eps,
        k,
        budget,
        spectral_mass: rows.iter().all(|r| *r.s.numer() > 0),
        packing: rows.iter().all(|r| *r.m_norm.numer() > 0),
        note: "m_norm is from a greedy inclusion-maximal family (a lower bound on the maximum); \
               rows with status budget_exceeded saw a partial enumeration"
            .into(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn sequence_validation() {
        assert!(SequenceSpec::new(Family::Cycle, vec![10, 5], 0).validate().is_err());
        assert!(SequenceSpec::new(Family::Cycle, vec![], 0).validate().is_err());
        assert!(SequenceSpec::new(Family::Torus2d, vec![4], 0).with_d(3).validate().is_err());
        let spec = SequenceSpec::new(Family::Cycle, vec![5, 6], 0).with_d(4);
        let (g, _) = generate(&spec, 1).unwrap();
        assert_eq!((g.n(), g.d()), (6, 4));
        assert!(generate(&spec, 2).is_err());
    }

    #[test]
    fn cycles_converge_immediately() {
        let spec = SequenceSpec::new(Family::Cycle, vec![100, 200, 400], 7);
        let r = run_convergence(&spec, 2).unwrap();
        assert!(r.consecutive.iter().all(|&t| t == 0.0));
        assert!(r.plateau.iter().all(|&p| p));
        assert_eq!(r.tv[0][2], "0");
    }

    #[test]
    fn ids_of_cycles() {
        let spec = SequenceSpec::new(Family::Cycle, vec![32, 64], 0);
        let r = run_ids(&spec, 8, 4, &[0.0, 0.5]).unwrap();
        assert!(r.moments_agree);
        let expected = [1, 2, 6, 20, 70];
        for m in &r.members {
            for row in &m.moments {
                assert_eq!(row.global, BigRational::from_integer(expected[row.p].into()));
            }
        }
        assert_eq!(r.kolmogorov.len(), 1);
    }

    #[test]
    fn packing_sweep_on_a_small_torus() {
        let spec = SequenceSpec::new(Family::Torus2d, vec![6], 0);
        let r = run_theorem2(&spec, 0.5, Ratio::new(4, 5), 9, 100_000).unwrap();
        assert!(r.spectral_mass);
        assert_eq!(r.rows.len(), 1);
    }

    #[test]
    fn reports_are_reproducible() {
        let spec = SequenceSpec::new(Family::RandomRegular, vec![20, 40], 11);
        let a = run_theorem2(&spec, 0.5, Ratio::new(1, 1), 4, 100_000).unwrap();
        let b = run_theorem2(&spec, 0.5, Ratio::new(1, 1), 4, 100_000).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
