//! File formats.
//!
//! * graph: header line `n m d`, then `m` lines `u v`; `#` starts a comment.
//! * edge list: bare `u v` lines with arbitrary integer ids, relabeled to
//!   `0..n` in order of first appearance.
//! * coloring: one `u v c` line per edge.
//! * census: JSON `{r, d, n, classes: [{code, count}]}`, codes carry the
//!   `v1|` version tag and classes are sorted by code.
//! * spectrum: CSV, one eigenvalue per line, ascending, 17 significant digits.
//! * histogram: JSON `{d, bins, edges, counts, masses}`.
//! * good sets: JSON `{eps, k, n, h_cover, m_norm, m_count, family, status}`.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::census::{BallCensus, BallCode};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::fraction::{serde_fraction, Fraction};
use crate::graph::{Graph, Vertex};
use crate::isoperimetry::{GoodSetFamily, Status};
use crate::spectral::{Histogram, SpectralMeasure};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn content_lines(r: impl BufRead) -> impl Iterator<Item = Result<(usize, String)>> {
    r.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e.into())),
        Ok(line) => {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| Ok((i + 1, body.to_string())))
        }
    })
}

fn fields<const N: usize>(line: usize, s: &str) -> Result<[u64; N]> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} integers, found {:?}", s),
        ));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {p:?}")))?;
    }
    Ok(out)
}

/// Reads the `n m d` format. `d` from the header is used unless overridden.
pub fn read_graph(r: impl BufRead, d: Option<usize>) -> Result<Graph> {
    let mut lines = content_lines(r);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m d` header"))??;
    let [n, m, hd] = fields::<3>(hline, &header)?;
    let mut edges = Vec::with_capacity(m as usize);
    for item in lines {
        let (line, s) = item?;
        let [u, v] = fields::<2>(line, &s)?;
        edges.push((u as Vertex, v as Vertex));
    }
    if edges.len() as u64 != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, file has {}", edges.len()),
        ));
    }
    Graph::new(n as usize, &edges, d.unwrap_or(hd as usize))
}

pub fn write_graph(mut w: impl Write, g: &Graph) -> Result<()> {
    writeln!(w, "{} {} {}", g.n(), g.edge_count(), g.d())?;
    for &(u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// Reads bare `u v` lines, relabeling ids by first appearance. Returns the
/// graph and the original id of each vertex.
pub fn read_edge_list(r: impl BufRead, d: usize) -> Result<(Graph, Vec<u64>)> {
    let mut ids: HashMap<u64, Vertex> = HashMap::new();
    let mut original = Vec::new();
    let mut edges = Vec::new();
    for item in content_lines(r) {
        let (line, s) = item?;
        let [a, b] = fields::<2>(line, &s)?;
        let mut label = |x: u64| {
            *ids.entry(x).or_insert_with(|| {
                original.push(x);
                original.len() - 1
            })
        };
        let (u, v) = (label(a), label(b));
        edges.push((u, v));
    }
    Ok((Graph::new(original.len(), &edges, d)?, original))
}

pub fn read_coloring(r: impl BufRead, g: &Graph) -> Result<EdgeColoring> {
    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    for item in content_lines(r) {
        let (line, s) = item?;
        let [u, v, c] = fields::<3>(line, &s)?;
        let (u, v) = (u as Vertex, v as Vertex);
        let e = (u < g.n() && v < g.n())
            .then(|| g.edge_index(u, v))
            .flatten()
            .ok_or_else(|| parse_err(line, format!("{{{u}, {v}}} is not an edge")))?;
        if colors[e].replace(c as Color).is_some() {
            return Err(parse_err(line, format!("edge {{{u}, {v}}} colored twice")));
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or_else(|| {
                let (u, v) = g.edges()[e];
                Error::InvalidColoring(format!("edge {{{u}, {v}}} has no color"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::new(g, colors)
}

pub fn write_coloring(mut w: impl Write, g: &Graph, col: &EdgeColoring) -> Result<()> {
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(w, "{u} {v} {}", col.color_of_edge(e))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CensusFile {
    r: usize,
    d: usize,
    n: usize,
    classes: Vec<CensusClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CensusClass {
    code: String,
    count: u64,
}

pub fn census_to_json(c: &BallCensus) -> Result<String> {
    let file = CensusFile {
        r: c.r,
        d: c.d,
        n: c.n,
        classes: c
            .classes
            .iter()
            .map(|(code, &count)| CensusClass {
                code: code.to_versioned(),
                count,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn census_from_json(s: &str) -> Result<BallCensus> {
    let file: CensusFile = serde_json::from_str(s)?;
    let mut classes = BTreeMap::new();
    for class in file.classes {
        let code = BallCode::from_versioned(&class.code)?;
        if classes.insert(code, class.count).is_some() {
            return Err(Error::BadCode(format!("class {} listed twice", class.code)));
        }
    }
    let total: u64 = classes.values().sum();
    if total != file.n as u64 {
        return Err(Error::BadParams(format!(
            "census counts sum to {total}, expected n = {}",
            file.n
        )));
    }
    Ok(BallCensus {
        r: file.r,
        d: file.d,
        n: file.n,
        classes,
    })
}

pub fn write_spectrum_csv(mut w: impl Write, m: &SpectralMeasure) -> Result<()> {
    for x in &m.eigenvalues {
        writeln!(w, "{x:.16e}")?;
    }
    Ok(())
}

pub fn read_spectrum_csv(r: impl BufRead, d: usize) -> Result<SpectralMeasure> {
    let mut eigenvalues = Vec::new();
    for item in content_lines(r) {
        let (line, s) = item?;
        let x: f64 = s
            .parse()
            .map_err(|_| parse_err(line, format!("not a number: {s:?}")))?;
        eigenvalues.push(x);
    }
    if eigenvalues.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParams("spectrum is not sorted ascending".into()));
    }
    Ok(SpectralMeasure {
        d,
        eigenvalues,
        clamped_by: 0.0,
    })
}

pub fn histogram_to_json(h: &Histogram) -> Result<String> {
    Ok(serde_json::to_string_pretty(h)?)
}

/// Flat good-set report for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSetReport {
    #[serde(with = "serde_fraction")]
    pub eps: Fraction,
    pub k: usize,
    pub n: usize,
    #[serde(with = "serde_fraction")]
    pub h_cover: Fraction,
    #[serde(with = "serde_fraction")]
    pub m_norm: Fraction,
    pub m_count: usize,
    pub family: Vec<Vec<Vertex>>,
    pub status: Status,
}

impl GoodSetReport {
    pub fn new(eps: Fraction, k: usize, n: usize, h_cover: Fraction, f: &GoodSetFamily) -> Self {
        GoodSetReport {
            eps,
            k,
            n,
            h_cover,
            m_norm: f.m_norm,
            m_count: f.m_count,
            family: f.sets.iter().map(|s| s.vertices.as_slice().to_vec()).collect(),
            status: f.status,
        }
    }
}

pub fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_graph_file(path: &Path, d: Option<usize>) -> Result<Graph> {
    read_graph(open(path)?, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::coloring::proper_edge_coloring;
    use crate::spectral::spectrum;

    const C5: &str = "# five-cycle\n5 5 2\n0 1\n1 2\n2 3 # chord-free\n3 4\n\n4 0\n";

    #[test]
    fn graph_round_trip() {
        let g = read_graph(C5.as_bytes(), None).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.d()), (5, 5, 2));
        let mut out = Vec::new();
        write_graph(&mut out, &g).unwrap();
        assert_eq!(read_graph(out.as_slice(), None).unwrap(), g);
        assert_eq!(read_graph(C5.as_bytes(), Some(4)).unwrap().d(), 4);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let bad = "3 2 2\n0 1\n1 x\n";
        assert!(matches!(read_graph(bad.as_bytes(), None), Err(Error::Parse { line: 3, .. })));
        let short = "3 3 2\n0 1\n1 2\n";
        assert!(matches!(read_graph(short.as_bytes(), None), Err(Error::Parse { line: 1, .. })));
        let looped = "2 1 2\n1 1\n";
        assert_eq!(read_graph(looped.as_bytes(), None), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn edge_list_relabels() {
        let (g, ids) = read_edge_list("10 20\n20 30\n30 10\n".as_bytes(), 2).unwrap();
        assert_eq!(ids, vec![10, 20, 30]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn coloring_round_trip() {
        let g = read_graph(C5.as_bytes(), None).unwrap();
        let col = proper_edge_coloring(&g);
        let mut out = Vec::new();
        write_coloring(&mut out, &g, &col).unwrap();
        assert_eq!(read_coloring(out.as_slice(), &g).unwrap(), col);
        assert!(read_coloring("0 1 1\n".as_bytes(), &g).is_err());
        assert!(read_coloring("0 2 1\n".as_bytes(), &g).is_err());
    }

    #[test]
    fn census_round_trip() {
        let g = read_graph(C5.as_bytes(), None).unwrap();
        let c = census(&g, &proper_edge_coloring(&g), 2);
        let json = census_to_json(&c).unwrap();
        assert!(json.contains("\"v1|"));
        assert_eq!(census_from_json(&json).unwrap(), c);
    }

    #[test]
    fn spectrum_round_trip() {
        let g = read_graph(C5.as_bytes(), None).unwrap();
        let m = spectrum(&g).unwrap();
        let mut out = Vec::new();
        write_spectrum_csv(&mut out, &m).unwrap();
        let back = read_spectrum_csv(out.as_slice(), 2).unwrap();
        assert_eq!(back.eigenvalues, m.eigenvalues);
    }
}
