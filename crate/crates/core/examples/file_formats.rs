//! Writes a random regular graph, its coloring, its census and its spectrum
//! to a temporary directory and reads them back.

use graph_limits::census::census;
use graph_limits::coloring::proper_edge_coloring;
use graph_limits::generators::random_regular;
use graph_limits::io;
use graph_limits::spectral::{ids_histogram, spectrum};

fn main() -> graph_limits::Result<()> {
    let dir = std::env::temp_dir().join("graph-limits-example");
    std::fs::create_dir_all(&dir)?;

    let g = random_regular(4, 64, 11)?;
    let col = proper_edge_coloring(&g);
    io::write_graph(io::create(&dir.join("g.txt"))?, &g)?;
    io::write_coloring(io::create(&dir.join("g.col"))?, &g, &col)?;

    let g2 = io::read_graph_file(&dir.join("g.txt"), None)?;
    let col2 = io::read_coloring(io::open(&dir.join("g.col"))?, &g2)?;
    assert_eq!((&g, &col), (&g2, &col2));

    let c = census(&g2, &col2, 1);
    let json = io::census_to_json(&c)?;
    std::fs::write(dir.join("census.json"), &json)?;
    assert_eq!(io::census_from_json(&json)?, c);
    println!("radius-1 census: {} classes", c.num_classes());
    println!("{}", json.lines().take(8).collect::<Vec<_>>().join("\n"));

    let m = spectrum(&g2)?;
    io::write_spectrum_csv(io::create(&dir.join("spectrum.csv"))?, &m)?;
    println!("{}", io::histogram_to_json(&ids_histogram(&m, 4)?)?);
    println!("files in {}", dir.display());
    Ok(())
}
