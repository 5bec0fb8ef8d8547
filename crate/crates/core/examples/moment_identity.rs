//! The trace moments Tr(Δᵖ)/n computed from the whole graph agree exactly
//! with the census-weighted average of root moments of radius-p balls.

use graph_limits::census::census;
use graph_limits::coloring::proper_edge_coloring;
use graph_limits::generators::random_regular;
use graph_limits::spectral::{moment_from_census, moment_global, spectrum};

fn main() -> graph_limits::Result<()> {
    let g = random_regular(3, 200, 2024)?;
    let col = proper_edge_coloring(&g);
    let m = spectrum(&g)?;
    println!("{:>2} {:>8} {:>24} {:>24} {:>14}", "p", "classes", "global", "local", "Σλᵖ/n");
    for p in 0..=6 {
        let c = census(&g, &col, p);
        let local = moment_from_census(&c, p)?;
        let global = moment_global(&g, p);
        assert_eq!(local, global);
        println!(
            "{p:>2} {:>8} {:>24} {:>24} {:>14.6}",
            c.num_classes(),
            global.to_string(),
            local.to_string(),
            m.moment(p as u32)
        );
    }
    Ok(())
}
