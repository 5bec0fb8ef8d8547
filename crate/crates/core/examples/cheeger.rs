//! Exact Cheeger constants on small graphs and Fiedler-sweep upper bounds
//! on larger ones.

use graph_limits::generators::{binary_tree, cycle, random_regular, torus2d};
use graph_limits::isoperimetry::{cheeger_exact, cheeger_sweep};
use graph_limits::spectral::spectrum;
use graph_limits::Graph;

fn main() -> graph_limits::Result<()> {
    let small: Vec<(&str, Graph)> = vec![
        ("C6", cycle(6)?),
        ("C16", cycle(16)?),
        ("torus 4x4", torus2d(4)?),
        ("tree depth 3", binary_tree(3)?),
    ];
    for (name, g) in &small {
        let exact = cheeger_exact(g)?;
        let sweep = cheeger_sweep(g)?;
        println!(
            "{name:<14} exact {} via {:?}   sweep {}",
            exact.ratio,
            exact.witness.as_slice(),
            sweep.ratio
        );
    }
    for (name, g) in [
        ("C500", cycle(500)?),
        ("torus 20x20", torus2d(20)?),
        ("random 3-reg 400", random_regular(3, 400, 3)?),
        ("tree depth 8", binary_tree(8)?),
    ] {
        let sweep = cheeger_sweep(&g)?;
        let lambda1 = spectrum(&g)?.first_nonzero().unwrap_or(0.0);
        println!(
            "{name:<17} sweep bound {:<8} (|A| = {:>3})  λ₁ = {lambda1:.4}",
            sweep.ratio.to_string(),
            sweep.witness.len()
        );
    }
    Ok(())
}
