//! Misra–Gries edge coloring: at most Δ + 1 colors on any simple graph.

use graph_limits::coloring::proper_edge_coloring;
use graph_limits::generators::{cycle, random_regular, torus2d};
use graph_limits::Graph;

fn report(name: &str, g: &Graph) {
    let col = proper_edge_coloring(g);
    col.validate(g).expect("proper");
    println!(
        "{name:<22} n={:<5} max degree {}  colors used {}",
        g.n(),
        g.max_degree(),
        col.num_colors()
    );
}

fn main() {
    report("C5 (odd cycle)", &cycle(5).unwrap());
    report("C6", &cycle(6).unwrap());
    report("torus 7x7", &torus2d(7).unwrap());
    report("random 3-regular", &random_regular(3, 500, 42).unwrap());
    report("random 5-regular", &random_regular(5, 60, 7).unwrap());

    let petersen = Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
        3,
    )
    .unwrap();
    // class 2: needs all four colors
    report("Petersen", &petersen);
}
