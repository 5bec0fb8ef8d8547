//! Small connected sets with small boundary, the fraction of vertices they
//! cover, and disjoint packings of them.

use graph_limits::fraction::{big_f64, fraction_f64, to_big};
use graph_limits::generators::{cycle, random_regular, torus2d};
use graph_limits::isoperimetry::{
    coverable_fraction, enumerate_good_sets, pack_exact, pack_greedy, packing_constant,
    DEFAULT_BUDGET,
};
use num_rational::Ratio;

fn main() -> graph_limits::Result<()> {
    let c12 = cycle(12)?;
    let eps = Ratio::new(7, 10);
    let sets = enumerate_good_sets(&c12, eps, 3, DEFAULT_BUDGET)?.sets;
    println!("C12, eps 0.7, k 3: {} good sets, e.g. {:?}", sets.len(), sets[0].vertices.as_slice());
    println!(
        "  greedy m = {}, exact m = {}",
        pack_greedy(&c12, eps, 3, DEFAULT_BUDGET)?.m_norm,
        pack_exact(&c12, eps, 3, DEFAULT_BUDGET)?.m_norm
    );

    println!("{:<18} {:>4} {:>3} {:>9} {:>9} {:>11} status", "graph", "eps", "k", "h_cover", "m_norm", "c*h_cover");
    for (name, g) in [
        ("torus 12x12", torus2d(12)?),
        ("C200", cycle(200)?),
        ("random 3-reg 200", random_regular(3, 200, 5)?),
    ] {
        for eps in [Ratio::new(1, 2), Ratio::new(4, 5)] {
            for k in [4, 9, 16] {
                let (h, status) = coverable_fraction(&g, eps, k, DEFAULT_BUDGET)?;
                let family = pack_greedy(&g, eps, k, DEFAULT_BUDGET)?;
                let bound = packing_constant(g.d(), k) * to_big(&h);
                println!(
                    "{name:<18} {:>4} {k:>3} {:>9.4} {:>9.4} {:>11.2e} {status:?}",
                    fraction_f64(&eps),
                    fraction_f64(&h),
                    fraction_f64(&family.m_norm),
                    big_f64(&bound),
                );
            }
        }
    }
    Ok(())
}
