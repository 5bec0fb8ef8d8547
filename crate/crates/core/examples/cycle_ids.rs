//! Spectral measures of growing cycles approach the arcsine law
//! F(x) = arccos(1 − x/2) / π on [0, 4].

use graph_limits::harness::{run_ids, Family, SequenceSpec};

fn main() -> graph_limits::Result<()> {
    let spec = SequenceSpec::new(Family::Cycle, vec![125, 250, 500, 1000], 0);
    let report = run_ids(&spec, 8, 6, &[0.1, 0.5, 1.0])?;
    for m in &report.members {
        let eig = &m.spectrum.as_ref().expect("kept in memory").eigenvalues;
        let mut gap: f64 = 0.0;
        for (i, &x) in eig.iter().enumerate() {
            let limit = (1.0 - x / 2.0).clamp(-1.0, 1.0).acos() / std::f64::consts::PI;
            let below = i as f64 / eig.len() as f64;
            let upto = (i + 1) as f64 / eig.len() as f64;
            gap = gap.max((limit - below).abs()).max((limit - upto).abs());
        }
        let masses: Vec<String> = m.histogram.masses.iter().map(|x| format!("{x:.3}")).collect();
        let s: Vec<String> = m.s.iter().map(|s| format!("s({})={}", s.delta, s.s)).collect();
        println!("n={:<5} sup|F − F∞| = {gap:.4}  {}  bins [{}]", m.member.n, s.join(" "), masses.join(" "));
    }
    println!("Kolmogorov distances between consecutive members: {:?}", report.kolmogorov);
    println!("local and global moments agree for p <= 6: {}", report.moments_agree);
    Ok(())
}
