//! Tori keep a positive fraction of small Laplacian eigenvalues and of
//! disjoint small sets with small boundary; random regular expanders have
//! neither. Prints the sweep as a table, then the torus report as JSON.

use graph_limits::fraction::fraction_f64;
use graph_limits::harness::{run_theorem2, Family, SequenceSpec, PackingSweepReport};
use graph_limits::isoperimetry::DEFAULT_BUDGET;
use num_rational::Ratio;

fn table(name: &str, r: &PackingSweepReport) {
    println!("{name}: delta {} eps {} k {}", r.delta, r.eps, r.k);
    for row in &r.rows {
        println!(
            "  n={:<6} s={:<8.4} h_cover={:<8.4} m_norm={:<8.4} ({} sets, {:?})",
            row.member.n,
            fraction_f64(&row.s),
            fraction_f64(&row.h_cover),
            fraction_f64(&row.m_norm),
            row.m_count,
            row.status
        );
    }
}

fn main() -> graph_limits::Result<()> {
    let tori = SequenceSpec::new(Family::Torus2d, vec![8, 16, 24], 0);
    let torus = run_theorem2(&tori, 0.5, Ratio::new(4, 5), 25, DEFAULT_BUDGET)?;
    table("tori", &torus);

    let expanders = SequenceSpec::new(Family::RandomRegular, vec![100, 250, 500], 9);
    let random = run_theorem2(&expanders, 0.5, Ratio::new(3, 10), 5, DEFAULT_BUDGET)?;
    table("random 3-regular", &random);

    let mut json = serde_json::to_value(&torus)?;
    for row in json["rows"].as_array_mut().unwrap() {
        row["family"] = serde_json::json!("...");
    }
    println!("{}", serde_json::to_string_pretty(&json)?);
    Ok(())
}
