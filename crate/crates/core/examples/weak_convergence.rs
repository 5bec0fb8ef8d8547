//! Ball censuses along graph sequences and the total variation distance
//! between consecutive members.

use graph_limits::census::canonical_code_uncolored;
use graph_limits::generators::cycle;
use graph_limits::harness::{convergence_of, generate, run_convergence, Family, SequenceSpec};

fn main() -> graph_limits::Result<()> {
    for (family, sizes, r) in [
        (Family::Cycle, vec![100, 200, 400], 2),
        (Family::Torus2d, vec![8, 16, 32], 1),
        (Family::RandomRegular, vec![100, 400, 1600], 2),
        (Family::BinaryTree, vec![4, 6, 8], 2),
    ] {
        let report = run_convergence(&SequenceSpec::new(family.clone(), sizes, 1), r)?;
        let classes: Vec<usize> = report.members.iter().map(|m| m.classes).collect();
        println!(
            "{family:?} r={r}: classes {classes:?}  consecutive TV {:?}  plateau {:?}",
            report.consecutive, report.plateau
        );
    }

    // different local structure: degree-2 balls never match degree-4 balls
    let c = generate(&SequenceSpec::new(Family::Cycle, vec![64], 0).with_d(4), 0)?;
    let t = generate(&SequenceSpec::new(Family::Torus2d, vec![8], 0), 0)?;
    let mixed = convergence_of(&[c, t], 1)?;
    println!("cycle vs torus r=1: TV {}", mixed.tv[0][1]);

    let a = canonical_code_uncolored(&cycle(6)?, 0, 1)?;
    let b = canonical_code_uncolored(&cycle(9)?, 4, 1)?;
    println!("uncolored 1-balls of C6 and C9: {a} / {b}");
    Ok(())
}
