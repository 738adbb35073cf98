//! `F = diag(F_1, F_2) (+) I_1` with `q = 1/3, 1/2`: the Kac quotient is
//! `U_1^+ * U_2^+ * O_1^+`.

use std::error::Error;

use cqg_kac::algebra::rat;
use cqg_kac::presentation::{block_decompose, presentation_for, Block, BlockSpec};
use cqg_kac::quotient::{expected_kac_target, match_presentations};
use cqg_kac::trace::{kac_fixpoint, KacOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = BlockSpec::case_one(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 2)], 1);
    let p = presentation_for(&spec)?;
    let blocks = block_decompose(&p, &spec)?;
    let kac = kac_fixpoint(&p, &KacOptions::default())?;
    println!("{} rounds, {} generators forced to zero", kac.iterations, kac.forced.len());
    for f in &kac.forced {
        println!(
            "  {} in block {} (round {})",
            f.generator,
            blocks.block_of(&f.generator).unwrap_or("?"),
            f.round
        );
    }
    let remaining: Vec<String> = kac.quotient.generators().iter().map(|g| g.to_string()).collect();
    println!("surviving generators: {}", remaining.join(" "));

    let target = expected_kac_target(&spec)?;
    let m = match_presentations(&kac.quotient, &target.presentation, &target.renaming, 4)?;
    println!("matches {}: {} ({})", target.label, m.matched, m.mode);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
