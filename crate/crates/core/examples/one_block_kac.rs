//! One block `F = [[0, q I], [eps/q I, 0]]`: the C block is forced to zero and
//! the Kac quotient is `Pol(U_M^+)`. Prints one certificate in full.

use std::error::Error;

use cqg_kac::algebra::rat;
use cqg_kac::presentation::{presentation_for, BlockSpec};
use cqg_kac::quotient::{expected_kac_target, match_presentations};
use cqg_kac::trace::{kac_fixpoint, KacOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = BlockSpec::one_block(rat(1, 2), 2, 1);
    let p = presentation_for(&spec)?;
    let kac = kac_fixpoint(&p, &KacOptions::default())?;
    let forced: Vec<String> = kac.forced_generators().iter().map(|g| g.to_string()).collect();
    println!("forced to zero: {}", forced.join(" "));
    println!("all certificates re-verify: {}", kac.verify_all());

    let f = &kac.forced[0];
    let eqs = &kac.equation_sets[f.round];
    println!("certificate for {}:", f.generator);
    for (i, lambda) in &f.certificate.multipliers {
        println!("  {lambda} * [{} = 0]", eqs[*i].expr);
    }
    println!("  sum = {}", f.certificate.combination);

    let target = expected_kac_target(&spec)?;
    let m = match_presentations(&kac.quotient, &target.presentation, &target.renaming, 4)?;
    println!("quotient matches {}: {} ({})", target.label, m.matched, m.mode);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
