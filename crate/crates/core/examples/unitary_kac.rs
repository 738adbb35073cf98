//! Universal unitary `U_Q^+`: the Kac quotient splits along the eigenspaces
//! of `Q`, and `Q = I` forces nothing.

use std::error::Error;

use cqg_kac::algebra::rat;
use cqg_kac::presentation::{presentation_for, Block, BlockSpec};
use cqg_kac::quotient::{expected_kac_target, match_presentations};
use cqg_kac::trace::{kac_fixpoint, KacOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for blocks in [
        vec![Block::new(rat(1, 4), 1), Block::new(rat(1, 1), 2)],
        vec![Block::new(rat(1, 1), 3)],
    ] {
        let spec = BlockSpec::unitary(blocks);
        let p = presentation_for(&spec)?;
        let kac = kac_fixpoint(&p, &KacOptions::default())?;
        let target = expected_kac_target(&spec)?;
        let m = match_presentations(&kac.quotient, &target.presentation, &target.renaming, 4)?;
        let forced: Vec<String> = kac.forced_generators().iter().map(|g| g.to_string()).collect();
        println!(
            "{}: forced [{}], matches {}: {}",
            p.label,
            forced.join(" "),
            target.label,
            m.matched
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
