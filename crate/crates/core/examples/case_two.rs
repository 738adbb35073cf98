//! Case II: paired blocks with sign -1. With a `q = 1` block the quotient
//! keeps an `O_{J_M}^+` factor; without one it is a free product of unitary groups.

use std::error::Error;

use cqg_kac::algebra::rat;
use cqg_kac::presentation::{presentation_for, Block, BlockSpec};
use cqg_kac::quotient::{expected_kac_target, match_presentations};
use cqg_kac::trace::{kac_fixpoint, KacOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for blocks in [
        vec![Block::new(rat(1, 2), 1), Block::new(rat(1, 1), 1)],
        vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 1)],
    ] {
        let spec = BlockSpec::case_two(blocks);
        let p = presentation_for(&spec)?;
        let kac = kac_fixpoint(&p, &KacOptions::default())?;
        let target = expected_kac_target(&spec)?;
        let m = match_presentations(&kac.quotient, &target.presentation, &target.renaming, 4)?;
        let forced: Vec<String> = kac.forced_generators().iter().map(|g| g.to_string()).collect();
        println!("forced {}; matches {}: {}", forced.join(" "), target.label, m.matched);
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
