//! Builds the universal presentations and shows the reality reduction and
//! block decomposition of a standard-form `F`.

use std::error::Error;

use cqg_kac::algebra::{rat, ScalarMatrix};
use cqg_kac::presentation::{
    block_decompose, build_universal_orthogonal, build_universal_unitary, free_product, presentation_for, reduce_orthogonal,
    standard_form_matrix, Block, BlockSpec,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let u = build_universal_unitary(&ScalarMatrix::diagonal(&[rat(1, 4), rat(1, 1)]))?;
    println!(
        "{}: {} generators, {} relations",
        u.label,
        u.generators().len(),
        u.relations().len()
    );

    let spec = BlockSpec::one_block(rat(1, 2), 1, -1);
    let f = standard_form_matrix(&spec)?;
    println!("F =\n{f}");
    let o = build_universal_orthogonal(&f)?;
    println!(
        "{}: {} generators, {} relations",
        o.label,
        o.generators().len(),
        o.relations().len()
    );
    let reduced = reduce_orthogonal(&o)?;
    println!("after the reality substitution: {} generators", reduced.generators().len());
    for r in reduced.relations().iter().take(4) {
        println!("  [{}] {} = 0", r.origin, r.element);
    }

    let spec = BlockSpec::case_one(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 2)], 1);
    let p = presentation_for(&spec)?;
    let blocks = block_decompose(&p, &spec)?;
    println!("case I, N = {}: blocks {:?}", spec.dimension(), blocks.names());

    let both = free_product(&[u, reduced]);
    println!("{}: {} generators", both.label, both.generators().len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
