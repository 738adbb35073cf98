//! Cyclic trace symbols and the linear equations a tracial state must satisfy.

use std::error::Error;

use cqg_kac::algebra::{rat, AlgElement, GeneratorId, Word};
use cqg_kac::presentation::{presentation_for, reduce_orthogonal, BlockSpec};
use cqg_kac::trace::{cyclic_canonical, derive_equations, square_symbols, trace_of};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = GeneratorId::u(1, 2);
    let b = GeneratorId::u(2, 1);
    let w = Word::from_letters(vec![a.star(), b.plain(), a.plain()]);
    let c = cyclic_canonical(&w);
    println!("tau({w}) is the class of {} with sign {}", c.class, c.sign);

    let x = &AlgElement::gen_star(a) * &AlgElement::gen(b);
    let (re, im) = trace_of(&(&x - &x.adjoint()));
    println!("tau(x - x*) = {re} + i({im})");

    let spec = BlockSpec::one_block(rat(1, 2), 1, 1);
    let p = reduce_orthogonal(&presentation_for(&spec)?)?;
    let eqs = derive_equations(&p, 0);
    println!("{} equations from {} relations; first few:", eqs.len(), p.relations().len());
    for e in eqs.iter().take(5) {
        println!("  {} = 0   ({})", e.expr, e.origin);
    }
    println!(
        "nonnegative unknowns: {:?}",
        square_symbols(&p).values().map(|s| s.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
