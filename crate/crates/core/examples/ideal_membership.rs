//! Degree-bounded membership in the two-sided ideal generated by relations.

use std::error::Error;

use cqg_kac::algebra::{AlgElement, GeneratorId, ScalarMatrix};
use cqg_kac::presentation::build_universal_unitary;
use cqg_kac::quotient::IdealLadder;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = build_universal_unitary(&ScalarMatrix::identity(1))?;
    let relations: Vec<AlgElement> = p.relation_elements().cloned().collect();
    let u = AlgElement::gen(GeneratorId::u(1, 1));
    let us = u.adjoint();
    let mut ladder = IdealLadder::new(&relations, p.letters(), 4);

    // u* u u* u - 1 = (u* u - 1) u* u + (u* u - 1)
    let x = &(&(&us * &u) * &(&us * &u)) - &AlgElement::one();
    println!("u*uu*u - 1 first lies in I_{:?}", ladder.membership_degree(&x)?);
    println!("u - 1 in I_4: {:?}", ladder.membership_degree(&(&u - &AlgElement::one()))?);
    if let Some(i2) = ladder.level(2) {
        println!("I_2 has dimension {}; NF(u u*) = {}", i2.dimension(), i2.normal_form(&(&u * &us)));
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
