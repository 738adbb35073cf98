//! Coproduct, counit and antipode, the axiom checks, and the central
//! morphism `O_{J_1}^+ -> C[Z_2]`.

use std::error::Error;

use cqg_kac::algebra::{rat, AlgElement, GeneratorId, ScalarMatrix};
use cqg_kac::hopf::{central_morphism_check, hopf_axiom_check, hopf_kernel_membership, HopfStructure};
use cqg_kac::presentation::{build_universal_orthogonal, build_universal_unitary, symplectic};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = build_universal_unitary(&ScalarMatrix::diagonal(&[rat(1, 2), rat(3, 1)]))?;
    let h = HopfStructure::new(&p)?;
    let u12 = AlgElement::gen(GeneratorId::u(1, 2));
    println!("Delta(u12) = {}", h.coproduct(&u12)?);
    println!(
        "eps(u12) = {}, S(u12) = {}, S(u12*) = {}",
        h.counit(&u12)?,
        h.antipode(&u12)?,
        h.antipode(&u12.adjoint())?
    );

    let report = hopf_axiom_check(&p, 2)?;
    for (axiom, (pass, fail, open)) in report.summary() {
        println!("  {axiom}: {pass} pass, {fail} fail, {open} inconclusive");
    }

    let o = build_universal_orthogonal(&symplectic(1))?;
    println!("gamma central on O_J1: {}", central_morphism_check(&o)?);
    let u11 = AlgElement::gen(GeneratorId::u(1, 1));
    let b = &u11.adjoint() * &AlgElement::gen(GeneratorId::u(1, 2));
    println!("u11* u12 in the Hopf kernel: {}", hopf_kernel_membership(&o, &b)?);
    println!("u11 in the Hopf kernel: {}", hopf_kernel_membership(&o, &u11)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
