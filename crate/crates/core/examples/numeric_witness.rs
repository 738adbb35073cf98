//! Classical points and a least-squares search for small representations.

use std::error::Error;

use cqg_kac::algebra::ScalarMatrix;
use cqg_kac::numeric::{classical_point, eval_residual, rep_search_restarts, CMatrix};
use cqg_kac::presentation::{build_universal_orthogonal, symplectic};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let o = build_universal_orthogonal(&symplectic(1))?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let v = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(-1.0), c(0.0)]);
    let pi = classical_point(&o, &v)?;
    println!("SU(2) point of O_J1: max residual {:e}", eval_residual(&o, &pi)?.max);

    let bad = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
    if let Err(e) = classical_point(&o, &bad) {
        println!("rejected: {e}");
    }

    for p in [build_universal_orthogonal(&ScalarMatrix::identity(1))?, o] {
        match rep_search_restarts(&p, 1, 0, 50) {
            Some((seed, pi)) => println!("{}: found at seed {seed}, residual {:e}", p.label, eval_residual(&p, &pi)?.max),
            None => println!("{}: nothing found", p.label),
        }
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
