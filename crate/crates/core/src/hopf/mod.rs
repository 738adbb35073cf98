//! Hopf *-algebra structure of presented compact quantum group algebras.
//!
//! The coproduct, counit and antipode are read off the fundamental layouts;
//! axiom checks are exact where the free algebra suffices and bounded
//! modulo relations otherwise.

mod axioms;
mod central;
mod structure;
mod tensor;

pub use axioms::{hopf_axiom_check, hopf_axiom_check_with, Axiom, AxiomCheck, CheckStatus, HopfOptions, HopfReport};
pub use central::{central_morphism_check, cz2, gamma, hopf_kernel_membership, is_central, reduce_cz2, MorphismSpec, T};
pub use structure::{antipode, coproduct, counit, HopfStructure};
pub use tensor::TensorElement;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ScalarMatrix};
    use crate::presentation::{build_universal_orthogonal, build_universal_unitary, presentation_for, symplectic, BlockSpec};

    #[test]
    fn u1_all_axioms_at_degree_two() {
        let p = build_universal_unitary(&ScalarMatrix::identity(1)).unwrap();
        let r = hopf_axiom_check(&p, 2).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
    }

    #[test]
    fn u2_coassociativity_exact() {
        let p = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
        let r = hopf_axiom_check(&p, 2).unwrap();
        assert!(r
            .checks
            .iter()
            .filter(|c| c.axiom == Axiom::Coassociativity)
            .all(|c| c.detail == "exact"));
        assert!(
            r.all_pass(),
            "{:?}",
            r.checks.iter().filter(|c| c.status != CheckStatus::Pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn twisted_and_symplectic() {
        for p in [
            build_universal_orthogonal(&symplectic(1)).unwrap(),
            presentation_for(&BlockSpec::one_block(rat(1, 2), 1, 1)).unwrap(),
            build_universal_unitary(&ScalarMatrix::diagonal(&[rat(1, 4), rat(1, 1)])).unwrap(),
        ] {
            let r = hopf_axiom_check(&p, 4).unwrap();
            assert!(
                r.all_pass(),
                "{}: {:?}",
                p.label,
                r.checks.iter().filter(|c| c.status != CheckStatus::Pass).collect::<Vec<_>>()
            );
        }
    }
}
