//! Exact symbolic engine for the Hopf *-algebras of universal unitary and
//! orthogonal compact quantum groups.
//!
//! The crate builds generator/relation presentations of `Pol(U_Q^+)` and
//! `Pol(O_F^+)`, derives their Kac quotients by searching for exact
//! trace-positivity certificates, compares the result against free-product
//! targets, checks the Hopf structure at bounded degree, and certifies
//! finite-dimensional representations numerically.
//!
//! Modules, bottom-up:
//! - [`algebra`]: rationals, words, elements, matrices over the free *-algebra
//! - [`presentation`]: block specifications, standard forms, builders, reality elimination
//! - [`trace`]: formal tracial calculus, exact LP, certificates, Kac fixpoint
//! - [`quotient`]: quotients, canonical forms, targets, matching, bounded ideal membership
//! - [`hopf`]: coproduct, counit, antipode, axiom checks, central morphism
//! - [`numeric`]: residual evaluation, classical points, representation search
//! - [`cli`]: config/report formats and the end-to-end pipeline

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hopf;
pub mod numeric;
pub mod presentation;
pub mod quotient;
pub mod trace;

pub use error::{Error, Result};
