//! Exact scalars, words and elements of the free *-algebra, and matrices over it.

mod element;
mod matrix;
pub mod rational;
mod word;

pub use element::AlgElement;
pub use matrix::{AlgMatrix, ScalarMatrix};
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use word::{words_of_length, GeneratorId, Letter, Word};
