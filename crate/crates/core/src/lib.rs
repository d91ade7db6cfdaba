//! Exact computation of polynomial splitting measures over finite fields,
//! the characters of the pure braid group cohomology they encode, and the
//! irreducible decompositions of those characters.
//!
//! Everything is exact: big integers and rationals throughout, no floating
//! point. The [`ffield`] module provides a brute-force census over prime
//! fields that serves as independent ground truth for the cycle polynomials.

pub mod characters;
pub mod class_function;
pub mod error;
pub mod ffield;
pub mod irreps;
pub mod measure;
pub mod partition;
pub mod poly;
pub mod tables;
pub mod verify;

pub use characters::{
    a_character, b_character, b_character_signed, braid_character, closed_form_check,
    sign_twisted_sum, total_cohomology_character, BraidCharacters, ClosedForm,
};
pub use class_function::{inner_product, ClassFunction};
pub use error::{Error, Result};
pub use irreps::{
    decompose, irreducible_character_value, irrep_dimension, CharacterKind, IrrepDecomposition,
};
pub use measure::{measure_value, splitting_coefficients, SplittingMeasure};
pub use partition::{
    class_data, enumerate_partitions, moebius, sign_character, ClassData, Partition,
};
pub use poly::{cycle_polynomial, evaluate, necklace_polynomial, poly_binomial, RatPoly};
