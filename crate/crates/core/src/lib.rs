//! Exact computations in the Gauss–Picard modular group `U(3,1; Z[i])`.
//!
//! The crate checks, with rational arithmetic only, that the five matrices
//! `T1, T2, M1, M2, R` generate the group: every element of the stabilizer
//! of infinity is written as a word in `T1, T2, M1, M2`, and a finite list
//! of isometric spheres is certified to cover the region that the cone
//! argument needs.

pub mod arith;
pub mod cli;
pub mod cover;
pub mod error;
pub mod form;
pub mod generators;
pub mod heisenberg;
pub mod json;
pub mod langlands;
pub mod stab_words;
pub mod u2_words;
pub mod word;

pub use error::{Error, Result};
