//! Group, matrix and tolerance primitives.

mod group;
mod matrix;
mod tolerance;

pub use group::{group_mul, standard_bicharacter, AbelianGroup, GroupElement, SignTable};
pub use matrix::CMatrix;
pub use tolerance::Tolerance;
