//! Exact scalars, labelled spaces and sparse exact matrices.

pub mod linmap;
pub mod scalar;
pub mod space;

pub use linmap::{digits, undigits, Difference, LinMap};
pub use scalar::{Field, Scalar};
pub use space::Space;
