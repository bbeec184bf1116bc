//! Exact verification of braided skew monoidal structures built from
//! finite-dimensional bialgebras and from braid-group actions on skew
//! multicategories.

pub mod error;
pub mod exactla;

pub use error::{Error, Result};
pub mod bialg;
pub mod braidop;
pub mod comod;
pub mod probes;
pub mod report;
pub mod skewcheck;
pub mod skewclosed;
pub mod skewmulti;
pub mod warpcomonad;
