//! Tableau combinatorics, section-ring bases and toric degenerations of
//! Bott-Samelson varieties for `GL_n`, computed in exact arithmetic.

pub mod cli;
pub mod degeneration;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod plucker;
pub mod poly;
pub mod section;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
