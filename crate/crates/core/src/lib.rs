//! Knot-theoretic ternary groups and region colorings of flat virtual link
//! diagrams.

pub mod abelian;
pub mod classify;
pub mod coloring;
pub mod diagram;
pub mod ternary;

mod error;

pub use error::{Error, Result};
