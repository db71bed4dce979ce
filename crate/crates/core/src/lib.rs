//! Weighted joins, slices and limits for finite simplicial sets and finite categories.

pub mod enriched;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod joins;
pub mod limits;
pub mod necklaces;
pub mod slices;
pub mod sset;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;
