//! Limits in quasi-categories: terminal vertices, weighted limits and homotopy categories.

mod ho;
mod lifting;
mod weighted;

pub use ho::{ho_category, is_equivalence, HoCategory};
pub use lifting::{is_quasi_category, is_terminal_vertex, terminal_vertices, Counterexample, LiftStatus, LiftVerdict};
pub use weighted::{conical_reduction_check, fat_neat_check, is_limit_cone, weighted_limit, WeightedLimit};
