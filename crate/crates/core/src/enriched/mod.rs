//! Strict simplicially enriched weighted limits over finite ordinary shapes.

mod end;
mod functor;
mod pullback;

pub use end::{weighted_cone_count, weighted_end, WeightedEnd};
pub use functor::{SSetDiagram, SSetFunctor, SSetWeight};
pub use pullback::{comma_weight, cospan_cofibrant_weight, homotopy_pullback, HomotopyPullback, WeightChoice};
