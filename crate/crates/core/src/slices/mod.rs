//! Weighted slices, neat and fat, and comma objects.

mod comma;
mod nerves;
mod slice;

pub use comma::{comma, fat_slice_as_comma, Comma, CommaCheck};
pub use nerves::{nerve_diagram, nerve_specialization_check, nerve_weight, NerveWeight};
pub use slice::{
    conical_reduction_map, fat_to_neat_slice_map, fat_weighted_slice, weighted_slice, ConeShapes,
    Slice, SliceKind,
};
