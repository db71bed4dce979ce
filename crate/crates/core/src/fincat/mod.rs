//! Finite categories, Set-valued weights, nerves and 1-categorical weighted limits.

mod category;
mod cones;
mod join;
mod nerve;
mod weight;

pub use category::{CatFunctor, FinCategory, Mor, Morphism, Obj};
pub use cones::{
    rectify, weighted_cone_category, weighted_limit, weighted_limit_in_finset,
    weighted_limit_via_elements, Cone, ConeCategory,
};
pub use join::cat_weighted_join;
pub use nerve::{nerve, nerve_map, nerve_truncated, Nerve};
pub use weight::{category_of_elements, fibers, SetWeight};
