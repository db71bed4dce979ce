//! Finite simplicial sets in normal form and the constructions built on them.

mod colimit;
mod enumerate;
mod hom;
mod iso;
mod levels;
mod map;
mod product;
mod set;
mod simplex;
mod standard;

pub use colimit::{coproduct, pushout, Pushout, Side};
pub use enumerate::{
    count_maps, enumerate_maps, enumerate_maps_under, enumeration_cap, find_map_under,
    search_maps, DEFAULT_CAP,
};
pub use hom::{exponential, hom_levels, serialize_map, Cosimplicial, Exponential, HomLevels, Under};
pub use iso::is_isomorphic;
pub use levels::{from_levels, Levels};
pub use map::{vertex_map, SimplicialMap};
pub use product::{equalizer, product, product_map, pullback, Product, Pullback};
pub use set::{subset_name, Builder, FaceIndex, SimplicialSet, MAX_DIM};
pub use simplex::{
    binomial, codegeneracy, coface, compose, corestrict, identity, image_mask, mask_elements,
    monotone_maps, surjections, Gen, Simplex,
};
pub use standard::{
    boundary, cube, cube_boundary, cube_horn, horn, point, simplex_by_vertices, standard_map,
    standard_simplex,
};
