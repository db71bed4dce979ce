//! Joins and fat joins, plain and weighted, with the comparison from fat to neat.

mod fat;
mod join;

pub use fat::{
    fat_join, fat_join_map, fat_to_neat, weighted_fat_join, weighted_fat_join_map, FatJoin,
    WeightedFatJoin,
};
pub use join::{join, join_map, weighted_join, weighted_join_map, Join, JoinPart, WeightedJoin};
