//! Flagged necklaces and the mapping spaces of homotopy coherent realizations.

mod cofibrant;
mod decompose;
mod mainfact;
mod mapping;
mod necklace;

pub use cofibrant::{computation1_check, cofibrant_weight, CofibrantWeight, CubeCheck, CubeMode, Endpoint};
pub use decompose::{concat, decompose, Cones, Decomposition};
pub use mainfact::{full_inclusions, mainfact_check, product_decomposition, pullback_form, ProductDecomposition};
pub use mapping::{mapping_space, MappingSpace};
pub use necklace::{enumerate_necklaces, normalize, FlaggedNecklace, Necklace, MAX_LENGTH};
