pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod luman;
pub mod search;
pub mod spectral;
pub mod transforms;
pub mod weights;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::Graph;
pub use weights::WeightSpec;
