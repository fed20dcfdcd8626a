pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod json;
pub mod linalg;
pub mod obstruct;
pub mod rank_poly;
pub mod symmetry;

pub use error::{Error, Result};
