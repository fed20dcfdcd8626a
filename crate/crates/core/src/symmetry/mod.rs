//! Free `Z/p` actions: validation, quotients, block-circulant structure,
//! random periodic graphs, and brute-force search.

mod action;
mod blocks;
mod generate;
mod search;

pub use action::{
    edge_orbit_graph, quotient_graph, validate_action, ActionDoc, ActionViolation, CyclicAction,
};
pub use blocks::{circulant_blocks, laplacian_blocks, r_matrix, t_matrix, BlockDecomposition};
pub use generate::{assemble_periodic, generate_periodic};
pub use search::{find_free_actions, SearchOutcome, DEFAULT_SEARCH_CAP};
