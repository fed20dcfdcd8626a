//! Rank-generating polynomials of multigraphs: the U-polynomial, the Tutte
//! polynomial by subset expansion, and a deletion-contraction oracle.

mod contraction;
mod expansion;
mod subset;
mod upoly;

pub use contraction::{tutte_deletion_contraction, PivotRule};
pub use expansion::tutte_rank_expansion;
pub use subset::{subset_rank, SubsetRank};
pub use upoly::{specialize_u, u_polynomial};

/// Default bound on `|E|` for anything that is exponential in the edge count.
pub const DEFAULT_EDGE_CAP: usize = 24;

pub(crate) fn check_edge_cap(g: &crate::graph::Graph, cap: usize) -> crate::Result<()> {
    let m = g.edge_count() as usize;
    if m > cap {
        return Err(crate::Error::CapExceeded {
            what: "edge count",
            size: m,
            cap,
        });
    }
    Ok(())
}
