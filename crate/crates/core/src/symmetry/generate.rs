use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::action::{validate_action, CyclicAction};
use super::blocks::BlockDecomposition;
use crate::algebra::check_odd_prime;
use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix};

/// Builds the graph whose adjacency is the block circulant `(A_0, …, A_{p-1})`
/// in canonical order, together with the rotation `v ↦ v + s (mod ps)`.
pub fn assemble_periodic(blocks: Vec<IntMatrix>) -> Result<(Graph, CyclicAction)> {
    let p = blocks.len() as u64;
    check_odd_prime(p)?;
    let s = blocks[0].dim();
    if blocks.iter().any(|b| b.dim() != s) {
        return Err(Error::DimensionMismatch("blocks differ in size".into()));
    }
    if blocks
        .iter()
        .flat_map(|b| b.entries())
        .any(|x| x.is_negative() || x.to_u64().is_none())
    {
        return Err(Error::Malformed(
            "block entries must be nonnegative integers".into(),
        ));
    }
    let d = BlockDecomposition::from_blocks(p, blocks);
    if !d.is_symmetric_family() {
        return Err(Error::Malformed(
            "blocks must satisfy A_0 = A_0ᵀ and A_(p-j) = A_jᵀ".into(),
        ));
    }
    let m = d.assemble();
    let n = m.dim();
    let rows: Vec<Vec<u64>> = m
        .rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_u64().expect("checked above"))
                .collect()
        })
        .collect();
    let g = Graph::from_weight_rows(&rows)?;
    let perm: Vec<usize> = (0..n).map(|v| (v + s) % n).collect();
    let a = validate_action(&g, &perm, p)?;
    Ok((g, a))
}

/// A random graph with a free `Z/p` action, on `n = p·s` vertices.
///
/// `A_0` is drawn symmetric, `A_1, …, A_{(p-1)/2}` arbitrary, entries uniform
/// in `0..=max_weight`; the remaining blocks are the transposes
/// `A_{p-j} = A_jᵀ`.
pub fn generate_periodic(
    s: usize,
    p: u64,
    seed: u64,
    max_weight: u64,
) -> Result<(Graph, CyclicAction)> {
    check_odd_prime(p)?;
    if s == 0 {
        return Err(Error::EmptyGraph);
    }
    if max_weight == 0 {
        return Err(Error::Malformed("max_weight must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p as usize;
    let mut blocks = vec![IntMatrix::zero(s); p];
    for i in 0..s {
        for k in i..s {
            let w = BigInt::from(rng.gen_range(0..=max_weight));
            blocks[0].set(i, k, w.clone());
            blocks[0].set(k, i, w);
        }
    }
    for j in 1..=(p - 1) / 2 {
        for i in 0..s {
            for k in 0..s {
                blocks[j].set(i, k, BigInt::from(rng.gen_range(0..=max_weight)));
            }
        }
        blocks[p - j] = blocks[j].transpose();
    }
    assemble_periodic(blocks)
}
