//! Block-circulant structure of matrices of a graph with a free `Z/p` action.
//!
//! With orbit representatives `r_1 < … < r_s`, the canonical ordering lists
//! `r_1, …, r_s, h(r_1), …, h(r_s), …, h^(p-1)(r_s)`. In that order a
//! matrix commuting with the action is block circulant `(M_0, …, M_{p-1})`
//! with `(M_j)_{ik} = m(r_i, h^j(r_k))`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::action::CyclicAction;
use crate::algebra::CycElem;
use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix};
use crate::linalg::CycMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    p: u64,
    blocks: Vec<IntMatrix>,
    /// `order[j * s + i] = h^j(r_i)`.
    order: Vec<usize>,
}

impl BlockDecomposition {
    /// Splits `m` along the canonical ordering of `a`. `m` must commute with the action.
    pub fn from_matrix(m: &IntMatrix, a: &CyclicAction) -> Result<Self> {
        let n = a.perm().len();
        if m.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {0}x{0} but the action moves {n} vertices",
                m.dim()
            )));
        }
        let p = a.p();
        let reps: Vec<usize> = a.orbits().iter().map(|o| o[0]).collect();
        let s = reps.len();
        let mut order = Vec::with_capacity(n);
        for j in 0..p {
            for &r in &reps {
                order.push(a.apply(r, j));
            }
        }
        let blocks = (0..p as usize)
            .map(|j| {
                let mut b = IntMatrix::zero(s);
                for i in 0..s {
                    for k in 0..s {
                        b.set(i, k, m.get(order[i], order[j * s + k]).clone());
                    }
                }
                b
            })
            .collect();
        let d = BlockDecomposition { p, blocks, order };
        if d.reassemble() != *m {
            return Err(Error::DimensionMismatch(
                "matrix does not commute with the action".into(),
            ));
        }
        Ok(d)
    }

    pub(crate) fn from_blocks(p: u64, blocks: Vec<IntMatrix>) -> Self {
        let s = blocks[0].dim();
        BlockDecomposition {
            p,
            blocks,
            order: (0..p as usize * s).collect(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Size `s` of each block (number of orbits).
    pub fn block_size(&self) -> usize {
        self.blocks[0].dim()
    }

    pub fn blocks(&self) -> &[IntMatrix] {
        &self.blocks
    }

    /// The canonical vertex ordering.
    pub fn ordering(&self) -> &[usize] {
        &self.order
    }

    /// The block-circulant matrix in canonical order: block row `r`, block
    /// column `c` holds `M_{(c - r) mod p}`.
    pub fn assemble(&self) -> IntMatrix {
        let s = self.block_size();
        let p = self.p as usize;
        let mut m = IntMatrix::zero(p * s);
        for r in 0..p {
            for c in 0..p {
                let b = &self.blocks[(c + p - r) % p];
                for i in 0..s {
                    for k in 0..s {
                        m.set(r * s + i, c * s + k, b.get(i, k).clone());
                    }
                }
            }
        }
        m
    }

    /// The block-circulant matrix in the graph's own vertex order.
    pub fn reassemble(&self) -> IntMatrix {
        let canon = self.assemble();
        let n = canon.dim();
        let mut m = IntMatrix::zero(n);
        for a in 0..n {
            for b in 0..n {
                m.set(self.order[a], self.order[b], canon.get(a, b).clone());
            }
        }
        m
    }

    /// `M_0` symmetric and `M_{p-j} = M_jᵀ`; exactly the condition for the
    /// assembled matrix to be symmetric.
    pub fn is_symmetric_family(&self) -> bool {
        let p = self.p as usize;
        self.blocks[0].is_symmetric()
            && (1..p).all(|j| self.blocks[p - j] == self.blocks[j].transpose())
    }

    /// `Σ_j M_j`.
    pub fn block_sum(&self) -> IntMatrix {
        self.blocks[1..]
            .iter()
            .fold(self.blocks[0].clone(), |acc, b| acc.add(b))
    }

    /// `Σ_j ζ^{kj} M_j` over `Z[ζ]`.
    pub fn twisted_sum(&self, k: u64) -> Result<CycMatrix> {
        if k >= self.p {
            return Err(Error::OutOfRange {
                index: k as usize,
                limit: self.p as usize,
            });
        }
        let p32 = self.p as u32;
        let s = self.block_size();
        let powers: Vec<CycElem> = (0..self.p).map(|j| CycElem::zeta_pow(p32, k * j)).collect();
        let mut entries = Vec::with_capacity(s * s);
        for i in 0..s {
            for l in 0..s {
                let mut e = CycElem::zero(p32);
                for (j, b) in self.blocks.iter().enumerate() {
                    let c: &BigInt = b.get(i, l);
                    if !c.is_zero() {
                        e = &e + &powers[j].scale(c);
                    }
                }
                entries.push(e);
            }
        }
        CycMatrix::new(p32, s, entries)
    }
}

/// Blocks `A_0, …, A_{p-1}` of the adjacency matrix.
pub fn circulant_blocks(g: &Graph, a: &CyclicAction) -> BlockDecomposition {
    BlockDecomposition::from_matrix(&g.adjacency_matrix(), a)
        .expect("adjacency of a validated action is block circulant")
}

/// Blocks `B_0, …, B_{p-1}` of the Laplacian matrix.
pub fn laplacian_blocks(g: &Graph, a: &CyclicAction) -> BlockDecomposition {
    BlockDecomposition::from_matrix(&g.laplacian_matrix(), a)
        .expect("Laplacian of a validated action is block circulant")
}

/// `T_k = Σ_j ζ^{kj} A_j` from adjacency blocks.
pub fn t_matrix(b: &BlockDecomposition, k: u64) -> Result<CycMatrix> {
    b.twisted_sum(k)
}

/// `R_k = Σ_j ζ^{kj} B_j` from Laplacian blocks.
pub fn r_matrix(b: &BlockDecomposition, k: u64) -> Result<CycMatrix> {
    b.twisted_sum(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{quotient_graph, validate_action};

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn periodic6() -> (Graph, CyclicAction) {
        let g = Graph::build(
            6,
            &[
                (0, 1, 2),
                (0, 5, 1),
                (1, 2, 1),
                (1, 3, 1),
                (1, 5, 1),
                (2, 3, 2),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 2),
            ],
        )
        .unwrap();
        let a = validate_action(&g, &[2, 3, 4, 5, 0, 1], 3).unwrap();
        (g, a)
    }

    #[test]
    fn periodic6_blocks() {
        let (g, a) = periodic6();
        let b = circulant_blocks(&g, &a);
        assert_eq!(b.blocks()[0], mat(&[&[0, 2], &[2, 0]]));
        assert_eq!(b.blocks()[1], mat(&[&[0, 0], &[1, 1]]));
        assert_eq!(b.blocks()[2], mat(&[&[0, 1], &[0, 1]]));
        assert!(b.is_symmetric_family());
        assert_eq!(b.ordering(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(b.assemble(), g.adjacency_matrix());
    }

    #[test]
    fn t0_is_quotient_adjacency() {
        let (g, a) = periodic6();
        let b = circulant_blocks(&g, &a);
        let t0 = t_matrix(&b, 0).unwrap();
        assert_eq!(t0.to_int(), Some(mat(&[&[0, 3], &[3, 2]])));
        assert_eq!(
            t0.to_int().unwrap(),
            quotient_graph(&g, &a).adjacency_matrix()
        );
    }

    #[test]
    fn t1_entries() {
        let (g, a) = periodic6();
        let t1 = t_matrix(&circulant_blocks(&g, &a), 1).unwrap();
        let z = |m| CycElem::zeta_pow(3, m);
        let two = BigInt::from(2);
        // A_0 + ζ A_1 + ζ^2 A_2.
        assert!(t1.get(0, 0).is_zero());
        assert_eq!(t1.get(0, 1), &(&CycElem::from_int(3, two.clone()) + &z(2)));
        assert_eq!(t1.get(1, 0), &(&CycElem::from_int(3, two) + &z(1)));
        assert_eq!(t1.get(1, 1), &(&z(1) + &z(2)));
        assert!(t_matrix(&circulant_blocks(&g, &a), 3).is_err());
    }

    #[test]
    fn r0_rows_sum_to_zero() {
        let (g, a) = periodic6();
        let lb = laplacian_blocks(&g, &a);
        let r0 = r_matrix(&lb, 0).unwrap().to_int().unwrap();
        assert!(r0.row_sums().iter().all(Zero::is_zero));
    }

    #[test]
    fn edgeless_blocks_are_zero() {
        let g = Graph::edgeless(3);
        let a = validate_action(&g, &[1, 2, 0], 3).unwrap();
        let b = circulant_blocks(&g, &a);
        assert!(b.blocks().iter().all(|m| *m == IntMatrix::zero(1)));
    }

    #[test]
    fn non_canonical_labels_reassemble() {
        // Relabel the 6-vertex example so orbits are not contiguous blocks.
        let (g, _) = periodic6();
        let relabel = [3, 0, 5, 1, 4, 2];
        let h = g.relabel(&relabel);
        let mut perm = vec![0; 6];
        for v in 0..6 {
            perm[relabel[v]] = relabel[[2, 3, 4, 5, 0, 1][v]];
        }
        let a = validate_action(&h, &perm, 3).unwrap();
        let b = circulant_blocks(&h, &a);
        assert_eq!(b.reassemble(), h.adjacency_matrix());
        assert!(b.is_symmetric_family());
        assert_eq!(b.block_sum(), quotient_graph(&h, &a).adjacency_matrix());
    }
}
