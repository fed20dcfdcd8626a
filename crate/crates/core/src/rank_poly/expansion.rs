use num_bigint::BigInt;
use rayon::prelude::*;

use super::check_edge_cap;
use crate::algebra::TwoVarPoly;
use crate::error::Result;
use crate::graph::Graph;

const CHUNK_BITS: u32 = 12;

/// `T_G(s, t) = Σ_{A ⊆ E} s^{r(E) - r(A)} t^{|A| - r(A)}`, by enumerating every
/// edge subset. Parallel copies are distinct subset elements.
pub fn tutte_rank_expansion(g: &Graph, cap: usize) -> Result<TwoVarPoly> {
    check_edge_cap(g, cap)?;
    // Only vertices meeting a non-loop edge can merge; relabel them densely.
    let mut local = vec![usize::MAX; g.n()];
    let mut touched = 0usize;
    let mut edges: Vec<(u8, u8)> = Vec::new();
    let mut loops = 0u32;
    for &(u, v) in &g.edge_multiset().edges {
        if u == v {
            loops += 1;
            continue;
        }
        for x in [u, v] {
            if local[x] == usize::MAX {
                local[x] = touched;
                touched += 1;
            }
        }
        edges.push((local[u] as u8, local[v] as u8));
    }
    if edges.len() > 63 {
        return Err(crate::Error::CapExceeded {
            what: "non-loop edge count for subset enumeration",
            size: edges.len(),
            cap: 63,
        });
    }
    let m = edges.len() as u32;
    let isolated = g.n() - touched;
    let full_k = isolated + components(touched, &edges, (1u64 << m) - 1);
    let n = g.n();
    let width = (m + 1) as usize;
    let height = n + 1;

    let chunk_bits = CHUNK_BITS.min(m);
    let chunks = 1u64 << (m - chunk_bits);
    let counts = (0..chunks)
        .into_par_iter()
        .fold(
            || vec![0u64; height * width],
            |mut acc, hi| {
                for lo in 0..(1u64 << chunk_bits) {
                    let mask = (hi << chunk_bits) | lo;
                    let k = isolated + components(touched, &edges, mask);
                    let size = mask.count_ones() as usize;
                    // i = k(A) - k(E), nullity = |A| - n + k(A) over non-loop edges.
                    acc[(k - full_k) * width + (size + k - n)] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; height * width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let mut out = TwoVarPoly::zero();
    for i in 0..height {
        for j in 0..width {
            let c = counts[i * width + j];
            if c != 0 {
                out.add_term(i as u32, j as u32, BigInt::from(c));
            }
        }
    }
    // Each loop is independently in or out and always adds one to the nullity.
    for _ in 0..loops {
        out = out.mul(&TwoVarPoly::from_terms(&[(0, 0, 1), (0, 1, 1)]));
    }
    Ok(out)
}

/// Components of the `touched` vertices under the edges selected by `mask`.
fn components(touched: usize, edges: &[(u8, u8)], mask: u64) -> usize {
    let mut parent = [0u8; 64];
    for (v, slot) in parent.iter_mut().enumerate().take(touched) {
        *slot = v as u8;
    }
    let find = |parent: &mut [u8; 64], mut x: u8| {
        while parent[x as usize] != x {
            let gp = parent[parent[x as usize] as usize];
            parent[x as usize] = gp;
            x = gp;
        }
        x
    };
    let mut k = touched;
    let mut bits = mask;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = edges[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a as usize] = b;
            k -= 1;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rank_poly::DEFAULT_EDGE_CAP;

    fn t(g: &Graph) -> TwoVarPoly {
        tutte_rank_expansion(g, DEFAULT_EDGE_CAP).unwrap()
    }

    #[test]
    fn small_graphs() {
        let k2 = Graph::build(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(t(&k2), TwoVarPoly::from_terms(&[(1, 0, 1), (0, 0, 1)]));
        let lp = Graph::build(1, &[(0, 0, 1)]).unwrap();
        assert_eq!(t(&lp), TwoVarPoly::from_terms(&[(0, 1, 1), (0, 0, 1)]));
        assert_eq!(t(&Graph::edgeless(4)), TwoVarPoly::one());
        // (s+1)^2 + (s+1) + (t+1)
        assert_eq!(
            t(&families::cycle(3)),
            TwoVarPoly::from_terms(&[(2, 0, 1), (1, 0, 3), (0, 1, 1), (0, 0, 3)])
        );
    }

    #[test]
    fn counts_all_subsets() {
        let g = Graph::build(3, &[(0, 1, 2), (1, 2, 1), (2, 2, 1), (0, 2, 3)]).unwrap();
        let one = BigInt::from(1);
        assert_eq!(t(&g).eval(&one, &one), BigInt::from(1u64 << 7));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::build(2, &[(0, 1, 25)]).unwrap();
        assert!(tutte_rank_expansion(&g, DEFAULT_EDGE_CAP)
            .unwrap_err()
            .is_cap_exceeded());
        assert!(tutte_rank_expansion(&g, 25).is_ok());
    }
}
