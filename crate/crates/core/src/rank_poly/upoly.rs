use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;

use super::check_edge_cap;
use crate::algebra::{TwoVarPoly, UMonomial, UPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Counts per nullity `d`, i.e. a polynomial in `t = y - 1`.
type Counts = Vec<u64>;

fn add_into(acc: &mut Counts, src: &Counts, shift: usize, factor: &[u64]) {
    for (d, &c) in src.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (e, &f) in factor.iter().enumerate() {
            if f == 0 {
                continue;
            }
            let idx = d + e + shift;
            if acc.len() <= idx {
                acc.resize(idx + 1, 0);
            }
            acc[idx] += c * f;
        }
    }
}

/// Relabels blocks by order of first appearance.
fn canonical(labels: &mut [u32]) {
    let mut map: HashMap<u32, u32> = HashMap::new();
    for l in labels.iter_mut() {
        let next = map.len() as u32;
        *l = *map.entry(*l).or_insert(next);
    }
}

/// `U_G = Σ_{A ⊆ E} x_{n_1} ⋯ x_{n_k} (y - 1)^{|A| - r(A)}`, expanded in powers of `y`.
///
/// Equivalent to enumerating the `2^|E|` subsets but grouped: the state is the
/// partition of `V` cut out by the edges chosen so far, and each class of `m`
/// parallel edges is either left out or contributes its nonempty subsets at once.
pub fn u_polynomial(g: &Graph, cap: usize) -> Result<UPoly> {
    check_edge_cap(g, cap)?;
    let n = g.n();
    let mut states: HashMap<Vec<u32>, Counts> = HashMap::new();
    states.insert((0..n as u32).collect(), vec![1]);
    let mut loops = 0u64;
    for (u, v, m) in g.support() {
        if u == v {
            loops += m;
            continue;
        }
        // Nonempty subsets of m parallel copies: Σ_{j≥1} C(m, j) t^{j-1}.
        let merge: Vec<u64> = (1..=m).map(|j| binomial(m, j)).collect();
        let mut next: HashMap<Vec<u32>, Counts> = HashMap::with_capacity(states.len() * 2);
        for (labels, counts) in states {
            if labels[u] == labels[v] {
                let mut c = counts.clone();
                add_into(&mut c, &counts, 1, &merge);
                add_into(next.entry(labels).or_default(), &c, 0, &[1]);
            } else {
                let (keep, gone) = (labels[u], labels[v]);
                let mut joined = labels.clone();
                joined
                    .iter_mut()
                    .filter(|l| **l == gone)
                    .for_each(|l| *l = keep);
                canonical(&mut joined);
                add_into(next.entry(joined).or_default(), &counts, 0, &merge);
                add_into(next.entry(labels).or_default(), &counts, 0, &[1]);
            }
        }
        states = next;
    }
    let loop_factor: Vec<u64> = (0..=loops).map(|j| binomial(loops, j)).collect();
    let mut out = UPoly::zero();
    let mut entries: Vec<_> = states.into_iter().collect();
    entries.sort();
    for (labels, counts) in entries {
        let mut sizes = vec![0u32; n];
        for &l in &labels {
            sizes[l as usize] += 1;
        }
        sizes.retain(|&s| s > 0);
        let mut full = Vec::new();
        add_into(&mut full, &counts, 0, &loop_factor);
        // t^d = (y - 1)^d.
        for (d, &c) in full.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for e in 0..=d {
                let mut coeff = BigInt::from(c) * binomial(BigInt::from(d), BigInt::from(e));
                if (d - e) % 2 == 1 {
                    coeff = -coeff;
                }
                out.add_term(UMonomial::new(sizes.clone(), e as u32)?, coeff);
            }
        }
    }
    Ok(out)
}

/// `T_G(s, t) = s^{-k} U_G(x_i = s, y = t + 1)`, with `k` the component count.
pub fn specialize_u(u: &UPoly, k: usize) -> Result<TwoVarPoly> {
    let mut out = TwoVarPoly::zero();
    for (m, c) in u.terms() {
        let parts = m.parts();
        if parts < k {
            return Err(Error::InexactDivision(format!(
                "monomial {m} has {parts} parts, fewer than {k}"
            )));
        }
        let i = (parts - k) as u32;
        let d = m.ydeg();
        for j in 0..=d {
            let b = binomial(BigInt::from(d), BigInt::from(j));
            out.add_term(i, j, c * b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rank_poly::{tutte_rank_expansion, DEFAULT_EDGE_CAP};
    use num_traits::One;

    fn mono(sizes: &[u32], y: u32) -> UMonomial {
        UMonomial::new(sizes.to_vec(), y).unwrap()
    }

    fn u(g: &Graph) -> UPoly {
        u_polynomial(g, DEFAULT_EDGE_CAP).unwrap()
    }

    #[test]
    fn small_cases() {
        let k2 = Graph::build(2, &[(0, 1, 1)]).unwrap();
        let mut want = UPoly::zero();
        want.add_term(mono(&[1, 1], 0), BigInt::one());
        want.add_term(mono(&[2], 0), BigInt::one());
        assert_eq!(u(&k2), want);

        let lp = Graph::build(1, &[(0, 0, 1)]).unwrap();
        let mut want = UPoly::zero();
        want.add_term(mono(&[1], 1), BigInt::one());
        assert_eq!(u(&lp), want);

        let mut want = UPoly::zero();
        want.add_term(mono(&[1, 1, 1, 1], 0), BigInt::one());
        assert_eq!(u(&Graph::edgeless(4)), want);
    }

    #[test]
    fn triangle() {
        // ∅: x_1^3; one edge: 3 x_2 x_1; two edges: 3 x_3; all: x_3 (y - 1).
        let mut want = UPoly::zero();
        want.add_term(mono(&[1, 1, 1], 0), BigInt::one());
        want.add_term(mono(&[2, 1], 0), BigInt::from(3));
        want.add_term(mono(&[3], 0), BigInt::from(2));
        want.add_term(mono(&[3], 1), BigInt::one());
        assert_eq!(u(&families::cycle(3)), want);
    }

    #[test]
    fn specialization_examples() {
        let k2 = Graph::build(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(
            specialize_u(&u(&k2), 1).unwrap(),
            TwoVarPoly::from_terms(&[(1, 0, 1), (0, 0, 1)])
        );
        assert_eq!(
            specialize_u(&u(&Graph::edgeless(1)), 1).unwrap(),
            TwoVarPoly::one()
        );
        let lp = Graph::build(1, &[(0, 0, 1)]).unwrap();
        assert_eq!(
            specialize_u(&u(&lp), 1).unwrap(),
            TwoVarPoly::from_terms(&[(0, 1, 1), (0, 0, 1)])
        );
        assert!(specialize_u(&u(&k2), 2).is_err());
    }

    #[test]
    fn matches_rank_expansion_on_multigraph() {
        let g = Graph::build(
            5,
            &[
                (0, 1, 2),
                (1, 2, 1),
                (2, 0, 1),
                (2, 3, 3),
                (3, 3, 1),
                (1, 1, 2),
            ],
        )
        .unwrap();
        let t = tutte_rank_expansion(&g, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!(specialize_u(&u(&g), g.component_count()).unwrap(), t);
        let two = BigInt::from(2);
        assert_eq!(
            u(&g).eval_uniform(&BigInt::one(), &two),
            BigInt::from(1u64 << 10)
        );
    }
}
