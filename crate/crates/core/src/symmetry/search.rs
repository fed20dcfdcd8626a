//! Exhaustive search for fixed-point-free automorphisms of prime order.
//!
//! Plain backtracking, vertex by vertex, pruned by degree and loop weight,
//! by weights to already-mapped vertices, and by cycle structure (every
//! cycle of the permutation must have length exactly `p`).

use serde::Serialize;

use crate::algebra::check_odd_prime;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_SEARCH_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub p: u64,
    pub actions: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    perm: Vec<usize>,
    inverse: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn compatible(&self, v: usize, c: usize) -> bool {
        let g = self.g;
        if c == v || self.inverse[c] != UNSET {
            return false;
        }
        if g.degree(v) != g.degree(c) || g.weight(v, v) != g.weight(c, c) {
            return false;
        }
        (0..v).all(|u| g.weight(u, v) == g.weight(self.perm[u], c))
    }

    /// Length of the path through `v` in the partial permutation, or `None`
    /// if the path closes into a cycle of the wrong length.
    fn cycle_ok(&self, v: usize) -> bool {
        let mut len = 1;
        let mut x = self.perm[v];
        while x != v && self.perm[x] != UNSET {
            x = self.perm[x];
            len += 1;
            if len > self.p {
                return false;
            }
        }
        if x == v {
            return len == self.p;
        }
        // Open path: count the tail through `x` plus predecessors of `v`.
        len += 1;
        let mut y = v;
        while self.inverse[y] != UNSET {
            y = self.inverse[y];
            len += 1;
            if len > self.p {
                return false;
            }
        }
        true
    }

    fn run(&mut self, v: usize) {
        let n = self.g.n();
        if v == n {
            self.found.push(self.perm.clone());
            return;
        }
        for c in 0..n {
            if !self.compatible(v, c) {
                continue;
            }
            self.perm[v] = c;
            self.inverse[c] = v;
            if self.cycle_ok(v) {
                self.run(v + 1);
            }
            self.perm[v] = UNSET;
            self.inverse[c] = UNSET;
        }
    }
}

/// Every permutation `h` with `h^p = id`, no fixed vertex, and
/// `w(h(u), h(v)) = w(u, v)`, listed in lexicographic order.
pub fn find_free_actions(g: &Graph, p: u64, cap: usize) -> Result<SearchOutcome> {
    check_odd_prime(p)?;
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertex count for automorphism search",
            size: n,
            cap,
        });
    }
    if n as u64 % p != 0 {
        return Ok(SearchOutcome {
            p,
            actions: vec![],
            reason: Some(format!("{p} does not divide the vertex count {n}")),
        });
    }
    let mut search = Search {
        g,
        p: p as usize,
        perm: vec![UNSET; n],
        inverse: vec![UNSET; n],
        found: Vec::new(),
    };
    search.run(0);
    Ok(SearchOutcome {
        p,
        actions: search.found,
        reason: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::symmetry::validate_action;

    fn periodic6() -> Graph {
        Graph::build(
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
        .unwrap()
    }

    #[test]
    fn finds_rotation_of_periodic6() {
        let out = find_free_actions(&periodic6(), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert!(out.actions.contains(&vec![2, 3, 4, 5, 0, 1]));
        for h in &out.actions {
            validate_action(&periodic6(), h, 3).unwrap();
        }
    }

    #[test]
    fn frucht_has_none() {
        let out = find_free_actions(&families::frucht(), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert!(out.actions.is_empty());
    }

    #[test]
    fn edgeless_three_has_both_three_cycles() {
        let out = find_free_actions(&Graph::edgeless(3), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(out.actions, vec![vec![1, 2, 0], vec![2, 0, 1]]);
    }

    #[test]
    fn counts_on_symmetric_graphs() {
        // Free order-3 elements of S_6 acting on E_6: 6!/(3·3·2) = 40.
        let out = find_free_actions(&Graph::edgeless(6), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(out.actions.len(), 40);
        // C_9 has the two rotations by ±3.
        let out = find_free_actions(&families::cycle(9), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(out.actions.len(), 2);
        // C_5: rotations by 1..4.
        let out = find_free_actions(&families::cycle(5), 5, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(out.actions.len(), 4);
    }

    #[test]
    fn refusals() {
        let big = Graph::edgeless(13);
        assert!(matches!(
            find_free_actions(&big, 13, DEFAULT_SEARCH_CAP),
            Err(Error::CapExceeded { .. })
        ));
        let out = find_free_actions(&families::complete(4), 3, DEFAULT_SEARCH_CAP).unwrap();
        assert!(out.actions.is_empty());
        assert!(out.reason.is_some());
    }
}
