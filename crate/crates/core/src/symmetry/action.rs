use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::check_odd_prime;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One reason a permutation fails to be a free weight-preserving action of order `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionViolation {
    NotAPermutation,
    OrderNotP { order: u64, p: u64 },
    PeriodDoesNotDivide { p: u64, n: usize },
    FixedVertex(usize),
    WeightNotPreserved { u: usize, v: usize },
    EdgeFixed { u: usize, v: usize },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionViolation::NotAPermutation => write!(f, "not a permutation of the vertex set"),
            ActionViolation::OrderNotP { order, p } => {
                write!(f, "permutation has order {order}, not {p}")
            }
            ActionViolation::PeriodDoesNotDivide { p, n } => {
                write!(f, "{p} does not divide the vertex count {n}")
            }
            ActionViolation::FixedVertex(v) => write!(f, "vertex {v} is fixed"),
            ActionViolation::WeightNotPreserved { u, v } => {
                write!(f, "weight of pair ({u}, {v}) is not preserved")
            }
            ActionViolation::EdgeFixed { u, v } => {
                write!(f, "edge ({u}, {v}) is swapped onto itself")
            }
        }
    }
}

/// A validated generator `h` of a free `Z/p` action on the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    p: u64,
    perm: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl CyclicAction {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Orbits `(v, h(v), …, h^(p-1)(v))`, each starting at its smallest
    /// vertex, sorted by that vertex.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// `h^j(v)`.
    pub fn apply(&self, v: usize, j: u64) -> usize {
        let mut x = v;
        for _ in 0..j % self.p {
            x = self.perm[x];
        }
        x
    }

    /// Index of the orbit containing each vertex.
    pub fn orbit_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.perm.len()];
        for (i, orbit) in self.orbits.iter().enumerate() {
            for &v in orbit {
                of[v] = i;
            }
        }
        of
    }

    pub fn to_doc(&self) -> ActionDoc {
        ActionDoc {
            p: self.p,
            perm: self.perm.clone(),
        }
    }
}

/// `{"p": <int>, "perm": [<int>, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub p: u64,
    pub perm: Vec<usize>,
}

impl ActionDoc {
    pub fn from_json(text: &str) -> Result<ActionDoc> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

fn permutation_order(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order: u64 = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// Checks that `perm` generates a free, weight-preserving action of order `p`.
///
/// All structural violations are collected; for weights only the first
/// offending pair is reported.
pub fn validate_action(g: &Graph, perm: &[usize], p: u64) -> Result<CyclicAction> {
    check_odd_prime(p)?;
    let n = g.n();
    let mut is_perm = perm.len() == n;
    if is_perm {
        let mut seen = vec![false; n];
        for &x in perm {
            if x >= n || seen[x] {
                is_perm = false;
                break;
            }
            seen[x] = true;
        }
    }
    if !is_perm {
        return Err(Error::InvalidAction(vec![ActionViolation::NotAPermutation]));
    }

    let mut violations = Vec::new();
    let order = permutation_order(perm);
    if order != p {
        violations.push(ActionViolation::OrderNotP { order, p });
    }
    if n as u64 % p != 0 {
        violations.push(ActionViolation::PeriodDoesNotDivide { p, n });
    }
    if let Some(v) = (0..n).find(|&v| perm[v] == v) {
        violations.push(ActionViolation::FixedVertex(v));
    }
    'weights: for u in 0..n {
        for v in u..n {
            if g.weight(perm[u], perm[v]) != g.weight(u, v) {
                violations.push(ActionViolation::WeightNotPreserved { u, v });
                break 'weights;
            }
        }
    }
    // With odd prime order and no fixed vertex, h(u) = v and h(v) = u is
    // impossible (h^2 would fix u); checked anyway so the edge action is
    // known to be free.
    'edges: for u in 0..n {
        for v in u + 1..n {
            if g.weight(u, v) > 0 && perm[u] == v && perm[v] == u {
                violations.push(ActionViolation::EdgeFixed { u, v });
                break 'edges;
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidAction(violations));
    }

    let mut orbits = Vec::with_capacity(n / p as usize);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::with_capacity(p as usize);
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        debug_assert_eq!(orbit.len() as u64, p);
        orbits.push(orbit);
    }
    Ok(CyclicAction {
        p,
        perm: perm.to_vec(),
        orbits,
    })
}

/// The quotient graph: one vertex per orbit (ordered by smallest member) and
/// weights `w̄(ū, v̄) = Σ_{i<p} w(u, h^i(v))`.
///
/// Its adjacency matrix is the sum of the circulant blocks, so a non-loop
/// edge joining two vertices of the same orbit is counted once from each end.
pub fn quotient_graph(g: &Graph, a: &CyclicAction) -> Graph {
    let s = a.orbits.len();
    let mut w = vec![0u64; s * s];
    for (i, oi) in a.orbits.iter().enumerate() {
        for (k, ok) in a.orbits.iter().enumerate() {
            let total: u64 = ok.iter().map(|&v| g.weight(oi[0], v)).sum();
            debug_assert!(
                oi.iter()
                    .all(|&u| ok.iter().map(|&v| g.weight(u, v)).sum::<u64>() == total),
                "quotient weight depends on the representative"
            );
            w[i * s + k] = total;
        }
    }
    Graph::from_weights_unchecked(s, w)
}

/// The graph of edge orbits: one vertex per vertex orbit and one edge per
/// orbit of edges.
///
/// Edges between distinct vertex orbits match [`quotient_graph`]. Inside an
/// orbit, the `p` loops of a loop orbit give one loop, and the `p` edges
/// `{u, h^i(u)}` of a non-loop orbit also give one loop, where the quotient
/// weight counts that orbit twice (once as `h^i`, once as `h^(p-i)`).
/// Invariant edge subsets of `g` are in bijection with edge subsets of this graph.
pub fn edge_orbit_graph(g: &Graph, a: &CyclicAction) -> Graph {
    let q = quotient_graph(g, a);
    let s = q.n();
    let mut w: Vec<u64> = q.weight_rows().concat();
    for (i, orbit) in a.orbits.iter().enumerate() {
        let u = orbit[0];
        let internal: u64 = orbit[1..].iter().map(|&v| g.weight(u, v)).sum();
        debug_assert_eq!(internal % 2, 0, "w(u, h^i u) = w(u, h^(p-i) u)");
        w[i * s + i] = g.weight(u, u) + internal / 2;
    }
    Graph::from_weights_unchecked(s, w)
}
