use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::check_edge_cap;
use crate::algebra::TwoVarPoly;
use crate::error::Result;
use crate::graph::Graph;

/// Which edge deletion-contraction splits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// A bridge if there is one, else the lexicographically lowest edge.
    #[default]
    Lowest,
    /// A uniformly random edge, drawn from a stream seeded once per call.
    Seeded(u64),
}

/// Weight matrix of a loopless multigraph without isolated vertices.
type Key = (usize, Vec<u64>);

struct Solver {
    rule: PivotRule,
    rng: ChaCha8Rng,
    memo: HashMap<Key, TwoVarPoly>,
}

fn x() -> TwoVarPoly {
    TwoVarPoly::monomial(1, 0, BigInt::one())
}

fn y_pow(k: u64) -> TwoVarPoly {
    TwoVarPoly::monomial(0, k as u32, BigInt::one())
}

/// Strips loops (returned as a count) and isolated vertices.
fn normalize(n: usize, mut w: Vec<u64>) -> (u64, Key) {
    let mut loops = 0;
    for i in 0..n {
        loops += w[i * n + i];
        w[i * n + i] = 0;
    }
    let keep: Vec<usize> = (0..n)
        .filter(|&i| (0..n).any(|j| w[i * n + j] > 0))
        .collect();
    let m = keep.len();
    let mut out = vec![0; m * m];
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            out[a * m + b] = w[i * n + j];
        }
    }
    (loops, (m, out))
}

/// Is the single edge `u-v` the only route between its endpoints?
fn is_bridge(n: usize, w: &[u64], u: usize, v: usize) -> bool {
    if w[u * n + v] != 1 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(a) = stack.pop() {
        for b in 0..n {
            if seen[b] || w[a * n + b] == 0 || (a == u && b == v) {
                continue;
            }
            if b == v {
                return false;
            }
            seen[b] = true;
            stack.push(b);
        }
    }
    true
}

fn delete(n: usize, w: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut d = w.to_vec();
    d[u * n + v] -= 1;
    d[v * n + u] -= 1;
    d
}

/// Merges `v` into `u`; remaining `u-v` copies become loops at `u`.
fn contract(n: usize, w: &[u64], u: usize, v: usize) -> (usize, Vec<u64>) {
    let idx: Vec<usize> = (0..n).filter(|&i| i != v).collect();
    let pos = |i: usize| if i == v { u } else { i };
    let m = n - 1;
    let mut out = vec![0; m * m];
    let at: HashMap<usize, usize> = idx.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    for i in 0..n {
        for j in 0..n {
            let c = w[i * n + j];
            if c == 0 || (i == v && j == u) {
                continue;
            }
            let (a, b) = (at[&pos(i)], at[&pos(j)]);
            out[a * m + b] += c;
        }
    }
    // The pair (u, v) itself was counted once from (u, v); drop the contracted copy.
    let uu = at[&u];
    out[uu * m + uu] -= 1;
    (m, out)
}

impl Solver {
    fn tau(&mut self, n: usize, w: Vec<u64>) -> TwoVarPoly {
        let (loops, key) = normalize(n, w);
        let core = self.tau_loopless(key);
        if loops == 0 {
            core
        } else {
            core.mul(&y_pow(loops))
        }
    }

    fn tau_loopless(&mut self, key: Key) -> TwoVarPoly {
        if key.0 == 0 {
            return TwoVarPoly::one();
        }
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (n, w) = &key;
        let n = *n;
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i * n + j] > 0)
            .collect();
        let (u, v) = match self.rule {
            PivotRule::Lowest => edges
                .iter()
                .copied()
                .find(|&(u, v)| is_bridge(n, w, u, v))
                .unwrap_or(edges[0]),
            PivotRule::Seeded(_) => edges[self.rng.gen_range(0..edges.len())],
        };
        let (cn, cw) = contract(n, w, u, v);
        let result = if is_bridge(n, w, u, v) {
            x().mul(&self.tau(cn, cw))
        } else {
            self.tau(n, delete(n, w, u, v)).add(&self.tau(cn, cw))
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// The Tutte polynomial by deletion-contraction, returned in shifted form
/// `T_G(s, t) = τ_G(s + 1, t + 1)`.
pub fn tutte_deletion_contraction(g: &Graph, cap: usize, rule: PivotRule) -> Result<TwoVarPoly> {
    check_edge_cap(g, cap)?;
    let seed = match rule {
        PivotRule::Seeded(s) => s,
        PivotRule::Lowest => 0,
    };
    let mut solver = Solver {
        rule,
        rng: ChaCha8Rng::seed_from_u64(seed),
        memo: HashMap::new(),
    };
    let n = g.n();
    let w: Vec<u64> = g.weight_rows().into_iter().flatten().collect();
    Ok(solver.tau(n, w).shift_variables())
}
