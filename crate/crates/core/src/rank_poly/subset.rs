use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }

    /// Component sizes, largest first.
    pub(crate) fn sizes(&mut self) -> Vec<u32> {
        let mut out = Vec::new();
        for v in 0..self.parent.len() {
            if self.find(v) == v {
                out.push(self.size[v] as u32);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Rank data of the spanning subgraph `G|A` (all vertices kept).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetRank {
    pub subset: Vec<usize>,
    pub rank: usize,
    pub components: usize,
    pub sizes: Vec<u32>,
}

/// `subset` indexes positions of [`Graph::edge_multiset`]; repeats are ignored.
pub fn subset_rank(g: &Graph, subset: &[usize]) -> Result<SubsetRank> {
    let edges = g.edge_multiset();
    let mut ds = DisjointSets::new(g.n());
    let mut chosen = subset.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    for &e in &chosen {
        let &(u, v) = edges.edges.get(e).ok_or(Error::OutOfRange {
            index: e,
            limit: edges.len(),
        })?;
        ds.union(u, v);
    }
    let components = ds.count();
    Ok(SubsetRank {
        subset: chosen,
        rank: g.n() - components,
        components,
        sizes: ds.sizes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_subsets() {
        let k2 = Graph::build(2, &[(0, 1, 1)]).unwrap();
        let r = subset_rank(&k2, &[]).unwrap();
        assert_eq!((r.rank, r.components, r.sizes), (0, 2, vec![1, 1]));
        let r = subset_rank(&k2, &[0]).unwrap();
        assert_eq!((r.rank, r.components, r.sizes), (1, 1, vec![2]));
        assert!(subset_rank(&k2, &[1]).is_err());
    }

    #[test]
    fn loops_do_not_change_rank() {
        let g = Graph::build(2, &[(0, 0, 2), (0, 1, 1)]).unwrap();
        let r = subset_rank(&g, &[0, 1]).unwrap();
        assert_eq!((r.rank, r.components), (0, 2));
    }
}
