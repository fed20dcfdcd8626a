//! Weighted multigraphs and the integer matrices derived from them.
//!
//! A graph on `n` vertices is a symmetric nonnegative weight function:
//! `w(i, j)` is the number of parallel edges between `i` and `j`, and
//! `w(i, i)` is the number of loops at `i`. Vertices are 0-indexed.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest weight accepted from user input.
pub const MAX_INPUT_WEIGHT: u64 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    weights: Vec<u64>,
}

impl Graph {
    /// Builds a graph from `(i, j, weight)` entries; pairs not listed get weight 0.
    pub fn build(n: usize, entries: &[(i64, i64, i64)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut weights = vec![0u64; n * n];
        let mut seen = BTreeSet::new();
        for &(i, j, w) in entries {
            if i < 0 || j < 0 || i as u64 >= n as u64 || j as u64 >= n as u64 {
                return Err(Error::IndexOutOfRange { i, j, n });
            }
            let (a, b) = (i.min(j) as usize, i.max(j) as usize);
            if w < 0 {
                return Err(Error::NegativeWeight { i: a, j: b, w });
            }
            if w as u64 > MAX_INPUT_WEIGHT {
                return Err(Error::WeightTooLarge {
                    i: a,
                    j: b,
                    w,
                    max: MAX_INPUT_WEIGHT,
                });
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicatePair { i: a, j: b });
            }
            weights[a * n + b] = w as u64;
            weights[b * n + a] = w as u64;
        }
        Ok(Graph { n, weights })
    }

    /// The graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        assert!(n >= 1, "edgeless graph needs at least one vertex");
        Graph {
            n,
            weights: vec![0; n * n],
        }
    }

    /// Builds a graph from a full weight matrix, checking squareness and symmetry.
    /// No upper bound is applied to the weights.
    pub fn from_weight_rows(rows: &[Vec<u64>]) -> Result<Graph> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut weights = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: r,
                    len: row.len(),
                });
            }
            weights.extend_from_slice(row);
        }
        for i in 0..n {
            for j in i + 1..n {
                if weights[i * n + j] != weights[j * n + i] {
                    return Err(Error::Asymmetric { i, j });
                }
            }
        }
        Ok(Graph { n, weights })
    }

    pub(crate) fn from_weights_unchecked(n: usize, weights: Vec<u64>) -> Graph {
        debug_assert_eq!(weights.len(), n * n);
        Graph { n, weights }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.weights[i * self.n + j]
    }

    pub fn weight_rows(&self) -> Vec<Vec<u64>> {
        self.weights.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Full row sum of the weight matrix; a loop contributes its multiplicity once.
    pub fn degree(&self, i: usize) -> u64 {
        self.weights[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// Number of edges counted with multiplicity, loops included.
    pub fn edge_count(&self) -> u64 {
        let mut total = 0;
        for i in 0..self.n {
            for j in i..self.n {
                total += self.weight(i, j);
            }
        }
        total
    }

    pub fn loop_count(&self) -> u64 {
        (0..self.n).map(|i| self.weight(i, i)).sum()
    }

    /// Nonzero pairs `(i, j, w)` with `i <= j`, in lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                let w = self.weight(i, j);
                if w > 0 {
                    out.push((i, j, w));
                }
            }
        }
        out
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix {
            dim: self.n,
            data: self.weights.iter().map(|&w| BigInt::from(w)).collect(),
        }
    }

    /// `L = D - A` with `d_ii` the full row sum, so every row of `L` sums to zero.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, -BigInt::from(self.weight(i, j)));
            }
            let d = BigInt::from(self.degree(i)) - BigInt::from(self.weight(i, i));
            m.set(i, i, d);
        }
        m
    }

    /// Every edge listed once per unit of multiplicity, ordered by `(u, v)`.
    pub fn edge_multiset(&self) -> EdgeList {
        let mut edges = Vec::new();
        for (i, j, w) in self.support() {
            for _ in 0..w {
                edges.push((i, j));
            }
        }
        EdgeList { n: self.n, edges }
    }

    /// Connected components as a vertex labelling (labels in first-appearance order).
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for u in 0..self.n {
                    if u != v && self.weight(v, u) > 0 && label[u] == usize::MAX {
                        label[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// The graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut weights = vec![0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                weights[perm[i] * self.n + perm[j]] = self.weight(i, j);
            }
        }
        Graph { n: self.n, weights }
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut weights = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                weights[i * n + j] = self.weight(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                weights[(i + self.n) * n + j + self.n] = other.weight(i, j);
            }
        }
        Graph { n, weights }
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if doc.n <= 0 {
            return Err(Error::EmptyGraph);
        }
        Graph::build(doc.n as usize, &doc.edges)
    }

    /// Canonical document: `i <= j`, zero weights omitted, pairs in lexicographic order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("graph serializes")
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            n: self.n as i64,
            edges: self
                .support()
                .into_iter()
                .map(|(i, j, w)| (i as i64, j as i64, w as i64))
                .collect(),
        }
    }
}

/// On-disk form: `{"n": <int>, "edges": [[i, j, w], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: i64,
    pub edges: Vec<(i64, i64, i64)>,
}

/// Edges with multiplicity; a pair `(u, u)` is a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> IntMatrix {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<IntMatrix> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("matrix has no rows".into()));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    row: r,
                    len: row.len(),
                });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        IntMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.data.chunks(self.dim).map(|r| r.iter().sum()).collect()
    }

    /// Block-diagonal matrix with `self` then `other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim + other.dim;
        let mut m = IntMatrix::zero(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.set(self.dim + i, self.dim + j, other.get(i, j).clone());
            }
        }
        m
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
