//! Small named graphs used by tests, examples and the CLI.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) as i64, i as i64, 1)).collect();
    Graph::build(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "simple cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n)
        .map(|i| (i as i64, ((i + 1) % n) as i64, 1))
        .collect();
    Graph::build(n, &edges).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i as i64, j as i64, 1));
        }
    }
    Graph::build(n, &edges).expect("valid complete graph")
}

/// Cubic graph from LCF notation: a Hamiltonian cycle `0..n` plus chords `i -- i + shift[i mod len]`.
pub fn lcf(n: usize, shifts: &[i64]) -> Graph {
    let mut rows = vec![vec![0u64; n]; n];
    for i in 0..n {
        let j = (i + 1) % n;
        rows[i][j] = 1;
        rows[j][i] = 1;
    }
    for i in 0..n {
        let s = shifts[i % shifts.len()];
        let j = (i as i64 + s).rem_euclid(n as i64) as usize;
        rows[i][j] = 1;
        rows[j][i] = 1;
    }
    Graph::from_weight_rows(&rows).expect("LCF graph is symmetric")
}

/// The Frucht graph: 12 vertices, cubic, trivial automorphism group.
pub fn frucht() -> Graph {
    lcf(12, &[-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2])
}
