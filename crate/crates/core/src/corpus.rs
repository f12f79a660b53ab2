//! Named test graphs and a seeded generator of small connected multigraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::Multigraph;

pub mod named {
    use crate::multigraph::Multigraph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).expect("named graphs are well formed")
    }

    /// Triangle 0-1-2; "+++" is the directed cycle 0→1→2→0.
    pub fn c3() -> Multigraph {
        build(3, &[(0, 1), (1, 2), (2, 0)])
    }

    pub fn c4() -> Multigraph {
        build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    /// Two parallel edges.
    pub fn d2() -> Multigraph {
        build(2, &[(0, 1), (0, 1)])
    }

    /// Three parallel edges.
    pub fn p3e() -> Multigraph {
        build(2, &[(0, 1), (0, 1), (0, 1)])
    }

    /// A single bridge.
    pub fn b1() -> Multigraph {
        build(2, &[(0, 1)])
    }

    /// A single loop.
    pub fn l1() -> Multigraph {
        build(1, &[(0, 0)])
    }

    pub fn k4() -> Multigraph {
        build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    /// K4 without the edge 2-3.
    pub fn k4_minus_edge() -> Multigraph {
        build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    /// Vertices 0 and 1 joined by paths of length 1, 2 and 2.
    pub fn theta() -> Multigraph {
        build(4, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    }

    /// All named graphs with their names.
    pub fn all() -> Vec<(&'static str, Multigraph)> {
        vec![
            ("C3", c3()),
            ("C4", c4()),
            ("D2", d2()),
            ("P3E", p3e()),
            ("B1", b1()),
            ("L1", l1()),
            ("K4", k4()),
            ("K4-minus-edge", k4_minus_edge()),
            ("theta", theta()),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        CorpusLimits {
            max_vertices: 6,
            max_edges: 9,
        }
    }
}

/// One connected multigraph with at most the given numbers of vertices and edges.
pub fn random_connected_multigraph(rng: &mut impl Rng, limits: CorpusLimits) -> Multigraph {
    let max_v = limits.max_vertices.clamp(1, limits.max_edges + 1);
    let n = rng.gen_range(1..=max_v);
    let m = rng.gen_range(n - 1..=limits.max_edges.max(n - 1));

    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((labels[i], labels[j]));
    }
    while edges.len() < m {
        if n == 1 || rng.gen_bool(0.1) {
            let v = rng.gen_range(0..n);
            edges.push((v, v));
        } else {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u, v));
        }
    }
    edges.shuffle(rng);
    for e in edges.iter_mut() {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    Multigraph::new(n, edges).expect("generated endpoints are in range")
}

/// The named graphs followed by `count` seeded random connected multigraphs.
/// The output depends only on the arguments.
pub fn corpus(seed: u64, count: usize, limits: CorpusLimits) -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = named::all()
        .into_iter()
        .filter(|(_, g)| {
            g.vertex_count() <= limits.max_vertices && g.edge_count() <= limits.max_edges
        })
        .map(|(name, g)| (name.to_string(), g))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        out.push((
            format!("random-{:03}", i),
            random_connected_multigraph(&mut rng, limits),
        ));
    }
    out
}
