//! Random instance generators for linear 3-uniform hypergraphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// One hyperedge per vertex of `g`, made of the ids of its incident edges.
///
/// The dual of a simple cubic graph is a 2-regular linear 3-uniform
/// hypergraph, and its cycles are the cycles of `g`.
pub fn cubic_dual(g: &Graph) -> Hypergraph {
    let edges = (0..g.num_vertices()).map(|v| {
        g.neighbors(v).iter().map(|&w| g.edge_id(v, w).unwrap()).collect::<Vec<_>>()
    });
    Hypergraph::new(0..g.num_edges(), edges).expect("incident edge ids are distinct")
}

/// A uniformly paired simple cubic graph on `n` vertices (`n` even, at
/// least 4), by rejection sampling of the configuration model.
pub fn random_cubic_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need an even order of at least 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::new(n, pairs) {
            return g;
        }
    }
}

pub fn random_cubic_dual(n: usize, seed: u64) -> Hypergraph {
    cubic_dual(&random_cubic_graph(n, seed))
}

/// Random linear 3-uniform hypergraph on `n` vertices with up to `m`
/// hyperedges: random triples are accepted while they share no pair with an
/// earlier hyperedge. Vertices left uncovered stay isolated.
pub fn random_linear_3_uniform(n: usize, m: usize, seed: u64) -> Hypergraph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = HashSet::new();
    let mut edges = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 200 * (m + 1) {
        attempts += 1;
        let mut t = rand::seq::index::sample(&mut rng, n, 3).into_vec();
        t.sort_unstable();
        let ps = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        if ps.iter().any(|p| pairs.contains(p)) {
            continue;
        }
        pairs.extend(ps);
        edges.push(t);
    }
    Hypergraph::new(0..n, edges).unwrap()
}

/// Connected acyclic linear 3-uniform hypergraph with `m` hyperedges: each
/// new hyperedge hangs off one existing vertex with two fresh ones.
pub fn random_hypertree(m: usize, seed: u64) -> Hypergraph {
    random_hyperforest(m, 1, seed)
}

/// Acyclic linear 3-uniform hypergraph with `m` hyperedges spread over
/// `trees` components (fewer if `m < trees`).
pub fn random_hyperforest(m: usize, trees: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 0;
    let mut forests: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for i in 0..m {
        if i < trees.max(1) {
            let e = vec![next, next + 1, next + 2];
            next += 3;
            forests.push(e.clone());
            edges.push(e);
            continue;
        }
        let tree = rng.gen_range(0..forests.len());
        let anchor = *forests[tree].choose(&mut rng).unwrap();
        let e = vec![anchor, next, next + 1];
        forests[tree].extend([next, next + 1]);
        next += 2;
        edges.push(e);
    }
    // scramble ids so structure is not visible in the numbering
    let mut relabel: Vec<usize> = (0..next).collect();
    relabel.shuffle(&mut rng);
    let mut edges: Vec<Vec<usize>> =
        edges.into_iter().map(|e| e.into_iter().map(|v| relabel[v]).collect()).collect();
    edges.shuffle(&mut rng);
    Hypergraph::from_edges(edges).unwrap()
}
