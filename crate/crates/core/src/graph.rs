//! Simple undirected graphs, their triangles, and the graph-level helpers
//! used by the cover strategies: irreducible reduction, local-search
//! bipartite cuts, greedy packings and instance generators.
//!
//! Vertices are dense ids `0..n`. Edges are stored as sorted pairs `(u, v)`
//! with `u < v`; an edge's id is its rank in lexicographic order, so ids are
//! independent of insertion order.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

/// A triangle with its vertices and edge ids, both ascending.
///
/// With lexicographic edge ids the edge list is `[uv, uw, vw]` for
/// vertices `u < v < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [VertexId; 3],
    pub edges: [EdgeId; 3],
}

/// Pairwise edge-disjoint triangles; a lower-bound witness for the packing
/// number.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PackingWitness {
    triangles: Vec<Triangle>,
}

impl PackingWitness {
    pub fn new(triangles: Vec<Triangle>) -> Result<Self> {
        let mut used = HashSet::new();
        for t in &triangles {
            for &e in &t.edges {
                if !used.insert(e) {
                    return Err(Error::OverlappingPacking(e));
                }
            }
        }
        Ok(Self { triangles })
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn used_edges(&self) -> HashSet<EdgeId> {
        self.triangles.iter().flat_map(|t| t.edges).collect()
    }
}

/// Order in which the greedy packing scans triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingOrder {
    Canonical,
    Seeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    K4,
    K5,
}

impl Gadget {
    pub fn order(self) -> usize {
        match self {
            Gadget::K4 => 4,
            Gadget::K5 => 5,
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Pairs may come in any orientation and
    /// order; self-loops and repeated pairs are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut pairs = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_pairs(n, pairs))
    }

    fn from_sorted_pairs(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_pairs(n, Vec::new())
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in id order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// The triangle on three vertices, if all three edges are present.
    pub fn triangle(&self, a: VertexId, b: VertexId, c: VertexId) -> Option<Triangle> {
        let mut vs = [a, b, c];
        vs.sort_unstable();
        let [u, v, w] = vs;
        if u == v || v == w {
            return None;
        }
        Some(Triangle {
            vertices: vs,
            edges: [self.edge_id(u, v)?, self.edge_id(u, w)?, self.edge_id(v, w)?],
        })
    }

    /// The spanning subgraph without the given edges. Vertex ids are kept;
    /// edge ids are reassigned.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let drop: HashSet<EdgeId> = removed.iter().copied().collect();
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !drop.contains(id))
            .map(|(_, &p)| p)
            .collect();
        Self::from_sorted_pairs(self.n, kept)
    }

    /// Two-colouring check by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// Every triangle exactly once, sorted by vertex triple.
///
/// For each edge `{u, v}` (in id order) the common neighbours `w > v` are
/// merged out of the two sorted adjacency lists.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for (uv, &(u, v)) in g.edges.iter().enumerate() {
        let (nu, nv) = (&g.adj[u], &g.adj[v]);
        let mut i = nu.partition_point(|&x| x <= v);
        let mut j = nv.partition_point(|&x| x <= v);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let w = nu[i];
                    // both lookups succeed: w is adjacent to u and v
                    let uw = g.edge_id(u, w).unwrap();
                    let vw = g.edge_id(v, w).unwrap();
                    out.push(Triangle {
                        vertices: [u, v, w],
                        edges: [uv, uw, vw],
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

pub fn is_triangle_free(g: &Graph) -> bool {
    enumerate_triangles(g).is_empty()
}

/// True when every triangle of `g` contains an edge of `cover`.
pub fn is_triangle_cover(g: &Graph, cover: &[EdgeId]) -> bool {
    let set: HashSet<EdgeId> = cover.iter().copied().collect();
    enumerate_triangles(g)
        .iter()
        .all(|t| t.edges.iter().any(|e| set.contains(e)))
}

/// `g` minus every edge that lies on no triangle. One pass is enough:
/// deleting such an edge destroys no triangle.
pub fn irreducible_subgraph(g: &Graph) -> Graph {
    let mut on_triangle = vec![false; g.num_edges()];
    for t in enumerate_triangles(g) {
        for e in t.edges {
            on_triangle[e] = true;
        }
    }
    let kept = g
        .edges
        .iter()
        .zip(&on_triangle)
        .filter(|(_, &keep)| keep)
        .map(|(&p, _)| p)
        .collect();
    Graph::from_sorted_pairs(g.n, kept)
}

/// Side assignment from deterministic local search: everyone starts on side
/// `false`; vertices are scanned in id order and moved whenever that
/// strictly enlarges the cut, until a full pass moves nobody.
pub fn bipartite_cut(g: &Graph) -> Vec<bool> {
    let mut side = vec![false; g.n];
    loop {
        let mut moved = false;
        for v in 0..g.n {
            let same = g.adj[v].iter().filter(|&&w| side[w] == side[v]).count();
            if 2 * same > g.degree(v) {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            return side;
        }
    }
}

/// The edges left uncut by [`bipartite_cut`]. At a local optimum every
/// vertex has at most half its edges uncut, so the result has at most
/// `|E| / 2` edges, and deleting it leaves a bipartite graph.
pub fn bipartite_cut_cover(g: &Graph) -> Vec<EdgeId> {
    let side = bipartite_cut(g);
    g.edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| side[u] == side[v])
        .map(|(id, _)| id)
        .collect()
}

/// Maximal edge-disjoint triangle set built greedily.
pub fn greedy_triangle_packing(g: &Graph, order: PackingOrder) -> PackingWitness {
    extend_packing(g, PackingWitness::default(), order)
}

/// Greedily adds triangles of `g` that are edge-disjoint from `base` and
/// from each other. The result is maximal.
pub fn extend_packing(g: &Graph, base: PackingWitness, order: PackingOrder) -> PackingWitness {
    let mut triangles = enumerate_triangles(g);
    if let PackingOrder::Seeded(seed) = order {
        triangles.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut used = base.used_edges();
    let mut packed = base.triangles;
    for t in triangles {
        if t.edges.iter().all(|e| !used.contains(e)) {
            used.extend(t.edges);
            packed.push(t);
        }
    }
    PackingWitness { triangles: packed }
}

pub fn complete_graph(n: usize) -> Graph {
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_sorted_pairs(n, pairs)
}

/// Disjoint union; `b`'s vertices are shifted up by `a.num_vertices()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n;
    let pairs = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_sorted_pairs(a.n + b.n, pairs)
}

/// `g` together with `k` disjoint copies of `K4` or `K5`.
pub fn gadget_augment(g: &Graph, k: usize, gadget: Gadget) -> Graph {
    let copy = complete_graph(gadget.order());
    (0..k).fold(g.clone(), |acc, _| disjoint_union(&acc, &copy))
}

/// Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and kept when a uniform `[0, 1)` draw from a
/// `ChaCha8Rng` seeded with `seed` falls below `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_pairs(n, pairs))
}

/// Three triangles sharing the edge `{0, 1}` generalised to `pages`.
pub fn book_graph(pages: usize) -> Graph {
    let mut pairs = vec![(0, 1)];
    for p in 0..pages {
        pairs.push((0, p + 2));
        pairs.push((1, p + 2));
    }
    pairs.sort_unstable();
    Graph::from_sorted_pairs(pages + 2, pairs)
}
