//! Hypergraphs with stable vertex and hyperedge ids, paths and cycles, and
//! the triangle hypergraph of a simple graph.
//!
//! Cycle questions are answered on the bipartite incidence graph, whose
//! nodes are the vertices and hyperedges and whose edges are the
//! memberships. A hypergraph cycle of length `k` is exactly an incidence
//! cycle of length `2k`, so incidence bridges and breadth-first search give
//! cycle membership and short cycles directly.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, Graph};

pub type HVertex = usize;
pub type HEdge = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: BTreeSet<HVertex>,
    edges: BTreeMap<HEdge, Vec<HVertex>>,
    incidence: BTreeMap<HVertex, Vec<HEdge>>,
}

/// A vertex or a hyperedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(HVertex),
    Hyperedge(HEdge),
}

/// `v_1 e_1 v_2 ... v_k e_k v_1` with `{v_i, v_{i+1}} ⊆ e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<HVertex>,
    pub edges: Vec<HEdge>,
}

/// `v_1 e_1 v_2 ... e_k v_{k+1}`; a lone vertex is a path of length 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<HVertex>,
    pub edges: Vec<HEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<HVertex>,
    pub edges: Vec<HEdge>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Distinct vertices, distinct hyperedges, consecutive incidence, and
    /// length at least 2.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let k = self.edges.len();
        if k < 2 || self.vertices.len() != k {
            return false;
        }
        if !all_distinct(&self.vertices) || !all_distinct(&self.edges) {
            return false;
        }
        (0..k).all(|i| match h.edge(self.edges[i]) {
            Some(e) => {
                e.binary_search(&self.vertices[i]).is_ok()
                    && e.binary_search(&self.vertices[(i + 1) % k]).is_ok()
            }
            None => false,
        })
    }
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let k = self.edges.len();
        if self.vertices.len() != k + 1 || !all_distinct(&self.vertices) || !all_distinct(&self.edges) {
            return false;
        }
        if !self.vertices.iter().all(|v| h.has_vertex(*v)) {
            return false;
        }
        (0..k).all(|i| match h.edge(self.edges[i]) {
            Some(e) => {
                e.binary_search(&self.vertices[i]).is_ok()
                    && e.binary_search(&self.vertices[i + 1]).is_ok()
            }
            None => false,
        })
    }
}

fn all_distinct(xs: &[usize]) -> bool {
    let set: BTreeSet<_> = xs.iter().collect();
    set.len() == xs.len()
}

impl Hypergraph {
    /// Hyperedges receive ids `0, 1, ...` in iteration order.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = HVertex>,
        E: IntoIterator<Item = Vec<HVertex>>,
    {
        Self::with_edge_ids(vertices, edges.into_iter().enumerate())
    }

    /// Vertex set is the union of the hyperedges.
    pub fn from_edges<E>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = Vec<HVertex>>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertices: Vec<_> = edges.iter().flatten().copied().collect();
        Self::new(vertices, edges)
    }

    pub fn with_edge_ids<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = HVertex>,
        E: IntoIterator<Item = (HEdge, Vec<HVertex>)>,
    {
        let vertices: BTreeSet<_> = vertices.into_iter().collect();
        let mut map = BTreeMap::new();
        for (id, mut members) in edges {
            members.sort_unstable();
            if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { edge: id, vertex: w[0] });
            }
            if let Some(&v) = members.iter().find(|v| !vertices.contains(v)) {
                return Err(Error::UnknownVertex(v));
            }
            if map.insert(id, members).is_some() {
                return Err(Error::DuplicateHyperedge(id));
            }
        }
        Ok(Self::assemble(vertices, map))
    }

    fn assemble(vertices: BTreeSet<HVertex>, edges: BTreeMap<HEdge, Vec<HVertex>>) -> Self {
        let mut incidence: BTreeMap<HVertex, Vec<HEdge>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&id, members) in &edges {
            for v in members {
                incidence.get_mut(v).expect("member is a vertex").push(id);
            }
        }
        Self { vertices, edges, incidence }
    }

    pub fn vertices(&self) -> impl Iterator<Item = HVertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (HEdge, &[HVertex])> + '_ {
        self.edges.iter().map(|(&id, m)| (id, m.as_slice()))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = HEdge> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: HEdge) -> Option<&[HVertex]> {
        self.edges.get(&id).map(Vec::as_slice)
    }

    pub fn has_vertex(&self, v: HVertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, id: HEdge) -> bool {
        self.edges.contains_key(&id)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// `‖H‖`, the number of hyperedges.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: HVertex) -> usize {
        self.incidence.get(&v).map_or(0, Vec::len)
    }

    /// Hyperedges containing `v`, ascending.
    pub fn incident(&self, v: HVertex) -> &[HEdge] {
        self.incidence.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = HVertex> + '_ {
        self.incidence.iter().filter(|(_, es)| es.is_empty()).map(|(&v, _)| v)
    }

    pub fn num_non_isolated(&self) -> usize {
        self.incidence.values().filter(|es| !es.is_empty()).count()
    }

    /// `H ∖ S`: drops the vertices and every hyperedge touching them.
    pub fn delete_vertices(&self, removed: &[HVertex]) -> Result<Self> {
        if let Some(&v) = removed.iter().find(|v| !self.has_vertex(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        let drop: BTreeSet<_> = removed.iter().copied().collect();
        let vertices = self.vertices.difference(&drop).copied().collect();
        let edges = self
            .edges
            .iter()
            .filter(|(_, m)| m.iter().all(|v| !drop.contains(v)))
            .map(|(&id, m)| (id, m.clone()))
            .collect();
        Ok(Self::assemble(vertices, edges))
    }

    /// `H ∖ F`: drops the hyperedges, keeps every vertex.
    pub fn delete_hyperedges(&self, removed: &[HEdge]) -> Result<Self> {
        if let Some(&e) = removed.iter().find(|e| !self.has_edge(**e)) {
            return Err(Error::UnknownHyperedge(e));
        }
        let drop: BTreeSet<_> = removed.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .filter(|(id, _)| !drop.contains(id))
            .map(|(&id, m)| (id, m.clone()))
            .collect();
        Ok(Self::assemble(self.vertices.clone(), edges))
    }

    pub fn without_isolated(&self) -> Self {
        let vertices = self.incidence.iter().filter(|(_, es)| !es.is_empty()).map(|(&v, _)| v).collect();
        Self::assemble(vertices, self.edges.clone())
    }

    /// The sub-hypergraph on the given hyperedges (and all vertices).
    pub fn restrict_to_edges(&self, keep: &BTreeSet<HEdge>) -> Self {
        let edges = self
            .edges
            .iter()
            .filter(|(id, _)| keep.contains(id))
            .map(|(&id, m)| (id, m.clone()))
            .collect();
        Self::assemble(self.vertices.clone(), edges)
    }
}

/// Vertices are the edge ids of `g`, hyperedges the edge triples of its
/// triangles (hyperedge `i` is the `i`-th triangle in canonical order).
pub fn triangle_hypergraph(g: &Graph) -> Hypergraph {
    let edges = enumerate_triangles(g)
        .into_iter()
        .enumerate()
        .map(|(i, t)| (i, t.edges.to_vec()))
        .collect();
    let h = Hypergraph::assemble((0..g.num_edges()).collect(), edges);
    debug_assert!(is_linear(&h) && is_k_uniform(&h, 3));
    h
}

pub fn is_k_uniform(h: &Hypergraph, k: usize) -> bool {
    h.edges.values().all(|m| m.len() == k)
}

pub fn is_linear(h: &Hypergraph) -> bool {
    linearity_violation(h).is_none()
}

/// First pair of hyperedges sharing two or more vertices.
pub fn linearity_violation(h: &Hypergraph) -> Option<(HEdge, HEdge)> {
    let mut seen: HashMap<(HVertex, HVertex), HEdge> = HashMap::new();
    for (&id, m) in &h.edges {
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if let Some(&other) = seen.get(&(m[i], m[j])) {
                    return Some((other, id));
                }
                seen.insert((m[i], m[j]), id);
            }
        }
    }
    None
}

pub fn require_linear(h: &Hypergraph) -> Result<()> {
    match linearity_violation(h) {
        Some((a, b)) => Err(Error::NotLinear(a, b)),
        None => Ok(()),
    }
}

pub fn require_3_uniform(h: &Hypergraph) -> Result<()> {
    match h.edges.iter().find(|(_, m)| m.len() != 3) {
        Some((&edge, m)) => Err(Error::NotUniform { edge, size: m.len() }),
        None => Ok(()),
    }
}

/// Connected components. Isolated vertices are singleton components;
/// components are ordered by least vertex, with vertex-less components
/// (empty hyperedges) last.
pub fn components(h: &Hypergraph) -> Vec<Component> {
    let index: HashMap<HVertex, usize> = h.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(h.vertices.len());
    for m in h.edges.values() {
        for w in m.windows(2) {
            uf.union(index[&w[0]], index[&w[1]]);
        }
    }
    let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
    let verts: Vec<HVertex> = h.vertices.iter().copied().collect();
    for (i, &v) in verts.iter().enumerate() {
        by_root
            .entry(uf.find(i))
            .or_insert_with(|| Component { vertices: Vec::new(), edges: Vec::new() })
            .vertices
            .push(v);
    }
    let mut empty = Vec::new();
    for (&id, m) in &h.edges {
        match m.first() {
            Some(v) => by_root.get_mut(&uf.find(index[v])).unwrap().edges.push(id),
            None => empty.push(Component { vertices: Vec::new(), edges: vec![id] }),
        }
    }
    let mut out: Vec<Component> = by_root.into_values().collect();
    out.sort_by_key(|c| c.vertices[0]);
    out.extend(empty);
    out
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Bipartite vertex/hyperedge incidence graph with dense node indices:
/// vertices first (ascending id), then hyperedges (ascending id).
pub(crate) struct Incidence {
    pub(crate) nodes: Vec<Element>,
    pub(crate) adj: Vec<Vec<usize>>,
    pub(crate) index: HashMap<Element, usize>,
}

impl Incidence {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        let nodes: Vec<Element> = h
            .vertices
            .iter()
            .map(|&v| Element::Vertex(v))
            .chain(h.edges.keys().map(|&e| Element::Hyperedge(e)))
            .collect();
        let index: HashMap<Element, usize> = nodes.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut adj = vec![Vec::new(); nodes.len()];
        for (&id, m) in &h.edges {
            let en = index[&Element::Hyperedge(id)];
            for v in m {
                let vn = index[&Element::Vertex(*v)];
                adj[en].push(vn);
                adj[vn].push(en);
            }
        }
        // vertex nodes precede edge nodes and both are inserted ascending,
        // so each list is already sorted by node index
        Self { nodes, adj, index }
    }

    pub(crate) fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.nodes.len());
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if a < b && !uf.union(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// `on_cycle[i]` is true when node `i` has an incident non-bridge, i.e.
    /// lies on some cycle. Iterative lowlink search.
    pub(crate) fn nodes_on_cycles(&self) -> Vec<bool> {
        let n = self.nodes.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_cycle = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (node, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                        // back edge: both ends lie on a cycle
                        on_cycle[u] = true;
                        on_cycle[w] = true;
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] <= disc[parent] {
                            // tree edge parent-u is not a bridge
                            on_cycle[u] = true;
                            on_cycle[parent] = true;
                        }
                    }
                }
            }
        }
        on_cycle
    }

    /// Breadth-first shortest path `from -> to` avoiding `banned`, with
    /// neighbours expanded in index order.
    pub(crate) fn shortest_path(&self, from: usize, to: usize, banned: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.nodes.len()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if w != banned && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Shortest incidence cycle through node `x` as the node sequence
    /// `x, a, ..., b`; ties go to the lexicographically first neighbour pair.
    pub(crate) fn shortest_cycle_through(&self, x: usize) -> Option<Vec<usize>> {
        let nbrs = &self.adj[x];
        let mut best: Option<Vec<usize>> = None;
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if let Some(path) = self.shortest_path(nbrs[i], nbrs[j], x) {
                    if best.as_ref().is_none_or(|b| path.len() + 1 < b.len()) {
                        let mut cyc = vec![x];
                        cyc.extend(path);
                        best = Some(cyc);
                    }
                }
            }
        }
        best
    }

    /// Converts an incidence cycle (alternating node sequence, closing back
    /// to its first node) into a hypergraph cycle starting at that node.
    pub(crate) fn to_cycle(&self, seq: &[usize]) -> Cycle {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        match self.nodes[seq[0]] {
            Element::Vertex(_) => {
                for (i, &n) in seq.iter().enumerate() {
                    match self.nodes[n] {
                        Element::Vertex(v) if i % 2 == 0 => vertices.push(v),
                        Element::Hyperedge(e) if i % 2 == 1 => edges.push(e),
                        _ => unreachable!("incidence sequences alternate"),
                    }
                }
            }
            Element::Hyperedge(_) => {
                // seq = e1, v2, e2, v3, ..., e_k, v1 ; rotate v1 to the front
                let last = *seq.last().unwrap();
                if let Element::Vertex(v1) = self.nodes[last] {
                    vertices.push(v1);
                }
                for (i, &n) in seq.iter().enumerate() {
                    match self.nodes[n] {
                        Element::Hyperedge(e) if i % 2 == 0 => edges.push(e),
                        Element::Vertex(v) if i % 2 == 1 && n != last => vertices.push(v),
                        Element::Vertex(_) => {}
                        _ => unreachable!("incidence sequences alternate"),
                    }
                }
            }
        }
        Cycle { vertices, edges }
    }
}

/// Some cycle through `element`: for a hyperedge, a cycle using it; for a
/// vertex, a cycle whose vertex sequence passes through it. The element
/// comes first in the returned cycle. Among the shortest such cycles the
/// first found by ordered breadth-first search is returned.
pub fn find_cycle_through(h: &Hypergraph, element: Element) -> Result<Option<Cycle>> {
    require_linear(h)?;
    match element {
        Element::Vertex(v) if !h.has_vertex(v) => return Err(Error::UnknownVertex(v)),
        Element::Hyperedge(e) if !h.has_edge(e) => return Err(Error::UnknownHyperedge(e)),
        _ => {}
    }
    let inc = Incidence::new(h);
    let x = inc.index[&element];
    Ok(inc.shortest_cycle_through(x).map(|seq| inc.to_cycle(&seq)))
}

/// Shortest path between two vertices, if connected.
pub fn shortest_path(h: &Hypergraph, from: HVertex, to: HVertex) -> Result<Option<Path>> {
    for v in [from, to] {
        if !h.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let inc = Incidence::new(h);
    let (a, b) = (inc.index[&Element::Vertex(from)], inc.index[&Element::Vertex(to)]);
    Ok(inc.shortest_path(a, b, usize::MAX).map(|seq| {
        let mut path = Path { vertices: Vec::new(), edges: Vec::new() };
        for n in seq {
            match inc.nodes[n] {
                Element::Vertex(v) => path.vertices.push(v),
                Element::Hyperedge(e) => path.edges.push(e),
            }
        }
        path
    }))
}

/// Hyperedges lying on at least one cycle.
pub fn hyperedges_on_cycles(h: &Hypergraph) -> BTreeSet<HEdge> {
    let inc = Incidence::new(h);
    inc.nodes_on_cycles()
        .into_iter()
        .zip(&inc.nodes)
        .filter_map(|(on, node)| match node {
            Element::Hyperedge(e) if on => Some(*e),
            _ => None,
        })
        .collect()
}

/// A minimum-length cycle, or `None` for acyclic input.
///
/// Ties are broken by the ascending list of hyperedge ids, then by the
/// vertex sequence. The cycle starts at its least hyperedge `e_1`, and `v_1`
/// is the smaller of the two cycle vertices on `e_1`.
pub fn shortest_cycle(h: &Hypergraph) -> Result<Option<Cycle>> {
    require_linear(h)?;
    let inc = Incidence::new(h);
    let on_cycle = inc.nodes_on_cycles();
    let girth = h
        .edge_ids()
        .filter(|e| on_cycle[inc.index[&Element::Hyperedge(*e)]])
        .filter_map(|e| inc.shortest_cycle_through(inc.index[&Element::Hyperedge(e)]))
        .map(|seq| seq.len() / 2)
        .min();
    let Some(girth) = girth else {
        return Ok(None);
    };
    for first in h.edge_ids() {
        if !on_cycle[inc.index[&Element::Hyperedge(first)]] {
            continue;
        }
        let keep: BTreeSet<HEdge> = h.edge_ids().filter(|&e| e >= first).collect();
        let sub = h.restrict_to_edges(&keep);
        if let Some(c) = least_cycle_through(&sub, first, girth) {
            return Ok(Some(c));
        }
    }
    unreachable!("a cycle of length {girth} exists")
}

/// Least (by sorted hyperedge ids, then vertex sequence) cycle of exactly
/// `len` hyperedges through `first`, by depth-first enumeration pruned with
/// breadth-first distances back to `first`.
fn least_cycle_through(h: &Hypergraph, first: HEdge, len: usize) -> Option<Cycle> {
    let inc = Incidence::new(h);
    let start = inc.index[&Element::Hyperedge(first)];
    let dist = bfs_distances(&inc, start);
    if inc.shortest_cycle_through(start)?.len() / 2 != len {
        return None;
    }
    let mut best: Option<(Vec<HEdge>, Cycle)> = None;
    let mut path = vec![start];
    let mut used = vec![false; inc.nodes.len()];
    used[start] = true;
    enumerate_closed(&inc, &dist, 2 * len, &mut path, &mut used, &mut |seq| {
        let cycle = normalise(inc.to_cycle(seq));
        let mut key = cycle.edges.clone();
        key.sort_unstable();
        let better = match &best {
            None => true,
            Some((k, c)) => (&key, &cycle.vertices) < (k, &c.vertices),
        };
        if better {
            best = Some((key, cycle));
        }
    });
    best.map(|(_, c)| c)
}

fn bfs_distances(inc: &Incidence, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; inc.nodes.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &inc.adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn enumerate_closed(
    inc: &Incidence,
    dist: &[usize],
    target: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    let u = *path.last().unwrap();
    let start = path[0];
    for &w in &inc.adj[u] {
        if w == start && path.len() == target {
            visit(path);
            continue;
        }
        if used[w] || dist[w] == usize::MAX || path.len() + dist[w] > target {
            continue;
        }
        used[w] = true;
        path.push(w);
        enumerate_closed(inc, dist, target, path, used, visit);
        path.pop();
        used[w] = false;
    }
}

/// Rotates so the least hyperedge is `e_1` and orients so that `v_1 < v_2`.
fn normalise(c: Cycle) -> Cycle {
    let k = c.edges.len();
    let pos = (0..k).min_by_key(|&i| c.edges[i]).unwrap();
    let forward = Cycle {
        vertices: (0..k).map(|i| c.vertices[(pos + i) % k]).collect(),
        edges: (0..k).map(|i| c.edges[(pos + i) % k]).collect(),
    };
    if forward.vertices[0] < forward.vertices[1 % k] {
        return forward;
    }
    // reversed: e_1 stays first; its endpoints swap roles
    let vertices = (0..k).map(|i| forward.vertices[(k + 1 - i) % k]).collect();
    let edges = std::iter::once(forward.edges[0])
        .chain((1..k).map(|i| forward.edges[k - i]))
        .collect();
    Cycle { vertices, edges }
}
