//! Exact minimum transversal and maximum matching of acyclic hypergraphs.
//!
//! On an acyclic hypergraph the incidence graph is a forest. Rooting every
//! tree at its least vertex, hyperedges are processed deepest first; a
//! hyperedge not yet hit contributes its parent vertex to the transversal
//! and itself to the matching. The two sets always have equal size, which
//! certifies both as optimal.

use std::collections::{BTreeSet, VecDeque};

use crate::cycle_breaking::is_acyclic;
use crate::error::{Error, Result};
use crate::hypergraph::{Element, HEdge, HVertex, Hypergraph, Incidence};

/// Rooted forest over the incidence graph of an acyclic hypergraph,
/// without isolated vertices.
#[derive(Debug, Clone)]
pub struct IncidenceForest {
    nodes: Vec<Element>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    roots: Vec<usize>,
}

impl IncidenceForest {
    pub fn num_trees(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> impl Iterator<Item = Element> + '_ {
        self.roots.iter().map(|&r| self.nodes[r])
    }

    pub fn nodes(&self) -> &[Element] {
        &self.nodes
    }

    pub fn num_vertex_nodes(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Element::Vertex(_))).count()
    }

    pub fn num_edge_nodes(&self) -> usize {
        self.nodes.len() - self.num_vertex_nodes()
    }

    fn position(&self, x: Element) -> Option<usize> {
        self.nodes.iter().position(|&n| n == x)
    }

    pub fn parent(&self, x: Element) -> Option<Element> {
        self.position(x).and_then(|i| self.parent[i]).map(|p| self.nodes[p])
    }

    pub fn depth(&self, x: Element) -> Option<usize> {
        self.position(x).map(|i| self.depth[i])
    }
}

/// Minimum transversal and maximum matching of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub transversal: BTreeSet<HVertex>,
    pub matching: BTreeSet<HEdge>,
    /// Each matched hyperedge with the one transversal vertex it contains.
    pub assignment: Vec<(HEdge, HVertex)>,
}

impl DualPair {
    pub fn size(&self) -> usize {
        self.transversal.len()
    }

    /// Checks the duality certificate against `h`: the transversal hits
    /// every hyperedge, the matching is pairwise disjoint, and the sizes
    /// agree.
    pub fn certifies(&self, h: &Hypergraph) -> bool {
        let hits = h.edges().all(|(_, m)| m.iter().any(|v| self.transversal.contains(v)));
        let mut used = BTreeSet::new();
        let disjoint = self.matching.iter().all(|&e| match h.edge(e) {
            Some(m) => m.iter().all(|&v| used.insert(v)),
            None => false,
        });
        hits && disjoint && self.transversal.len() == self.matching.len()
    }
}

pub fn forest_decompose(h: &Hypergraph) -> Result<IncidenceForest> {
    if !is_acyclic(h) {
        return Err(Error::Cyclic);
    }
    let inc = Incidence::new(&h.without_isolated());
    let n = inc.nodes.len();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    // vertex nodes come first in index order, so each root is the least
    // vertex of its component
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for &w in &inc.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(IncidenceForest { nodes: inc.nodes, parent, depth, roots })
}

pub fn solve_acyclic(h: &Hypergraph) -> Result<DualPair> {
    if let Some((id, _)) = h.edges().find(|(_, m)| m.is_empty()) {
        return Err(Error::EmptyHyperedge(id));
    }
    let forest = forest_decompose(h)?;
    let mut order: Vec<(usize, HEdge, usize)> = forest
        .nodes
        .iter()
        .enumerate()
        .filter_map(|(i, n)| match n {
            Element::Hyperedge(e) => Some((forest.depth[i], *e, i)),
            Element::Vertex(_) => None,
        })
        .collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut transversal = BTreeSet::new();
    let mut matching = BTreeSet::new();
    let mut assignment = Vec::new();
    for (_, e, i) in order {
        let members = h.edge(e).unwrap();
        if members.iter().any(|v| transversal.contains(v)) {
            continue;
        }
        let Some(Element::Vertex(up)) = forest.parent[i].map(|p| forest.nodes[p]) else {
            unreachable!("non-empty hyperedges hang below a vertex root");
        };
        transversal.insert(up);
        matching.insert(e);
        assignment.push((e, up));
    }
    assignment.sort_unstable();
    Ok(DualPair { transversal, matching, assignment })
}
