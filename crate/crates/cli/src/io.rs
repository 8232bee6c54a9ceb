//! Plain-text graph and hypergraph files.
//!
//! One edge (`u v`) or hyperedge (`a b c ...`) per line, labels separated
//! by whitespace. `#` starts a comment; blank lines are skipped. Labels are
//! arbitrary tokens mapped to dense ids in order of first appearance.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;
use tricover_core::{EdgeId, Graph, HEdge, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected {expected} labels, found {found}")]
    Arity { line: usize, expected: String, found: usize },
    #[error("line {line}: self-loop at `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {{{a}, {b}}}, first given on line {first}")]
    DuplicateEdge { line: usize, a: String, b: String, first: usize },
    #[error("line {line}: label `{label}` repeated within one hyperedge")]
    RepeatedLabel { line: usize, label: String },
}

/// Content lines as `(line number, tokens)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

#[derive(Debug, Default)]
struct Labels {
    names: Vec<String>,
    ids: HashMap<String, usize>,
}

impl Labels {
    fn id(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        self.names.push(label.to_string());
        self.ids.insert(label.to_string(), self.names.len() - 1);
        self.names.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Label of every vertex id.
    pub labels: Vec<String>,
    /// Edge ids in the order their lines appeared.
    pub line_order: Vec<EdgeId>,
    /// Source line of every edge id.
    pub lines: Vec<usize>,
}

impl LabeledGraph {
    /// Labels `0..n` in decimal, edges in id order.
    pub fn from_graph(graph: Graph) -> Self {
        let labels = (0..graph.num_vertices()).map(|v| v.to_string()).collect();
        let m = graph.num_edges();
        Self { graph, labels, line_order: (0..m).collect(), lines: (1..=m).collect() }
    }

    pub fn edge_labels(&self, e: EdgeId) -> [String; 2] {
        let (u, v) = self.graph.endpoints(e);
        [self.labels[u].clone(), self.labels[v].clone()]
    }

    pub fn edge_by_labels(&self, a: &str, b: &str) -> Option<EdgeId> {
        let u = self.labels.iter().position(|l| l == a)?;
        let v = self.labels.iter().position(|l| l == b)?;
        self.graph.edge_id(u, v)
    }
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut labels = Labels::default();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 2 {
            return Err(ParseError::Arity { line, expected: "2".into(), found: tokens.len() });
        }
        if tokens[0] == tokens[1] {
            return Err(ParseError::SelfLoop { line, label: tokens[0].to_string() });
        }
        let (u, v) = (labels.id(tokens[0]), labels.id(tokens[1]));
        let key = (u.min(v), u.max(v));
        if let Some(&first) = seen.get(&key) {
            let (a, b) = (tokens[0].to_string(), tokens[1].to_string());
            return Err(ParseError::DuplicateEdge { line, a, b, first });
        }
        seen.insert(key, line);
        pairs.push((key, line));
    }
    let graph = Graph::new(labels.names.len(), pairs.iter().map(|p| p.0)).expect("checked while reading");
    let mut lines = vec![0; graph.num_edges()];
    let line_order = pairs
        .iter()
        .map(|&((u, v), line)| {
            let e = graph.edge_id(u, v).unwrap();
            lines[e] = line;
            e
        })
        .collect();
    Ok(LabeledGraph { graph, labels: labels.names, line_order, lines })
}

/// Re-parses to an identical [`LabeledGraph`] (lines renumbered from 1).
pub fn write_graph(g: &LabeledGraph) -> String {
    g.line_order.iter().map(|&e| g.edge_labels(e).join(" ") + "\n").collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub hypergraph: Hypergraph,
    pub labels: Vec<String>,
    /// Source line of every hyperedge id; ids follow line order.
    pub lines: Vec<usize>,
}

impl LabeledHypergraph {
    pub fn member_labels(&self, e: HEdge) -> Vec<String> {
        self.hypergraph.edge(e).unwrap().iter().map(|&v| self.labels[v].clone()).collect()
    }
}

/// Hyperedges with any positive number of distinct labels.
pub fn parse_hypergraph(text: &str) -> Result<LabeledHypergraph, ParseError> {
    let mut labels = Labels::default();
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (line, tokens) in content_lines(text) {
        let mut members = BTreeSet::new();
        for t in &tokens {
            if !members.insert(labels.id(t)) {
                return Err(ParseError::RepeatedLabel { line, label: t.to_string() });
            }
        }
        edges.push(members.into_iter().collect::<Vec<_>>());
        lines.push(line);
    }
    let hypergraph = Hypergraph::new(0..labels.names.len(), edges).expect("checked while reading");
    Ok(LabeledHypergraph { hypergraph, labels: labels.names, lines })
}

/// Like [`parse_hypergraph`] but every line must hold exactly three labels.
pub fn parse_3_uniform(text: &str) -> Result<LabeledHypergraph, ParseError> {
    if let Some((line, tokens)) = content_lines(text).find(|(_, t)| t.len() != 3) {
        return Err(ParseError::Arity { line, expected: "3".into(), found: tokens.len() });
    }
    parse_hypergraph(text)
}

/// Members are written in id order, which keeps first appearances in the
/// same order, so the output re-parses to an identical structure.
pub fn write_hypergraph(h: &LabeledHypergraph) -> String {
    h.hypergraph.edge_ids().map(|e| h.member_labels(e).join(" ") + "\n").collect()
}
