//! Certified triangle covers and hypergraph transversals.
//!
//! Each strategy returns a [`CoverCertificate`]: the cover, the pieces it
//! was assembled from, an absolute size bound that holds unconditionally,
//! and a packing that lower-bounds the optimum. Whether a strategy's
//! density condition holds is reported as a [`ConditionStatus`], proven only
//! from bounds the certificate itself carries or from an oracle.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::acyclic::{solve_acyclic, DualPair};
use crate::cycle_breaking::{fvs_alg1, minimal_fes, FvsStep};
use crate::error::{Error, Result};
use crate::graph::{
    bipartite_cut_cover, enumerate_triangles, greedy_triangle_packing, irreducible_subgraph, EdgeId, Graph,
    PackingOrder, PackingWitness, Triangle,
};
use crate::hypergraph::{require_3_uniform, require_linear, triangle_hypergraph, HEdge, HVertex, Hypergraph};
use crate::oracle::{exact_nu_t, exact_tau_t, OracleBudget};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    Fvs,
    Fes,
    Bipartite,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Fvs, Strategy::Fes, Strategy::Bipartite];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Fvs => "fvs",
            Strategy::Fes => "fes",
            Strategy::Bipartite => "bipartite",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Strategy::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown strategy `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionStatus {
    ProvenTrue,
    ProvenFalse,
    Unknown,
    /// The ratio has a zero denominator (no triangles or no hyperedges).
    NotApplicable,
}

impl ConditionStatus {
    pub fn name(self) -> &'static str {
        match self {
            ConditionStatus::ProvenTrue => "true",
            ConditionStatus::ProvenFalse => "false",
            ConditionStatus::Unknown => "unknown",
            ConditionStatus::NotApplicable => "not-applicable",
        }
    }
}

/// The density conditions under which a cover is within twice the packing
/// number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    /// `ν_t / |𝒯| ≥ 1/3`.
    PackingPerTriangle,
    /// `ν_t / |E| ≥ 1/4`.
    PackingPerEdge,
    /// `|E| / |𝒯| ≥ 2` over the irreducible subgraph.
    EdgesPerTriangle,
    /// `ν / |ℰ| ≥ 1/3`.
    MatchingPerHyperedge,
    /// `|𝒱| / |ℰ| ≥ 2`.
    VerticesPerHyperedge,
}

impl ConditionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConditionKind::PackingPerTriangle => "packing-per-triangle",
            ConditionKind::PackingPerEdge => "packing-per-edge",
            ConditionKind::EdgesPerTriangle => "edges-per-triangle",
            ConditionKind::MatchingPerHyperedge => "matching-per-hyperedge",
            ConditionKind::VerticesPerHyperedge => "vertices-per-hyperedge",
        }
    }

    pub fn threshold(self) -> Rational {
        match self {
            ConditionKind::PackingPerTriangle | ConditionKind::MatchingPerHyperedge => Ratio::new(1, 3),
            ConditionKind::PackingPerEdge => Ratio::new(1, 4),
            ConditionKind::EdgesPerTriangle | ConditionKind::VerticesPerHyperedge => Ratio::from_integer(2),
        }
    }
}

/// A ratio known to lie in `[lower, upper]`, tested against a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition {
    pub kind: ConditionKind,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
    pub status: ConditionStatus,
}

impl Condition {
    /// `numerator ∈ [lo, hi]` over `denominator`.
    pub fn bounded(kind: ConditionKind, lo: usize, hi: usize, denominator: usize) -> Self {
        if denominator == 0 {
            return Self { kind, lower: None, upper: None, status: ConditionStatus::NotApplicable };
        }
        debug_assert!(lo <= hi);
        let lower = Ratio::new(lo as u64, denominator as u64);
        let upper = Ratio::new(hi as u64, denominator as u64);
        let t = kind.threshold();
        let status = if lower >= t {
            ConditionStatus::ProvenTrue
        } else if upper < t {
            ConditionStatus::ProvenFalse
        } else {
            ConditionStatus::Unknown
        };
        Self { kind, lower: Some(lower), upper: Some(upper), status }
    }

    pub fn exact(kind: ConditionKind, numerator: usize, denominator: usize) -> Self {
        Self::bounded(kind, numerator, numerator, denominator)
    }

    pub fn value(&self) -> Option<Rational> {
        (self.lower == self.upper).then_some(self.lower).flatten()
    }

    pub fn holds(&self) -> bool {
        self.status == ConditionStatus::ProvenTrue
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverCertificate {
    pub strategy: Strategy,
    /// Graph edge ids, or hypergraph vertex ids for [`hypergraph_cover`];
    /// ascending.
    pub cover: Vec<usize>,
    /// The feedback vertex set, or the one vertex picked from each
    /// feedback hyperedge.
    pub breaker: Vec<usize>,
    /// The feedback hyperedges (`fes` only).
    pub feedback_edges: Vec<HEdge>,
    /// Transversal/matching of what is left once the cycles are broken.
    pub residual: Option<DualPair>,
    /// Pairwise disjoint hyperedges (triangle ids for graphs); a lower
    /// bound on the packing number.
    pub packing: Vec<HEdge>,
    pub claimed_bound: Rational,
    pub trace: Vec<FvsStep>,
    pub conditions: Vec<Condition>,
    /// Sizes of every strategy evaluated, in evaluation order.
    pub compared: Vec<(Strategy, usize)>,
}

impl CoverCertificate {
    pub fn size(&self) -> usize {
        self.cover.len()
    }

    /// `|cover| ≤ 2 · |packing|`, which certifies `τ ≤ 2ν` for the instance.
    pub fn within_twice_packing(&self) -> bool {
        self.cover.len() <= 2 * self.packing.len()
    }

    pub fn condition(&self, kind: ConditionKind) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.kind == kind)
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify_graph(&self, g: &Graph) -> bool {
        let triangles = enumerate_triangles(g);
        let cover: BTreeSet<EdgeId> = self.cover.iter().copied().collect();
        let hits = triangles.iter().all(|t| t.edges.iter().any(|e| cover.contains(e)));
        let packing = self.packing.iter().map(|&i| triangles.get(i).copied()).collect::<Option<Vec<Triangle>>>();
        let disjoint = packing.is_some_and(|p| PackingWitness::new(p).is_ok());
        hits && disjoint
            && cover.len() == self.cover.len()
            && self.cover.iter().all(|&e| e < g.num_edges())
            && Ratio::from_integer(self.cover.len() as u64) <= self.claimed_bound
    }

    /// Re-checks the certificate against `h` from scratch.
    pub fn verify_hypergraph(&self, h: &Hypergraph) -> bool {
        let cover: BTreeSet<HVertex> = self.cover.iter().copied().collect();
        let hits = h.edges().all(|(_, m)| m.iter().any(|v| cover.contains(v)));
        let mut used = BTreeSet::new();
        let disjoint =
            self.packing.iter().all(|&e| h.edge(e).is_some_and(|m| m.iter().all(|&v| used.insert(v))));
        hits && disjoint
            && cover.len() == self.cover.len()
            && cover.iter().all(|&v| h.has_vertex(v))
            && Ratio::from_integer(self.cover.len() as u64) <= self.claimed_bound
    }
}

/// Transversal of a linear 3-uniform hypergraph built by one of the two
/// cycle-breaking routes.
struct Route {
    cover: Vec<usize>,
    breaker: Vec<usize>,
    feedback_edges: Vec<HEdge>,
    residual: DualPair,
    bound: Rational,
    trace: Vec<FvsStep>,
}

/// Feedback vertex set `𝒮`, then an exact transversal `ℛ` of `h ∖ 𝒮`.
fn fvs_route(h: &Hypergraph) -> Result<Route> {
    let fvs = fvs_alg1(h)?;
    let rest = h.delete_vertices(&fvs.removed_vertices)?;
    let residual = solve_acyclic(&rest)?;
    let cover: BTreeSet<usize> = fvs.removed_vertices.iter().chain(&residual.transversal).copied().collect();
    let bound = Ratio::new(h.num_edges() as u64, 3) + Ratio::from_integer(residual.size() as u64);
    Ok(Route {
        cover: cover.into_iter().collect(),
        breaker: fvs.removed_vertices,
        feedback_edges: Vec::new(),
        residual,
        bound,
        trace: fvs.trace,
    })
}

/// Minimal feedback edge set `ℱ`, an exact transversal `ℛ` of `h ∖ ℱ`,
/// and the least vertex of every `F ∈ ℱ`.
fn fes_route(h: &Hypergraph) -> Result<Route> {
    let fes = minimal_fes(h);
    let rest = h.delete_hyperedges(&fes.removed_hyperedges)?;
    let residual = solve_acyclic(&rest)?;
    let breaker: Vec<usize> = fes.removed_hyperedges.iter().map(|&f| h.edge(f).unwrap()[0]).collect();
    let cover: BTreeSet<usize> = breaker.iter().chain(&residual.transversal).copied().collect();
    let bound = Ratio::from_integer((residual.size() + fes.removed_hyperedges.len()) as u64);
    Ok(Route {
        cover: cover.into_iter().collect(),
        breaker,
        feedback_edges: fes.removed_hyperedges,
        residual,
        bound,
        trace: Vec::new(),
    })
}

/// `base` grown greedily, in id order, to a maximal matching of `h`.
fn extend_matching(h: &Hypergraph, base: &BTreeSet<HEdge>) -> Vec<HEdge> {
    let mut used: BTreeSet<HVertex> = base.iter().flat_map(|&e| h.edge(e).unwrap().to_vec()).collect();
    let mut out: BTreeSet<HEdge> = base.clone();
    for (id, m) in h.edges() {
        if !base.contains(&id) && m.iter().all(|v| !used.contains(v)) {
            used.extend(m.iter().copied());
            out.insert(id);
        }
    }
    out.into_iter().collect()
}

/// First of the longest packings.
fn largest(packings: impl Iterator<Item = Vec<HEdge>>) -> Vec<HEdge> {
    packings.fold(Vec::new(), |a, b| if b.len() > a.len() { b } else { a })
}

/// The three graph conditions from a packing lower bound and an upper
/// bound on `ν_t`.
fn graph_conditions(g: &Graph, nu_lower: usize, nu_upper: usize) -> Vec<Condition> {
    let t = enumerate_triangles(g).len();
    if t == 0 {
        return [ConditionKind::PackingPerTriangle, ConditionKind::PackingPerEdge, ConditionKind::EdgesPerTriangle]
            .into_iter()
            .map(|k| Condition::bounded(k, 0, 0, 0))
            .collect();
    }
    vec![
        Condition::bounded(ConditionKind::PackingPerTriangle, nu_lower, nu_upper, t),
        Condition::bounded(ConditionKind::PackingPerEdge, nu_lower, nu_upper, g.num_edges()),
        Condition::exact(ConditionKind::EdgesPerTriangle, irreducible_subgraph(g).num_edges(), t),
    ]
}

/// Cheap upper bound on `ν_t`: triangles are edge-disjoint inside the
/// irreducible subgraph, and `ν_t ≤ τ_t ≤ |cover|` for any cover.
fn nu_t_ceiling(g: &Graph, cover_size: usize) -> usize {
    let t = enumerate_triangles(g).len();
    t.min(irreducible_subgraph(g).num_edges() / 3).min(cover_size)
}

fn graph_certificate(g: &Graph, strategy: Strategy, route: Route) -> CoverCertificate {
    let h = triangle_hypergraph(g);
    let packing = extend_matching(&h, &route.residual.matching);
    let conditions = graph_conditions(g, packing.len(), nu_t_ceiling(g, route.cover.len()).max(packing.len()));
    let size = route.cover.len();
    CoverCertificate {
        strategy,
        cover: route.cover,
        breaker: route.breaker,
        feedback_edges: route.feedback_edges,
        residual: Some(route.residual),
        packing,
        claimed_bound: route.bound,
        trace: route.trace,
        conditions,
        compared: vec![(strategy, size)],
    }
}

/// Feedback vertex set of the triangle hypergraph plus an exact cover of
/// the acyclic rest. Size at most `|𝒯|/3 + ν(𝓗_G ∖ 𝒮)`.
pub fn cover_via_fvs(g: &Graph) -> CoverCertificate {
    let route = fvs_route(&triangle_hypergraph(g)).expect("triangle hypergraphs are linear and 3-uniform");
    graph_certificate(g, Strategy::Fvs, route)
}

/// Minimal feedback edge set of the triangle hypergraph, one edge per
/// feedback triangle, plus an exact cover of the acyclic rest. Edges on no
/// triangle are isolated in the hypergraph and never chosen, so this is the
/// same as working on the irreducible subgraph.
pub fn cover_via_fes(g: &Graph) -> CoverCertificate {
    let route = fes_route(&triangle_hypergraph(g)).expect("acyclic after removing a feedback edge set");
    graph_certificate(g, Strategy::Fes, route)
}

/// The edges left inside the sides of a locally optimal cut.
pub fn cover_via_bipartite(g: &Graph) -> CoverCertificate {
    let cover = bipartite_cut_cover(g);
    let packing: Vec<HEdge> = {
        let greedy = greedy_triangle_packing(g, PackingOrder::Canonical);
        let triangles = enumerate_triangles(g);
        greedy.triangles().iter().map(|t| triangles.binary_search(t).unwrap()).collect()
    };
    let conditions = graph_conditions(g, packing.len(), nu_t_ceiling(g, cover.len()).max(packing.len()));
    let size = cover.len();
    CoverCertificate {
        strategy: Strategy::Bipartite,
        cover,
        breaker: Vec::new(),
        feedback_edges: Vec::new(),
        residual: None,
        packing,
        claimed_bound: Ratio::from_integer(g.num_edges() as u64 / 2),
        trace: Vec::new(),
        conditions,
        compared: vec![(Strategy::Bipartite, size)],
    }
}

pub fn cover_with(g: &Graph, strategy: Strategy) -> CoverCertificate {
    match strategy {
        Strategy::Fvs => cover_via_fvs(g),
        Strategy::Fes => cover_via_fes(g),
        Strategy::Bipartite => cover_via_bipartite(g),
    }
}

/// Smallest of the three covers; ties go to the earlier strategy in
/// `fvs, fes, bipartite`. The returned certificate carries the largest of
/// the three packings and every strategy's size.
pub fn best_cover(g: &Graph) -> CoverCertificate {
    let all: Vec<CoverCertificate> = Strategy::ALL.into_iter().map(|s| cover_with(g, s)).collect();
    let compared: Vec<(Strategy, usize)> = all.iter().map(|c| (c.strategy, c.size())).collect();
    let packing = largest(all.iter().map(|c| c.packing.clone()));
    let mut best = all.into_iter().min_by_key(|c| c.size()).unwrap();
    let smallest = compared.iter().map(|c| c.1).min().unwrap();
    best.conditions = graph_conditions(g, packing.len(), nu_t_ceiling(g, smallest).max(packing.len()));
    best.packing = packing;
    best.compared = compared;
    best
}

/// Transversal of a linear 3-uniform hypergraph without isolated
/// vertices: the smaller of the two cycle-breaking routes (ties to the
/// feedback-vertex route).
pub fn hypergraph_cover(h: &Hypergraph) -> Result<CoverCertificate> {
    require_linear(h)?;
    require_3_uniform(h)?;
    if let Some(v) = h.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    let routes = [(Strategy::Fvs, fvs_route(h)?), (Strategy::Fes, fes_route(h)?)];
    let compared: Vec<(Strategy, usize)> = routes.iter().map(|(s, r)| (*s, r.cover.len())).collect();
    let packing = largest(routes.iter().map(|(_, r)| extend_matching(h, &r.residual.matching)));
    let [first, second] = routes;
    let (strategy, route) = if second.1.cover.len() < first.1.cover.len() { second } else { first };
    let e = h.num_edges();
    // three vertices per disjoint hyperedge, and any transversal bounds ν
    let ceiling = (h.num_vertices() / 3).min(route.cover.len()).max(packing.len());
    let conditions = vec![
        Condition::bounded(ConditionKind::MatchingPerHyperedge, packing.len(), ceiling, e),
        Condition::exact(ConditionKind::VerticesPerHyperedge, h.num_vertices(), e),
    ];
    Ok(CoverCertificate {
        strategy,
        cover: route.cover,
        breaker: route.breaker,
        feedback_edges: route.feedback_edges,
        residual: Some(route.residual),
        packing,
        claimed_bound: route.bound,
        trace: route.trace,
        conditions,
        compared,
    })
}

/// Ratios and condition statuses for a graph, optionally with exact
/// packing and cover numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_irreducible_edges: usize,
    pub n_triangles: usize,
    /// Largest packing found by the greedy and the three strategies.
    pub nu_lower: usize,
    /// Smallest of `|𝒯|`, `⌊|E_irr| / 3⌋` and the best cover size.
    pub nu_upper: usize,
    pub nu_exact: Option<usize>,
    pub tau_exact: Option<usize>,
    /// Size of [`best_cover`], an upper bound on `τ_t`.
    pub best_cover: usize,
    /// `|E| / |𝒯|` before removing edges on no triangle.
    pub raw_edges_per_triangle: Option<Rational>,
    pub cond_i: Condition,
    pub cond_ii: Condition,
    pub cond_iii: Condition,
}

impl ConditionReport {
    pub fn any_condition_holds(&self) -> bool {
        [self.cond_i, self.cond_ii, self.cond_iii].iter().any(Condition::holds)
    }
}

/// Condition report for `g`. With a budget, the exact packing and cover
/// numbers are computed and decide conditions (i) and (ii) outright.
pub fn condition_report(g: &Graph, oracle: Option<&OracleBudget>) -> Result<ConditionReport> {
    let best = best_cover(g);
    let greedy = greedy_triangle_packing(g, PackingOrder::Canonical).len();
    let nu_lower = best.packing.len().max(greedy);
    let nu_upper = nu_t_ceiling(g, best.size()).max(nu_lower);
    let (nu_exact, tau_exact) = match oracle {
        Some(budget) => (Some(exact_nu_t(g, budget)?.0), Some(exact_tau_t(g, budget)?.0)),
        None => (None, None),
    };
    let (lo, hi) = nu_exact.map_or((nu_lower, nu_upper), |nu| (nu, nu));
    let mut conds = graph_conditions(g, lo, hi).into_iter();
    let t = enumerate_triangles(g).len();
    Ok(ConditionReport {
        n_vertices: g.num_vertices(),
        n_edges: g.num_edges(),
        n_irreducible_edges: irreducible_subgraph(g).num_edges(),
        n_triangles: t,
        nu_lower,
        nu_upper,
        nu_exact,
        tau_exact,
        best_cover: best.size(),
        raw_edges_per_triangle: (t > 0).then(|| Ratio::new(g.num_edges() as u64, t as u64)),
        cond_i: conds.next().unwrap(),
        cond_ii: conds.next().unwrap(),
        cond_iii: conds.next().unwrap(),
    })
}
