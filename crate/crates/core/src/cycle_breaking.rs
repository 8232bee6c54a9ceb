//! Destroying every cycle of a hypergraph, by vertices or by hyperedges.
//!
//! [`fvs_alg1`] is the recursive feedback-vertex-set procedure for linear
//! 3-uniform hypergraphs: every step deletes some hyperedges and adds at
//! most a third as many vertices, so the result never exceeds `‖H‖ / 3`.
//! [`minimal_fes`] is the one-pass greedy that yields an inclusion-minimal
//! feedback edge set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::hypergraph::{
    components, find_cycle_through, hyperedges_on_cycles, require_3_uniform, require_linear,
    shortest_cycle, Cycle, Element, HEdge, HVertex, Hypergraph, Incidence, UnionFind,
};

/// Which branch of the recursion fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FvsRule {
    /// At most two hyperedges remain; nothing to add.
    Small,
    /// Hyperedges on no cycle are dropped.
    NotOnCycle,
    /// A vertex of degree at least three is taken.
    HighDegree,
    /// A degree-one vertex `v` with `e_1 = {v_1, v, v_2}` on a cycle: take
    /// `v_3`, drop `e_1, e_2, e_3`.
    DegreeOne,
    /// 2-regular, shortest cycle of length `k ≡ 0 (mod 3)`.
    CycleZero,
    /// `k ≡ 1 (mod 3)` with `f_1 ≠ f_3` after relabelling.
    CycleOneSplit,
    /// `k = 4` with `f_1 = f_3` and `f_2 = f_4`.
    CycleOneTwin,
    /// `k ≡ 2 (mod 3)`.
    CycleTwo,
}

impl FvsRule {
    pub fn name(self) -> &'static str {
        match self {
            FvsRule::Small => "small",
            FvsRule::NotOnCycle => "not-on-cycle",
            FvsRule::HighDegree => "high-degree",
            FvsRule::DegreeOne => "degree-one",
            FvsRule::CycleZero => "cycle-0-mod-3",
            FvsRule::CycleOneSplit => "cycle-1-mod-3",
            FvsRule::CycleOneTwin => "cycle-4-twin",
            FvsRule::CycleTwo => "cycle-2-mod-3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsStep {
    pub rule: FvsRule,
    /// Vertices added to the feedback set at this step.
    pub added: Vec<HVertex>,
    /// Hyperedges removed from the working hypergraph at this step.
    pub removed_edges: Vec<HEdge>,
    /// The cycle the step was based on, if any.
    pub cycle: Option<Cycle>,
    /// `‖H‖` before the step.
    pub edges_before: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsResult {
    pub removed_vertices: Vec<HVertex>,
    pub trace: Vec<FvsStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FesResult {
    pub removed_hyperedges: Vec<HEdge>,
}

/// True iff the hypergraph has no cycle (its incidence graph is a forest).
pub fn is_acyclic(h: &Hypergraph) -> bool {
    Incidence::new(h).is_forest()
}

/// Feedback vertex set of a linear 3-uniform hypergraph with at most
/// `⌊‖h‖ / 3⌋` vertices.
///
/// Rules are tried in listing order at every level, always picking the
/// least id. Hyperedges on no cycle are dropped in one batch; that is the
/// same as dropping them one at a time, since deleting a hyperedge never
/// puts another one on a cycle. Isolated vertices are never visited.
pub fn fvs_alg1(h: &Hypergraph) -> Result<FvsResult> {
    require_linear(h)?;
    require_3_uniform(h)?;
    let mut cur = h.without_isolated();
    let mut picked = BTreeSet::new();
    let mut trace = Vec::new();
    loop {
        cur = cur.without_isolated();
        let edges_before = cur.num_edges();
        let mut step = |rule, added: Vec<HVertex>, removed_edges: Vec<HEdge>, cycle| {
            picked.extend(added.iter().copied());
            trace.push(FvsStep { rule, added, removed_edges, cycle, edges_before });
        };
        if edges_before <= 2 {
            step(FvsRule::Small, vec![], vec![], None);
            break;
        }

        let on_cycle = hyperedges_on_cycles(&cur);
        let idle: Vec<HEdge> = cur.edge_ids().filter(|e| !on_cycle.contains(e)).collect();
        if !idle.is_empty() {
            cur = cur.delete_hyperedges(&idle)?;
            step(FvsRule::NotOnCycle, vec![], idle, None);
            continue;
        }

        let high = cur.vertices().find(|&v| cur.degree(v) >= 3);
        if let Some(s) = high {
            let gone = cur.incident(s).to_vec();
            cur = cur.delete_vertices(&[s])?;
            step(FvsRule::HighDegree, vec![s], gone, None);
            continue;
        }

        let leaf = cur.vertices().find(|&v| cur.degree(v) == 1);
        if let Some(v) = leaf {
            let e1 = cur.incident(v)[0];
            // every remaining hyperedge is on a cycle, and v (degree one) is
            // not on it, so the cycle reads v_1 e_1 v_2 e_2 v_3 ...
            let cycle = find_cycle_through(&cur, Element::Hyperedge(e1))?
                .expect("hyperedge on a cycle");
            let v3 = cycle.vertices[2];
            let gone = cycle.edges[..3].to_vec();
            cur = cur.delete_hyperedges(&gone)?;
            step(FvsRule::DegreeOne, vec![v3], gone, Some(cycle));
            continue;
        }

        // 2-regular from here on
        let cycle = shortest_cycle(&cur)?.expect("2-regular hypergraph has a cycle");
        let (rule, added, gone) = break_shortest_cycle(&cur, &cycle);
        cur = cur.delete_hyperedges(&gone)?;
        step(rule, added, gone, Some(cycle));
    }
    let removed_vertices: Vec<HVertex> = picked.into_iter().collect();
    debug_assert!(removed_vertices.len() * 3 <= h.num_edges());
    Ok(FvsResult { removed_vertices, trace })
}

/// The three shortest-cycle cases on a 2-regular linear 3-uniform
/// hypergraph. Returns the rule, the vertices to add and the hyperedges to
/// delete.
fn break_shortest_cycle(h: &Hypergraph, c: &Cycle) -> (FvsRule, Vec<HVertex>, Vec<HEdge>) {
    let k = c.len();
    // u_i: the third vertex of e_i; f_i: the other hyperedge through u_i
    let third: Vec<HVertex> = (0..k)
        .map(|i| {
            let (a, b) = (c.vertices[i], c.vertices[(i + 1) % k]);
            *h.edge(c.edges[i]).unwrap().iter().find(|&&x| x != a && x != b).unwrap()
        })
        .collect();
    let other: Vec<HEdge> = (0..k)
        .map(|i| *h.incident(third[i]).iter().find(|&&f| f != c.edges[i]).unwrap())
        .collect();

    // 1-based accessors under a rotation by `r`
    let at = |xs: &[usize], r: usize, i: usize| xs[(i - 1 + r) % k];
    let cycle_edges = c.edges.clone();

    match k % 3 {
        0 => {
            let added = (1..=k).filter(|i| i % 3 == 0).map(|i| at(&c.vertices, 0, i)).collect();
            (FvsRule::CycleZero, added, cycle_edges)
        }
        1 => {
            let f = |r, i| at(&other, r, i);
            if f(0, 1) != f(0, 3) || f(0, 2) != f(0, 4) {
                // relabel by rotating one step when only f_2 != f_4 holds
                let r = if f(0, 1) != f(0, 3) { 0 } else { 1 };
                let mut added = vec![at(&third, r, 1), at(&third, r, 3)];
                added.extend((4..=k).filter(|i| i % 3 == 0).map(|i| at(&c.vertices, r, i)));
                let mut gone = cycle_edges;
                gone.extend([f(r, 1), f(r, 3)]);
                (FvsRule::CycleOneSplit, added, gone)
            } else {
                assert_eq!(k, 4, "twin case only arises on a shortest 4-cycle");
                let added = vec![at(&third, 0, 2), at(&third, 0, 4)];
                let mut gone = cycle_edges;
                gone.extend([f(0, 1), f(0, 2)]);
                (FvsRule::CycleOneTwin, added, gone)
            }
        }
        _ => {
            let mut added = vec![at(&third, 0, 1)];
            added.extend((4..=k).filter(|i| i % 3 == 1).map(|i| at(&c.vertices, 0, i)));
            let mut gone = cycle_edges;
            gone.push(at(&other, 0, 1));
            (FvsRule::CycleTwo, added, gone)
        }
    }
}

/// Inclusion-minimal feedback edge set.
///
/// Starting from all hyperedges, each hyperedge in id order is dropped from
/// the set when the kept part stays acyclic with it added back. The kept
/// part is tracked with a union-find over vertices: a hyperedge joins
/// cleanly iff its vertices lie in pairwise different kept components.
pub fn minimal_fes(h: &Hypergraph) -> FesResult {
    let index: BTreeMap<HVertex, usize> = h.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut uf = UnionFind::new(index.len());
    let mut removed = Vec::new();
    for (id, members) in h.edges() {
        let mut roots: Vec<usize> = members.iter().map(|v| uf.find(index[v])).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() == members.len() {
            for w in roots.windows(2) {
                uf.union(w[0], w[1]);
            }
        } else {
            removed.push(id);
        }
    }
    FesResult { removed_hyperedges: removed }
}

/// `2|E| - |V'| + p` where `V'` are the non-isolated vertices and `p` the
/// number of components they form.
pub fn fes_size_bound(h: &Hypergraph) -> i64 {
    let trimmed = h.without_isolated();
    let p = components(&trimmed).len() as i64;
    2 * h.num_edges() as i64 - trimmed.num_vertices() as i64 + p
}
