//! Exact reference values by exhaustive and branch-and-bound search, plus
//! Steiner triple systems and the Fano plane.
//!
//! Everything here is exponential in the worst case and guarded by an
//! [`OracleBudget`]. Running out of budget is an error, never a guess.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{complete_graph, enumerate_triangles, EdgeId, Graph, PackingWitness};
use crate::hypergraph::{Element, HEdge, HVertex, Hypergraph, Incidence, UnionFind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest accepted `|E|` (graph oracles) or `|ℰ|` (hypergraph oracles).
    pub max_edges: usize,
    /// Search nodes visited before giving up.
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl OracleBudget {
    pub fn graph_default() -> Self {
        Self { max_edges: 40, max_nodes: 20_000_000, time_cap: Duration::from_secs(60) }
    }

    pub fn hypergraph_default() -> Self {
        Self { max_edges: 14, ..Self::graph_default() }
    }

    pub fn with_max_edges(self, max_edges: usize) -> Self {
        Self { max_edges, ..self }
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self::graph_default()
    }
}

struct Meter {
    nodes: u64,
    max_nodes: u64,
    started: Instant,
    time_cap: Duration,
}

impl Meter {
    fn new(size: usize, what: &str, budget: &OracleBudget) -> Result<Self> {
        if size > budget.max_edges {
            return Err(Error::BudgetExceeded(format!(
                "{what} has size {size}, oracle cap is {}",
                budget.max_edges
            )));
        }
        Ok(Self { nodes: 0, max_nodes: budget.max_nodes, started: Instant::now(), time_cap: budget.time_cap })
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(format!("search passed {} nodes", self.max_nodes)));
        }
        if self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.time_cap {
            return Err(Error::BudgetExceeded(format!("search ran past {:?}", self.time_cap)));
        }
        Ok(())
    }
}

/// Splits set indices into groups that share no element, transitively.
fn independent_groups(sets: &[Vec<usize>], universe: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(universe);
    for s in sets {
        for w in s.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, s) in sets.iter().enumerate() {
        let key = s.first().map_or(universe + i, |&x| uf.find(x));
        groups.entry(key).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Largest pairwise disjoint subfamily (indices ascending).
fn max_packing(sets: &[Vec<usize>], universe: usize, meter: &mut Meter) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for group in independent_groups(sets, universe) {
        let local: Vec<&[usize]> = group.iter().map(|&i| sets[i].as_slice()).collect();
        let mut best = greedy_packing(&local, universe);
        let mut used = vec![false; universe];
        packing_search(&local, 0, &mut used, &mut Vec::new(), &mut best, meter)?;
        out.extend(best.into_iter().map(|j| group[j]));
    }
    out.sort_unstable();
    Ok(out)
}

fn greedy_packing(sets: &[&[usize]], universe: usize) -> Vec<usize> {
    let mut used = vec![false; universe];
    let mut chosen = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        if s.iter().all(|&x| !used[x]) {
            s.iter().for_each(|&x| used[x] = true);
            chosen.push(i);
        }
    }
    chosen
}

fn packing_search(
    sets: &[&[usize]],
    from: usize,
    used: &mut [bool],
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    let open: Vec<usize> = (from..sets.len()).filter(|&i| sets[i].iter().all(|&x| !used[x])).collect();
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    let Some(&first) = open.first() else {
        return Ok(());
    };
    // bound: each further set needs its own fresh elements
    let mut fresh = vec![false; used.len()];
    open.iter().flat_map(|&i| sets[i]).for_each(|&x| fresh[x] = true);
    let fresh = fresh.iter().filter(|&&f| f).count();
    let smallest = open.iter().map(|&i| sets[i].len()).min().unwrap().max(1);
    if cur.len() + open.len().min(fresh / smallest) <= best.len() {
        return Ok(());
    }
    sets[first].iter().for_each(|&x| used[x] = true);
    cur.push(first);
    packing_search(sets, first + 1, used, cur, best, meter)?;
    cur.pop();
    sets[first].iter().for_each(|&x| used[x] = false);
    packing_search(sets, first + 1, used, cur, best, meter)
}

/// Smallest element set meeting every set (ascending). Every set must be
/// non-empty.
fn min_hitting_set(sets: &[Vec<usize>], universe: usize, meter: &mut Meter) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for group in independent_groups(sets, universe) {
        let local: Vec<&[usize]> = group.iter().map(|&i| sets[i].as_slice()).collect();
        let mut best = greedy_hitting_set(&local, universe);
        let mut state = HitState { chosen: vec![false; universe], banned: vec![false; universe], cur: Vec::new() };
        hitting_search(&local, &mut state, &mut best, meter)?;
        out.extend(best);
    }
    out.sort_unstable();
    Ok(out)
}

fn greedy_hitting_set(sets: &[&[usize]], universe: usize) -> Vec<usize> {
    let mut hit = vec![false; sets.len()];
    let mut chosen = Vec::new();
    while hit.iter().any(|&h| !h) {
        let mut count = vec![0usize; universe];
        for (s, _) in sets.iter().zip(&hit).filter(|(_, &h)| !h) {
            s.iter().for_each(|&x| count[x] += 1);
        }
        let x = (0..universe).max_by_key(|&x| (count[x], std::cmp::Reverse(x))).unwrap();
        chosen.push(x);
        for (s, h) in sets.iter().zip(hit.iter_mut()) {
            *h |= s.contains(&x);
        }
    }
    chosen
}

struct HitState {
    chosen: Vec<bool>,
    banned: Vec<bool>,
    cur: Vec<usize>,
}

fn hitting_search(sets: &[&[usize]], st: &mut HitState, best: &mut Vec<usize>, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    let open: Vec<&[usize]> = sets.iter().copied().filter(|s| s.iter().all(|&x| !st.chosen[x])).collect();
    if open.is_empty() {
        if st.cur.len() < best.len() {
            *best = st.cur.clone();
        }
        return Ok(());
    }
    // bound: open sets with disjoint allowed elements need distinct hitters
    let mut taken = vec![false; st.chosen.len()];
    let mut lower = 0;
    let mut pick: Option<Vec<usize>> = None;
    for s in &open {
        let allowed: Vec<usize> = s.iter().copied().filter(|&x| !st.banned[x]).collect();
        if allowed.is_empty() {
            return Ok(());
        }
        if allowed.iter().all(|&x| !taken[x]) {
            allowed.iter().for_each(|&x| taken[x] = true);
            lower += 1;
        }
        if pick.as_ref().is_none_or(|p| allowed.len() < p.len()) {
            pick = Some(allowed);
        }
    }
    if st.cur.len() + lower >= best.len() {
        return Ok(());
    }
    let pick = pick.unwrap();
    for &x in &pick {
        st.chosen[x] = true;
        st.cur.push(x);
        hitting_search(sets, st, best, meter)?;
        st.cur.pop();
        st.chosen[x] = false;
        // later branches may assume x is out
        st.banned[x] = true;
    }
    pick.iter().for_each(|&x| st.banned[x] = false);
    Ok(())
}

/// Maximum triangle packing.
pub fn exact_nu_t(g: &Graph, budget: &OracleBudget) -> Result<(usize, PackingWitness)> {
    let mut meter = Meter::new(g.num_edges(), "graph", budget)?;
    let triangles = enumerate_triangles(g);
    let sets: Vec<Vec<usize>> = triangles.iter().map(|t| t.edges.to_vec()).collect();
    let picked = max_packing(&sets, g.num_edges(), &mut meter)?;
    let witness = PackingWitness::new(picked.into_iter().map(|i| triangles[i]).collect())?;
    Ok((witness.len(), witness))
}

/// Minimum triangle cover (edge ids ascending).
pub fn exact_tau_t(g: &Graph, budget: &OracleBudget) -> Result<(usize, Vec<EdgeId>)> {
    let mut meter = Meter::new(g.num_edges(), "graph", budget)?;
    let sets: Vec<Vec<usize>> = enumerate_triangles(g).iter().map(|t| t.edges.to_vec()).collect();
    let cover = min_hitting_set(&sets, g.num_edges(), &mut meter)?;
    Ok((cover.len(), cover))
}

/// Hyperedges rewritten over dense vertex indices, with the inverse map.
fn dense(h: &Hypergraph) -> (Vec<HEdge>, Vec<Vec<usize>>, Vec<HVertex>) {
    let verts: Vec<HVertex> = h.vertices().collect();
    let index: BTreeMap<HVertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let (ids, sets) = h.edges().map(|(id, m)| (id, m.iter().map(|v| index[v]).collect())).unzip();
    (ids, sets, verts)
}

/// Maximum matching (hyperedge ids ascending).
pub fn exact_nu(h: &Hypergraph, budget: &OracleBudget) -> Result<(usize, Vec<HEdge>)> {
    let mut meter = Meter::new(h.num_edges(), "hypergraph", budget)?;
    let (ids, sets, verts) = dense(h);
    let picked = max_packing(&sets, verts.len(), &mut meter)?;
    Ok((picked.len(), picked.into_iter().map(|i| ids[i]).collect()))
}

/// Minimum transversal (vertex ids ascending).
pub fn exact_tau(h: &Hypergraph, budget: &OracleBudget) -> Result<(usize, Vec<HVertex>)> {
    let mut meter = Meter::new(h.num_edges(), "hypergraph", budget)?;
    if let Some((id, _)) = h.edges().find(|(_, m)| m.is_empty()) {
        return Err(Error::EmptyHyperedge(id));
    }
    let (_, sets, verts) = dense(h);
    let hit = min_hitting_set(&sets, verts.len(), &mut meter)?;
    Ok((hit.len(), hit.into_iter().map(|i| verts[i]).collect()))
}

/// Hyperedges of some shortest cycle, or `None` when `h` is acyclic.
fn some_cycle(h: &Hypergraph) -> Option<Vec<HEdge>> {
    let inc = Incidence::new(h);
    let on = inc.nodes_on_cycles();
    let x = (0..inc.nodes.len()).find(|&i| on[i] && matches!(inc.nodes[i], Element::Hyperedge(_)))?;
    let seq = inc.shortest_cycle_through(x)?;
    Some(
        seq.iter()
            .filter_map(|&n| match inc.nodes[n] {
                Element::Hyperedge(e) => Some(e),
                Element::Vertex(_) => None,
            })
            .collect(),
    )
}

/// Iterative deepening: some element of `candidates(cycle)` must be
/// removed for every cycle, so branching over them is complete.
fn min_breaker<F, D>(h: &Hypergraph, meter: &mut Meter, candidates: F, delete: D) -> Result<Vec<usize>>
where
    F: Fn(&Hypergraph, &[HEdge]) -> Vec<usize>,
    D: Fn(&Hypergraph, usize) -> Hypergraph,
{
    fn go<F, D>(h: &Hypergraph, depth: usize, meter: &mut Meter, cand: &F, del: &D) -> Result<Option<Vec<usize>>>
    where
        F: Fn(&Hypergraph, &[HEdge]) -> Vec<usize>,
        D: Fn(&Hypergraph, usize) -> Hypergraph,
    {
        meter.tick()?;
        let Some(cycle) = some_cycle(h) else {
            return Ok(Some(Vec::new()));
        };
        if depth == 0 {
            return Ok(None);
        }
        for x in cand(h, &cycle) {
            if let Some(mut rest) = go(&del(h, x), depth - 1, meter, cand, del)? {
                rest.push(x);
                return Ok(Some(rest));
            }
        }
        Ok(None)
    }
    for depth in 0.. {
        if let Some(mut found) = go(h, depth, meter, &candidates, &delete)? {
            found.sort_unstable();
            return Ok(found);
        }
    }
    unreachable!("deleting everything leaves no cycle")
}

/// Minimum feedback vertex set (ascending).
pub fn exact_min_fvs(h: &Hypergraph, budget: &OracleBudget) -> Result<(usize, Vec<HVertex>)> {
    let mut meter = Meter::new(h.num_edges(), "hypergraph", budget)?;
    let found = min_breaker(
        h,
        &mut meter,
        |h, cycle| {
            // deleting any vertex of a cycle hyperedge kills that hyperedge
            let mut vs: Vec<HVertex> = cycle.iter().flat_map(|&e| h.edge(e).unwrap().to_vec()).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        },
        |h, v| h.delete_vertices(&[v]).expect("candidate is a vertex"),
    )?;
    Ok((found.len(), found))
}

/// Minimum feedback edge set (ascending).
pub fn exact_min_fes(h: &Hypergraph, budget: &OracleBudget) -> Result<(usize, Vec<HEdge>)> {
    let mut meter = Meter::new(h.num_edges(), "hypergraph", budget)?;
    let found = min_breaker(
        h,
        &mut meter,
        |_, cycle| {
            let mut es = cycle.to_vec();
            es.sort_unstable();
            es
        },
        |h, e| h.delete_hyperedges(&[e]).expect("candidate is a hyperedge"),
    )?;
    Ok((found.len(), found))
}

fn require_steiner_order(n: usize) -> Result<()> {
    if n < 3 || !matches!(n % 6, 1 | 3) {
        return Err(Error::NoSteinerSystem(n));
    }
    Ok(())
}

/// Triples of a Steiner triple system on `0..n`, each ascending, sorted.
///
/// `n ≡ 3 (mod 6)` uses the Bose construction and `n ≡ 1 (mod 6)` the
/// Skolem construction; both pair `Z_m × Z_3` with a commutative
/// quasigroup on `Z_m`.
pub fn steiner_triples(n: usize) -> Result<Vec<[usize; 3]>> {
    require_steiner_order(n)?;
    let mut out = Vec::with_capacity(n * (n - 1) / 6);
    if n % 6 == 3 {
        let m = n / 3;
        // idempotent: x∘x = x, since (m + 1) / 2 inverts 2 mod m
        let op = |x: usize, y: usize| (x + y) * (m + 1) / 2 % m;
        let p = |x: usize, i: usize| (i % 3) * m + x;
        for x in 0..m {
            out.push([p(x, 0), p(x, 1), p(x, 2)]);
        }
        for i in 0..3 {
            for x in 0..m {
                for y in x + 1..m {
                    out.push([p(x, i), p(y, i), p(op(x, y), i + 1)]);
                }
            }
        }
    } else {
        let t = n / 6;
        let m = 2 * t;
        // half-idempotent: x∘x = x mod t
        let op = |x: usize, y: usize| {
            let s = (x + y) % m;
            if s.is_multiple_of(2) {
                s / 2
            } else {
                (s - 1) / 2 + t
            }
        };
        let p = |x: usize, i: usize| (i % 3) * m + x;
        let inf = n - 1;
        for x in 0..t {
            out.push([p(x, 0), p(x, 1), p(x, 2)]);
        }
        for i in 0..3 {
            for x in 0..t {
                out.push([inf, p(t + x, i), p(x, i + 1)]);
            }
        }
        for i in 0..3 {
            for x in 0..m {
                for y in x + 1..m {
                    out.push([p(x, i), p(y, i), p(op(x, y), i + 1)]);
                }
            }
        }
    }
    for t in &mut out {
        t.sort_unstable();
    }
    out.sort_unstable();
    Ok(out)
}

/// A decomposition of `K_n` into edge-disjoint triangles.
pub fn steiner_triple_system(n: usize) -> Result<PackingWitness> {
    let triples = steiner_triples(n)?;
    let kn = complete_graph(n);
    let triangles = triples.iter().map(|&[a, b, c]| kn.triangle(a, b, c).expect("K_n has every triangle")).collect();
    PackingWitness::new(triangles)
}

/// The projective plane of order two on points `0..7`.
pub fn fano_plane() -> Hypergraph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    Hypergraph::from_edges(lines.iter().map(|l| l.to_vec())).expect("seven distinct lines")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{book_graph, gadget_augment, random_gnp, Gadget};
    use crate::hypergraph::{is_k_uniform, is_linear, triangle_hypergraph};

    fn g_budget() -> OracleBudget {
        OracleBudget::graph_default()
    }

    /// Plain subset enumeration, for cross-checking on tiny graphs.
    fn subset_tau_nu(g: &Graph) -> (usize, usize) {
        let ts = enumerate_triangles(g);
        let m = g.num_edges();
        let tau = (0u32..1 << m)
            .filter(|mask| ts.iter().all(|t| t.edges.iter().any(|&e| mask >> e & 1 == 1)))
            .map(|x| x.count_ones() as usize)
            .min()
            .unwrap();
        let nu = (0u64..1 << ts.len())
            .filter(|mask| {
                let mut used = 0u64;
                (0..ts.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
                    let bits: u64 = ts[i].edges.iter().map(|&e| 1u64 << e).sum();
                    let ok = used & bits == 0;
                    used |= bits;
                    ok
                })
            })
            .map(|x| x.count_ones() as usize)
            .max()
            .unwrap();
        (tau, nu)
    }

    #[test]
    fn complete_graph_constants() {
        let b = g_budget();
        assert_eq!(exact_nu_t(&complete_graph(4), &b).unwrap().0, 1);
        assert_eq!(exact_tau_t(&complete_graph(4), &b).unwrap().0, 2);
        assert_eq!(exact_nu_t(&complete_graph(5), &b).unwrap().0, 2);
        assert_eq!(exact_tau_t(&complete_graph(5), &b).unwrap().0, 4);
        assert_eq!(exact_nu_t(&complete_graph(7), &b).unwrap().0, 7);
        assert_eq!(exact_tau_t(&complete_graph(3), &b).unwrap().0, 1);
        assert_eq!(exact_nu_t(&complete_graph(9), &b).unwrap().0, 12);
    }

    #[test]
    fn witnesses_are_real() {
        let b = g_budget();
        for seed in 0..20 {
            let g = random_gnp(8, 0.6, seed).unwrap();
            let (nu, w) = exact_nu_t(&g, &b).unwrap();
            assert_eq!(w.len(), nu);
            let (tau, cover) = exact_tau_t(&g, &b).unwrap();
            assert_eq!(cover.len(), tau);
            assert!(crate::graph::is_triangle_cover(&g, &cover));
            assert!(nu <= tau && tau <= 3 * nu);
        }
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let b = g_budget();
        for seed in 0..40 {
            let g = random_gnp(7, 0.55, seed).unwrap();
            if g.num_edges() > 20 || enumerate_triangles(&g).len() > 20 {
                continue;
            }
            let (tau, nu) = subset_tau_nu(&g);
            assert_eq!(exact_tau_t(&g, &b).unwrap().0, tau, "seed {seed}");
            assert_eq!(exact_nu_t(&g, &b).unwrap().0, nu, "seed {seed}");
        }
    }

    #[test]
    fn budget_errors() {
        let big = complete_graph(10);
        assert!(matches!(exact_nu_t(&big, &g_budget()), Err(Error::BudgetExceeded(_))));
        let tight = OracleBudget { max_nodes: 3, ..g_budget() };
        assert!(matches!(exact_tau_t(&complete_graph(7), &tight), Err(Error::BudgetExceeded(_))));
        let h = triangle_hypergraph(&complete_graph(6));
        assert!(exact_nu(&h, &OracleBudget::hypergraph_default()).is_err());
    }

    #[test]
    fn gadget_values_add_up() {
        let b = g_budget();
        let g = book_graph(3);
        let (nu, tau) = (exact_nu_t(&g, &b).unwrap().0, exact_tau_t(&g, &b).unwrap().0);
        assert_eq!((nu, tau), (1, 1));
        let g2 = gadget_augment(&g, 2, Gadget::K5);
        assert_eq!(exact_nu_t(&g2, &b).unwrap().0, nu + 4);
        assert_eq!(exact_tau_t(&g2, &b).unwrap().0, tau + 8);
    }

    #[test]
    fn fano_values() {
        let f = fano_plane();
        assert!(is_linear(&f) && is_k_uniform(&f, 3));
        assert!(f.vertices().all(|v| f.degree(v) == 3));
        let b = OracleBudget::hypergraph_default();
        assert_eq!(exact_nu(&f, &b).unwrap().0, 1);
        assert_eq!(exact_tau(&f, &b).unwrap().0, 3);
        assert_eq!(exact_min_fvs(&f, &b).unwrap().0, 2);
    }

    #[test]
    fn k4_hypergraph_breakers() {
        let h = triangle_hypergraph(&complete_graph(4));
        let b = OracleBudget::hypergraph_default();
        let (fvs, set) = exact_min_fvs(&h, &b).unwrap();
        assert_eq!(fvs, 1);
        assert!(crate::cycle_breaking::is_acyclic(&h.delete_vertices(&set).unwrap()));
        let (fes, set) = exact_min_fes(&h, &b).unwrap();
        assert!(crate::cycle_breaking::is_acyclic(&h.delete_hyperedges(&set).unwrap()));
        // any two triangles of K4 share one edge, so three of them close a cycle
        assert_eq!(fes, 2);
    }

    #[test]
    fn steiner_systems_decompose_complete_graphs() {
        for n in [3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 49] {
            let w = steiner_triple_system(n).unwrap();
            assert_eq!(w.len(), n * (n - 1) / 6, "n = {n}");
            assert_eq!(w.used_edges().len(), n * (n - 1) / 2);
        }
        assert_eq!(steiner_triple_system(7).unwrap().len(), 7);
        assert_eq!(steiner_triple_system(9).unwrap().len(), 12);
        for n in [0, 1, 2, 4, 5, 6, 8, 10, 11, 12] {
            assert_eq!(steiner_triple_system(n), Err(Error::NoSteinerSystem(n)));
        }
    }
}
