//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricover_cli::experiment::{run_experiment, Estimator, ExperimentSpec};
use tricover_core::generate::{random_cubic_dual, random_hyperforest, random_hypertree, random_linear_3_uniform};
use tricover_core::{
    best_cover, book_graph, complete_graph, components, condition_report, cover_via_bipartite, enumerate_triangles,
    exact_nu, exact_nu_t, exact_tau, exact_tau_t, fano_plane, fes_size_bound, fvs_alg1, gadget_augment,
    hypergraph_cover, is_acyclic, minimal_fes, random_gnp, solve_acyclic, triangle_hypergraph, Error, Gadget, Graph,
    HEdge, HVertex, Hypergraph, OracleBudget,
};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.1?}, limit {limit:?}"))
}

/// Random linear 3-uniform hypergraphs and triangle hypergraphs of random
/// graphs, each with at most 40 hyperedges.
fn linear_suite() -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut suite = Vec::new();
    for _ in 0..600 {
        let n = rng.gen_range(6..=30);
        let m = rng.gen_range(1..=40);
        suite.push(random_linear_3_uniform(n, m, rng.gen()));
    }
    while suite.len() < 1100 {
        let n = rng.gen_range(4..=11);
        let p = rng.gen_range(0.2..0.9);
        let h = triangle_hypergraph(&random_gnp(n, p, rng.gen()).unwrap());
        if h.num_edges() <= 40 {
            suite.push(h);
        }
    }
    for _ in 0..100 {
        let n = 2 * rng.gen_range(2..=20);
        suite.push(random_cubic_dual(n, rng.gen()));
    }
    suite
}

fn fvs_bound(suite: &[Hypergraph]) -> Check {
    let start = Instant::now();
    for (i, h) in suite.iter().enumerate() {
        let r = fvs_alg1(h).map_err(|e| format!("instance {i}: {e}"))?;
        let bound = h.num_edges() / 3;
        ensure(r.removed_vertices.len() <= bound, || {
            format!("instance {i}: {} vertices, bound {bound}", r.removed_vertices.len())
        })?;
        let rest = h.delete_vertices(&r.removed_vertices).unwrap();
        ensure(is_acyclic(&rest), || format!("instance {i}: cycle left after deletion"))?;
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{} hypergraphs in {:.1?}", suite.len(), start.elapsed()))
}

/// Largest matching by enumerating hyperedge subsets.
fn subset_nu(h: &Hypergraph) -> usize {
    let edges: Vec<&[HVertex]> = h.edges().map(|(_, m)| m).collect();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut used = BTreeSet::new();
        let disjoint = (0..edges.len())
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| edges[i].iter().all(|&v| used.insert(v)));
        if disjoint {
            best = k;
        }
    }
    best
}

fn forest_suite() -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0e5);
    (0..520)
        .map(|i| {
            let m = i % 13;
            random_hyperforest(m, rng.gen_range(1..=3), rng.gen())
        })
        .collect()
}

fn acyclic_duality(forests: &[Hypergraph]) -> Check {
    let budget = OracleBudget::hypergraph_default();
    for (i, h) in forests.iter().enumerate() {
        let pair = solve_acyclic(h).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(pair.certifies(h), || format!("instance {i}: pair does not certify itself"))?;
        let tau = exact_tau(h, &budget).map_err(|e| format!("instance {i}: {e}"))?.0;
        let nu = subset_nu(h);
        ensure(pair.transversal.len() == tau && pair.matching.len() == nu && tau == nu, || {
            format!(
                "instance {i}: transversal {} matching {} but tau {tau} nu {nu}",
                pair.transversal.len(),
                pair.matching.len()
            )
        })?;
    }
    Ok(format!("{} hyperforests with at most 12 hyperedges", forests.len()))
}

/// Connected acyclic pieces: generated hypertrees and the components left
/// after removing a minimal feedback edge set from every suite instance.
fn tree_pieces(suite: &[Hypergraph]) -> Vec<Hypergraph> {
    let mut pieces: Vec<Hypergraph> = (1..=40).map(|m| random_hypertree(m, m as u64)).collect();
    for h in suite {
        let fes = minimal_fes(h);
        let rest = h.delete_hyperedges(&fes.removed_hyperedges).unwrap();
        for c in components(&rest) {
            if !c.edges.is_empty() {
                pieces.push(rest.restrict_to_edges(&c.edges.iter().copied().collect()));
            }
        }
    }
    pieces
}

fn tree_vertex_count(pieces: &[Hypergraph]) -> Check {
    for (i, t) in pieces.iter().enumerate() {
        ensure(components(&t.without_isolated()).len() == 1 && is_acyclic(t), || {
            format!("piece {i} is not a connected acyclic hypergraph")
        })?;
        ensure(t.num_non_isolated() == 2 * t.num_edges() + 1, || {
            format!("piece {i}: {} vertices, {} hyperedges", t.num_non_isolated(), t.num_edges())
        })?;
    }
    Ok(format!("{} connected acyclic hypergraphs", pieces.len()))
}

fn fes_bound(suite: &[Hypergraph], forests: &[Hypergraph]) -> Check {
    for (i, h) in suite.iter().chain(forests).enumerate() {
        let removed = minimal_fes(h).removed_hyperedges;
        let bound = fes_size_bound(h);
        ensure(removed.len() as i64 <= bound, || format!("instance {i}: {} > {bound}", removed.len()))?;
        ensure(is_acyclic(&h.delete_hyperedges(&removed).unwrap()), || format!("instance {i}: not acyclic"))?;
        for &f in &removed {
            let others: Vec<HEdge> = removed.iter().copied().filter(|&x| x != f).collect();
            ensure(!is_acyclic(&h.delete_hyperedges(&others).unwrap()), || {
                format!("instance {i}: hyperedge {f} can go back without a cycle")
            })?;
        }
    }
    Ok(format!("{} hypergraphs", suite.len() + forests.len()))
}

fn known_values() -> Check {
    let start = Instant::now();
    let b = OracleBudget::graph_default();
    let hb = OracleBudget::hypergraph_default();
    let err = |e: Error| e.to_string();
    let k4 = complete_graph(4);
    let k5 = complete_graph(5);
    let found = [
        ("nu_t(K4)", exact_nu_t(&k4, &b).map_err(err)?.0, 1),
        ("tau_t(K4)", exact_tau_t(&k4, &b).map_err(err)?.0, 2),
        ("nu_t(K5)", exact_nu_t(&k5, &b).map_err(err)?.0, 2),
        ("tau_t(K5)", exact_tau_t(&k5, &b).map_err(err)?.0, 4),
        ("nu_t(K7)", exact_nu_t(&complete_graph(7), &b).map_err(err)?.0, 7),
        ("nu(Fano)", exact_nu(&fano_plane(), &hb).map_err(err)?.0, 1),
        ("tau(Fano)", exact_tau(&fano_plane(), &hb).map_err(err)?.0, 3),
    ];
    for (name, got, want) in found {
        ensure(got == want, || format!("{name} = {got}, expected {want}"))?;
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("all values reproduced in {:.1?}", start.elapsed()))
}

/// Graphs with at most 25 edges: random samples, books, cliques and
/// gadget-augmented samples.
fn small_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a9);
    let mut graphs: Vec<Graph> = (3..=7).map(complete_graph).collect();
    graphs.extend((1..=8).map(book_graph));
    while graphs.len() < 400 {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.3..0.95);
        let g = random_gnp(n, p, rng.gen()).unwrap();
        let g = match rng.gen_range(0..4) {
            0 => gadget_augment(&g, 1, Gadget::K4),
            1 => gadget_augment(&g, 1, Gadget::K5),
            _ => g,
        };
        if g.num_edges() <= 25 {
            graphs.push(g);
        }
    }
    graphs
}

fn conditional_two_approximation(graphs: &[Graph]) -> Check {
    let budget = OracleBudget::graph_default();
    let mut certified = 0;
    for (i, g) in graphs.iter().enumerate() {
        let report = condition_report(g, Some(&budget)).map_err(|e| format!("graph {i}: {e}"))?;
        let (nu, tau) = (report.nu_exact.unwrap(), report.tau_exact.unwrap());
        let best = best_cover(g);
        ensure(best.verify_graph(g) && best.size() == report.best_cover, || format!("graph {i}: bad certificate"))?;
        ensure(best.size() >= tau, || format!("graph {i}: cover {} below tau_t {tau}", best.size()))?;
        if report.any_condition_holds() {
            certified += 1;
            ensure(best.size() <= 2 * nu, || format!("graph {i}: cover {} > 2 * nu_t {nu}", best.size()))?;
        }
    }
    ensure(certified > 0, || "no graph satisfied a condition".into())?;
    Ok(format!("{} graphs, {certified} with a certified condition", graphs.len()))
}

fn bipartite_cover(graphs: &[Graph]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb1);
    let mut all = graphs.to_vec();
    for _ in 0..200 {
        let n = rng.gen_range(2..=40);
        all.push(random_gnp(n, rng.gen_range(0.0..1.0), rng.gen()).unwrap());
    }
    for (i, g) in all.iter().enumerate() {
        let c = cover_via_bipartite(g);
        ensure(c.size() <= g.num_edges() / 2, || format!("graph {i}: {} > |E|/2", c.size()))?;
        ensure(g.without_edges(&c.cover).is_bipartite(), || format!("graph {i}: residual not bipartite"))?;
    }
    Ok(format!("{} graphs", all.len()))
}

fn hypergraph_two_approximation() -> Check {
    let budget = OracleBudget::hypergraph_default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x712);
    let (mut sparse, mut dense) = (0, 0);
    for i in 0..1500 {
        let n = rng.gen_range(7..=40);
        let m = rng.gen_range(1..=14);
        let h = random_linear_3_uniform(n, m, rng.gen()).without_isolated();
        let (v, e) = (h.num_vertices(), h.num_edges());
        if e == 0 {
            continue;
        }
        let nu = exact_nu(&h, &budget).map_err(|err| format!("instance {i}: {err}"))?.0;
        if v >= 2 * e {
            sparse += 1;
        } else if 3 * nu >= e {
            dense += 1;
        } else {
            continue;
        }
        let c = hypergraph_cover(&h).map_err(|err| format!("instance {i}: {err}"))?;
        ensure(c.verify_hypergraph(&h), || format!("instance {i}: not a transversal"))?;
        ensure(c.size() <= 2 * nu, || format!("instance {i}: cover {} > 2 * nu {nu}", c.size()))?;
    }
    ensure(sparse > 0 && dense > 0, || format!("too few qualifying instances ({sparse}, {dense})"))?;
    Ok(format!("{sparse} with |V| >= 2|E|, {dense} more with nu >= |E|/3"))
}

fn gadget_arithmetic() -> Check {
    let b = OracleBudget::graph_default();
    let measure = |g: &Graph| -> Result<[usize; 4], String> {
        let nu = exact_nu_t(g, &b).map_err(|e| e.to_string())?.0;
        let tau = exact_tau_t(g, &b).map_err(|e| e.to_string())?.0;
        Ok([enumerate_triangles(g).len(), g.num_edges(), nu, tau])
    };
    let mut bases = vec![Graph::empty(0), complete_graph(3), complete_graph(4), book_graph(3)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x9ad9);
    while bases.len() < 10 {
        let g = random_gnp(rng.gen_range(4..=7), 0.6, rng.gen()).unwrap();
        if g.num_edges() <= 12 {
            bases.push(g);
        }
    }
    let mut checked = 0;
    for (i, g) in bases.iter().enumerate() {
        let base = measure(g)?;
        for (gadget, step) in [(Gadget::K4, [4, 6, 1, 2]), (Gadget::K5, [10, 10, 2, 4])] {
            for k in 1..=2 {
                let got = measure(&gadget_augment(g, k, gadget))?;
                let want: Vec<usize> = base.iter().zip(step).map(|(x, d)| x + k * d).collect();
                ensure(got.as_slice() == want, || {
                    format!("base {i}, {gadget:?} x{k}: got {got:?}, expected {want:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} augmentations of {} base graphs", bases.len()))
}

fn random_experiment() -> Check {
    let start = Instant::now();
    let spec = ExperimentSpec { n: 49, p: 0.95, trials: 100, seed: 20240601, estimator: Estimator::SteinerSeeded };
    let r = run_experiment(&spec).map_err(|e| e.to_string())?;
    let a = &r.aggregate;
    let quarter = a.fraction_packing_at_least_quarter.unwrap_or(0.0);
    let twice = a.fraction_cover_within_twice_packing.unwrap_or(0.0);
    // empirical targets for this sample size, not asymptotic constants
    ensure(quarter >= 0.9, || format!("packing >= |E|/4 in only {quarter:.2} of trials"))?;
    ensure(twice >= 0.9, || format!("cover <= 2 * packing in only {twice:.2} of trials"))?;
    within(Duration::from_secs(120), start)?;
    Ok(format!("fractions {quarter:.2} and {twice:.2} in {:.1?}", start.elapsed()))
}

fn run_bin(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_tricover")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let put = |name: &str, text: &str| -> Result<String, String> {
        let p = dir.path().join(name);
        std::fs::write(&p, text).map_err(|e| e.to_string())?;
        Ok(p.to_str().unwrap().to_string())
    };
    let g = random_gnp(12, 0.5, 3).unwrap();
    let graph_text: String = g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect();
    let graph = put("g.txt", &graph_text)?;
    let h = random_linear_3_uniform(15, 12, 4);
    let hyper_text: String = h
        .edges()
        .map(|(_, m)| m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    let hyper = put("h.txt", &hyper_text)?;
    let forest = put("f.txt", "a b c\nc d e\ne f g\nb h i\n")?;
    let (_, cert, _) = run_bin(&["cover", &graph]);
    let cert = put("cert.json", std::str::from_utf8(&cert).unwrap())?;
    let csv = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let (csv_a, csv_b) = (csv("a.csv"), csv("b.csv"));
    let experiment = |out: &str| {
        ["random-experiment", "--n", "13", "--p", "0.8", "--trials", "5", "--seed", "11", "--csv", out]
            .map(String::from)
            .to_vec()
    };

    let mut runs: Vec<Vec<String>> = Vec::new();
    for strategy in ["best", "fvs", "fes", "bipartite"] {
        runs.push(vec!["cover".into(), graph.clone(), "--strategy".into(), strategy.into(), "--explain".into()]);
    }
    runs.push(vec!["analyze".into(), graph.clone()]);
    runs.push(vec!["analyze".into(), graph.clone(), "--oracle".into()]);
    for cmd in ["fvs", "fes", "solve-acyclic"] {
        runs.push(vec![cmd.into(), hyper.clone()]);
        runs.push(vec![cmd.into(), forest.clone()]);
    }
    runs.push(vec!["verify".into(), graph.clone(), cert]);
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (run_bin(&args), run_bin(&args));
        ensure(a == b, || format!("`{}` differs between runs", args.join(" ")))?;
        ensure(!a.1.is_empty() || !a.2.is_empty(), || format!("`{}` printed nothing", args.join(" ")))?;
    }
    let run_a = run_bin(&experiment(&csv_a).iter().map(String::as_str).collect::<Vec<_>>());
    let run_b = run_bin(&experiment(&csv_b).iter().map(String::as_str).collect::<Vec<_>>());
    ensure(run_a == run_b, || "random-experiment output differs".into())?;
    let read = |p: &str| std::fs::read(Path::new(p)).map_err(|e| e.to_string());
    ensure(read(&csv_a)? == read(&csv_b)?, || "random-experiment csv differs".into())?;
    Ok(format!("{} commands run twice with identical output", runs.len() + 1))
}

fn main() -> ExitCode {
    let suite = linear_suite();
    let forests = forest_suite();
    let pieces = tree_pieces(&suite);
    let graphs = small_graphs();
    let criteria: Vec<Criterion> = vec![
        ("fvs-bound", Box::new(|| fvs_bound(&suite))),
        ("acyclic-duality", Box::new(|| acyclic_duality(&forests))),
        ("tree-vertex-count", Box::new(|| tree_vertex_count(&pieces))),
        ("fes-bound-and-minimality", Box::new(|| fes_bound(&suite, &forests))),
        ("known-exact-values", Box::new(known_values)),
        ("conditional-two-approximation", Box::new(|| conditional_two_approximation(&graphs))),
        ("bipartite-cover", Box::new(|| bipartite_cover(&graphs))),
        ("hypergraph-two-approximation", Box::new(hypergraph_two_approximation)),
        ("gadget-arithmetic", Box::new(gadget_arithmetic)),
        ("random-graph-experiment", Box::new(random_experiment)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
