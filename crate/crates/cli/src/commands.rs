//! Command dispatch and JSON output (schema 1).

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use tricover_core::{
    best_cover, condition_report, cover_with, enumerate_triangles, fes_size_bound, fvs_alg1, is_acyclic, is_k_uniform,
    is_linear, minimal_fes, solve_acyclic, Condition, CoverCertificate, Error, FvsStep, HEdge, OracleBudget, Rational,
    Strategy,
};

use crate::error::{CliError, EXIT_REJECTED};
use crate::experiment::{records_csv, run_experiment, Estimator, ExperimentSpec};
use crate::io::{parse_graph, parse_hypergraph, LabeledGraph, LabeledHypergraph};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "tricover", version, about = "Certified triangle covers and hypergraph transversals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Fvs,
    Fes,
    Bipartite,
    Best,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Triangle cover of a graph, with its certificate.
    Cover {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Best)]
        strategy: StrategyArg,
        /// Include the cycle-breaking trace and residual solution.
        #[arg(long)]
        explain: bool,
    },
    /// Triangle counts, packing bounds and density conditions of a graph.
    Analyze {
        file: PathBuf,
        /// Compute exact packing and cover numbers.
        #[arg(long)]
        oracle: bool,
        /// Largest edge count accepted by --oracle.
        #[arg(long, default_value_t = 40)]
        max_edges: usize,
    },
    /// Small feedback vertex set of a linear 3-uniform hypergraph.
    Fvs { file: PathBuf },
    /// Minimal feedback edge set of a hypergraph.
    Fes { file: PathBuf },
    /// Minimum transversal and maximum matching of an acyclic hypergraph.
    SolveAcyclic { file: PathBuf },
    /// Packing lower bounds and bipartite covers over random graphs.
    RandomExperiment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Estimator::SteinerSeeded)]
        estimator: Estimator,
        /// Also write per-trial records to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-check a certificate produced by `cover` against its graph.
    Verify { graph: PathBuf, certificate: PathBuf },
}

/// What a command prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<LabeledGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn load_hypergraph(path: &Path) -> Result<LabeledHypergraph, CliError> {
    parse_hypergraph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioJson {
    pub ratio: String,
    pub value: f64,
}

fn ratio(r: Rational) -> RatioJson {
    RatioJson { ratio: r.to_string(), value: *r.numer() as f64 / *r.denom() as f64 }
}

#[derive(Debug, Serialize)]
struct ConditionJson {
    name: &'static str,
    threshold: RatioJson,
    lower: Option<RatioJson>,
    upper: Option<RatioJson>,
    value: Option<RatioJson>,
    status: &'static str,
}

fn condition(c: &Condition) -> ConditionJson {
    ConditionJson {
        name: c.kind.name(),
        threshold: ratio(c.kind.threshold()),
        lower: c.lower.map(ratio),
        upper: c.upper.map(ratio),
        value: c.value().map(ratio),
        status: c.status.name(),
    }
}

#[derive(Debug, Serialize)]
struct HyperedgeJson {
    line: usize,
    vertices: Vec<String>,
}

fn hyperedge(h: &LabeledHypergraph, e: HEdge) -> HyperedgeJson {
    HyperedgeJson { line: h.lines[e], vertices: h.member_labels(e) }
}

/// Names a core precondition error in terms of the input file.
fn hyper_error(h: &LabeledHypergraph, err: Error) -> CliError {
    let line = |e: HEdge| h.lines[e];
    CliError::Precondition(match err {
        Error::NotUniform { edge, size } => {
            format!("not 3-uniform: hyperedge on line {} has {size} vertices", line(edge))
        }
        Error::NotLinear(a, b) => {
            format!("not linear: hyperedges on lines {} and {} share two or more vertices", line(a), line(b))
        }
        Error::Cyclic => "hypergraph contains a cycle".to_string(),
        other => other.to_string(),
    })
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let ok = |stdout| Ok(Output { stdout, code: 0 });
    match cli.command {
        Command::Cover { file, strategy, explain } => ok(cover(&load_graph(&file)?, strategy, explain)),
        Command::Analyze { file, oracle, max_edges } => ok(analyze(&load_graph(&file)?, oracle, max_edges)?),
        Command::Fvs { file } => ok(fvs(&load_hypergraph(&file)?)?),
        Command::Fes { file } => ok(fes(&load_hypergraph(&file)?)),
        Command::SolveAcyclic { file } => ok(acyclic(&load_hypergraph(&file)?)?),
        Command::RandomExperiment { n, p, trials, seed, estimator, csv } => {
            let spec = ExperimentSpec { n, p, trials, seed, estimator };
            let result = run_experiment(&spec)?;
            if let Some(path) = csv {
                std::fs::write(&path, records_csv(&result.records))
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            ok(to_json(&Envelope { schema: SCHEMA, command: "random-experiment", body: result }))
        }
        Command::Verify { graph, certificate } => {
            let g = load_graph(&graph)?;
            let cert: CertificateIn = serde_json::from_str(&read(&certificate)?)
                .map_err(|e| CliError::Certificate { path: certificate.clone(), message: e.to_string() })?;
            let report = verify(&g, &cert);
            let code = if report.valid { 0 } else { EXIT_REJECTED };
            Ok(Output { stdout: to_json(&report), code })
        }
    }
}

#[derive(Debug, Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    command: &'static str,
    #[serde(flatten)]
    body: T,
}

#[derive(Debug, Serialize)]
struct GraphStats {
    vertices: usize,
    edges: usize,
    triangles: usize,
}

#[derive(Debug, Serialize)]
struct CoverJson {
    schema: u32,
    command: &'static str,
    requested: &'static str,
    strategy: &'static str,
    graph: GraphStats,
    cover: Vec<[String; 2]>,
    size: usize,
    claimed_bound: RatioJson,
    valid: bool,
    packing: Vec<[String; 3]>,
    packing_size: usize,
    within_twice_packing: bool,
    compared: BTreeMap<&'static str, usize>,
    conditions: Vec<ConditionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    explain: Option<ExplainJson>,
}

#[derive(Debug, Serialize)]
struct ExplainJson {
    breaker: Vec<[String; 2]>,
    feedback_triangles: Vec<[String; 3]>,
    residual_transversal: Vec<[String; 2]>,
    residual_matching: Vec<[String; 3]>,
    trace: Vec<StepJson>,
}

#[derive(Debug, Serialize)]
struct StepJson {
    rule: &'static str,
    triangles_before: usize,
    added: Vec<[String; 2]>,
    removed_triangles: Vec<[String; 3]>,
    cycle: Option<Vec<[String; 3]>>,
}

fn strategy_name(s: StrategyArg) -> &'static str {
    match s {
        StrategyArg::Fvs => "fvs",
        StrategyArg::Fes => "fes",
        StrategyArg::Bipartite => "bipartite",
        StrategyArg::Best => "best",
    }
}

fn cover(g: &LabeledGraph, requested: StrategyArg, explain: bool) -> String {
    let cert = match requested {
        StrategyArg::Fvs => cover_with(&g.graph, Strategy::Fvs),
        StrategyArg::Fes => cover_with(&g.graph, Strategy::Fes),
        StrategyArg::Bipartite => cover_with(&g.graph, Strategy::Bipartite),
        StrategyArg::Best => best_cover(&g.graph),
    };
    let triangles = enumerate_triangles(&g.graph);
    let tri = |i: usize| -> [String; 3] { triangles[i].vertices.map(|v| g.labels[v].clone()) };
    let edges = |ids: &[usize]| -> Vec<[String; 2]> { ids.iter().map(|&e| g.edge_labels(e)).collect() };
    let cover = edges(&cert.cover);
    let valid = independent_check(g, &cover, cert.claimed_bound).is_empty();
    let explain = explain.then(|| explanation(&cert, &edges, &tri));
    to_json(&CoverJson {
        schema: SCHEMA,
        command: "cover",
        requested: strategy_name(requested),
        strategy: cert.strategy.name(),
        graph: GraphStats { vertices: g.graph.num_vertices(), edges: g.graph.num_edges(), triangles: triangles.len() },
        size: cover.len(),
        cover,
        claimed_bound: ratio(cert.claimed_bound),
        valid,
        packing: cert.packing.iter().map(|&i| tri(i)).collect(),
        packing_size: cert.packing.len(),
        within_twice_packing: cert.within_twice_packing(),
        compared: cert.compared.iter().map(|&(s, n)| (s.name(), n)).collect(),
        conditions: cert.conditions.iter().map(condition).collect(),
        explain,
    })
}

fn explanation(
    cert: &CoverCertificate,
    edges: &dyn Fn(&[usize]) -> Vec<[String; 2]>,
    tri: &dyn Fn(usize) -> [String; 3],
) -> ExplainJson {
    let step = |s: &FvsStep| StepJson {
        rule: s.rule.name(),
        triangles_before: s.edges_before,
        added: edges(&s.added),
        removed_triangles: s.removed_edges.iter().map(|&t| tri(t)).collect(),
        cycle: s.cycle.as_ref().map(|c| c.edges.iter().map(|&t| tri(t)).collect()),
    };
    let residual = cert.residual.as_ref();
    ExplainJson {
        breaker: edges(&cert.breaker),
        feedback_triangles: cert.feedback_edges.iter().map(|&t| tri(t)).collect(),
        residual_transversal: residual.map_or(Vec::new(), |r| edges(&r.transversal.iter().copied().collect::<Vec<_>>())),
        residual_matching: residual.map_or(Vec::new(), |r| r.matching.iter().map(|&t| tri(t)).collect()),
        trace: cert.trace.iter().map(step).collect(),
    }
}

/// Problems with a cover given by labels, checked by scanning every vertex
/// triple rather than through the triangle enumerator.
fn independent_check(g: &LabeledGraph, cover: &[[String; 2]], bound: Rational) -> Vec<String> {
    let mut problems = Vec::new();
    let mut ids = BTreeSet::new();
    for [a, b] in cover {
        match g.edge_by_labels(a, b) {
            Some(e) => {
                if !ids.insert(e) {
                    problems.push(format!("edge {a} {b} listed twice"));
                }
            }
            None => problems.push(format!("{a} {b} is not an edge")),
        }
    }
    let gr = &g.graph;
    let n = gr.num_vertices();
    let covered = |x: usize, y: usize| ids.contains(&gr.edge_id(x, y).unwrap());
    'scan: for a in 0..n {
        for b in a + 1..n {
            if !gr.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if gr.has_edge(a, c) && gr.has_edge(b, c) && !covered(a, b) && !covered(a, c) && !covered(b, c) {
                    let l = |v: usize| g.labels[v].as_str();
                    problems.push(format!("triangle {} {} {} is not covered", l(a), l(b), l(c)));
                    break 'scan;
                }
            }
        }
    }
    if Rational::from_integer(cover.len() as u64) > bound {
        problems.push(format!("cover has {} edges, above the claimed bound {bound}", cover.len()));
    }
    problems
}

#[derive(Debug, Deserialize)]
pub struct CertificateIn {
    pub cover: Vec<[String; 2]>,
    pub size: usize,
    pub claimed_bound: RatioJson,
    #[serde(default)]
    pub packing: Vec<[String; 3]>,
    #[serde(default)]
    pub within_twice_packing: Option<bool>,
}

#[derive(Debug, Serialize)]
struct VerifyJson {
    schema: u32,
    command: &'static str,
    valid: bool,
    cover_size: usize,
    packing_size: usize,
    problems: Vec<String>,
}

fn verify(g: &LabeledGraph, cert: &CertificateIn) -> VerifyJson {
    let mut problems = Vec::new();
    match cert.claimed_bound.ratio.parse::<Rational>() {
        Ok(bound) => problems.extend(independent_check(g, &cert.cover, bound)),
        Err(_) => problems.push(format!("unreadable bound `{}`", cert.claimed_bound.ratio)),
    }
    if cert.size != cert.cover.len() {
        problems.push(format!("size {} but {} cover edges", cert.size, cert.cover.len()));
    }
    let mut used = BTreeSet::new();
    for [a, b, c] in &cert.packing {
        let sides = [g.edge_by_labels(a, b), g.edge_by_labels(a, c), g.edge_by_labels(b, c)];
        if sides.iter().any(Option::is_none) {
            problems.push(format!("packing entry {a} {b} {c} is not a triangle"));
        } else if !sides.iter().all(|e| used.insert(e.unwrap())) {
            problems.push(format!("packing entry {a} {b} {c} shares an edge with an earlier one"));
        }
    }
    if cert.within_twice_packing == Some(true) && cert.cover.len() > 2 * cert.packing.len() {
        problems.push("cover is not within twice the packing".into());
    }
    VerifyJson {
        schema: SCHEMA,
        command: "verify",
        valid: problems.is_empty(),
        cover_size: cert.cover.len(),
        packing_size: cert.packing.len(),
        problems,
    }
}

#[derive(Debug, Serialize)]
struct BoundsJson {
    lower: usize,
    upper: usize,
    exact: Option<usize>,
}

#[derive(Debug, Serialize)]
struct AnalyzeJson {
    schema: u32,
    command: &'static str,
    vertices: usize,
    edges: usize,
    irreducible_edges: usize,
    triangles: usize,
    packing_number: BoundsJson,
    cover_number: BoundsJson,
    edges_per_triangle_raw: Option<RatioJson>,
    cond_i: ConditionJson,
    cond_ii: ConditionJson,
    cond_iii: ConditionJson,
    any_condition_holds: bool,
}

fn analyze(g: &LabeledGraph, use_oracle: bool, max_edges: usize) -> Result<String, CliError> {
    let budget = OracleBudget::graph_default().with_max_edges(max_edges);
    let report = condition_report(&g.graph, use_oracle.then_some(&budget)).map_err(|e| match e {
        Error::BudgetExceeded(msg) => CliError::Budget(format!("oracle budget exceeded: {msg}")),
        other => CliError::Precondition(other.to_string()),
    })?;
    Ok(to_json(&AnalyzeJson {
        schema: SCHEMA,
        command: "analyze",
        vertices: report.n_vertices,
        edges: report.n_edges,
        irreducible_edges: report.n_irreducible_edges,
        triangles: report.n_triangles,
        packing_number: BoundsJson { lower: report.nu_lower, upper: report.nu_upper, exact: report.nu_exact },
        // any packing lower-bounds the cover number
        cover_number: BoundsJson { lower: report.nu_lower, upper: report.best_cover, exact: report.tau_exact },
        edges_per_triangle_raw: report.raw_edges_per_triangle.map(ratio),
        cond_i: condition(&report.cond_i),
        cond_ii: condition(&report.cond_ii),
        cond_iii: condition(&report.cond_iii),
        any_condition_holds: report.any_condition_holds(),
    }))
}

#[derive(Debug, Serialize)]
struct HypergraphStats {
    vertices: usize,
    hyperedges: usize,
}

fn stats(h: &LabeledHypergraph) -> HypergraphStats {
    HypergraphStats { vertices: h.hypergraph.num_vertices(), hyperedges: h.hypergraph.num_edges() }
}

#[derive(Debug, Serialize)]
struct FvsJson {
    schema: u32,
    command: &'static str,
    hypergraph: HypergraphStats,
    fvs: Vec<String>,
    size: usize,
    bound: usize,
    within_bound: bool,
    acyclic_after: bool,
    trace: Vec<HyperStepJson>,
}

#[derive(Debug, Serialize)]
struct HyperStepJson {
    rule: &'static str,
    hyperedges_before: usize,
    added: Vec<String>,
    removed: Vec<HyperedgeJson>,
    cycle: Option<Vec<HyperedgeJson>>,
}

fn fvs(h: &LabeledHypergraph) -> Result<String, CliError> {
    let r = fvs_alg1(&h.hypergraph).map_err(|e| hyper_error(h, e))?;
    let rest = h.hypergraph.delete_vertices(&r.removed_vertices).expect("vertices come from h");
    let label = |v: &usize| h.labels[*v].clone();
    let bound = h.hypergraph.num_edges() / 3;
    Ok(to_json(&FvsJson {
        schema: SCHEMA,
        command: "fvs",
        hypergraph: stats(h),
        fvs: r.removed_vertices.iter().map(label).collect(),
        size: r.removed_vertices.len(),
        bound,
        within_bound: r.removed_vertices.len() <= bound,
        acyclic_after: is_acyclic(&rest),
        trace: r
            .trace
            .iter()
            .map(|s| HyperStepJson {
                rule: s.rule.name(),
                hyperedges_before: s.edges_before,
                added: s.added.iter().map(label).collect(),
                removed: s.removed_edges.iter().map(|&e| hyperedge(h, e)).collect(),
                cycle: s.cycle.as_ref().map(|c| c.edges.iter().map(|&e| hyperedge(h, e)).collect()),
            })
            .collect(),
    }))
}

#[derive(Debug, Serialize)]
struct FesJson {
    schema: u32,
    command: &'static str,
    hypergraph: HypergraphStats,
    fes: Vec<HyperedgeJson>,
    size: usize,
    /// `2|ℰ| - |𝒱'| + p`; only promised for linear 3-uniform input.
    bound: Option<i64>,
    within_bound: Option<bool>,
    minimal: bool,
    acyclic_after: bool,
}

fn fes(h: &LabeledHypergraph) -> String {
    let hg = &h.hypergraph;
    let r = minimal_fes(hg);
    let removed = &r.removed_hyperedges;
    let minimal = removed.iter().all(|&f| {
        let others: Vec<HEdge> = removed.iter().copied().filter(|&x| x != f).collect();
        !is_acyclic(&hg.delete_hyperedges(&others).unwrap())
    });
    let bound = (is_linear(hg) && is_k_uniform(hg, 3)).then(|| fes_size_bound(hg));
    to_json(&FesJson {
        schema: SCHEMA,
        command: "fes",
        hypergraph: stats(h),
        fes: removed.iter().map(|&e| hyperedge(h, e)).collect(),
        size: removed.len(),
        bound,
        within_bound: bound.map(|b| removed.len() as i64 <= b),
        minimal,
        acyclic_after: is_acyclic(&hg.delete_hyperedges(removed).unwrap()),
    })
}

#[derive(Debug, Serialize)]
struct AcyclicJson {
    schema: u32,
    command: &'static str,
    hypergraph: HypergraphStats,
    transversal: Vec<String>,
    matching: Vec<HyperedgeJson>,
    size: usize,
    certified: bool,
}

fn acyclic(h: &LabeledHypergraph) -> Result<String, CliError> {
    let pair = solve_acyclic(&h.hypergraph).map_err(|e| hyper_error(h, e))?;
    Ok(to_json(&AcyclicJson {
        schema: SCHEMA,
        command: "solve-acyclic",
        hypergraph: stats(h),
        transversal: pair.transversal.iter().map(|&v| h.labels[v].clone()).collect(),
        matching: pair.matching.iter().map(|&e| hyperedge(h, e)).collect(),
        size: pair.size(),
        certified: pair.certifies(&h.hypergraph),
    }))
}
