use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use proxi_core::beta::{build_elimination_forest, constrained_beta_skeleton, contract_forest};
use proxi_core::cmst::{cmst_trees, extract_cmst_constraints};
use proxi_core::gabriel::{constrained_gabriel_graph, gabriel_constraints_in};
use proxi_core::generate::{self, GENERAL_POSITION_CHECK_MAX};
use proxi_core::io::{
    read_graph_json, read_graph_text, write_constraints_json, write_constraints_text, write_graph_json,
    write_graph_text, write_triangulation_text,
};
use proxi_core::mst::cmst_of_cdt;
use proxi_core::oracle::{
    oracle_min_constraints, verify_constraint_hierarchy, verify_hierarchy, HierarchyReport, HIERARCHY_BETAS,
    ORACLE_EDGE_LIMIT,
};
use proxi_core::{
    build_cdt, cmst_constraints_reference, min_constraints, BetaParam, ConstraintSet, Edge, Error, Family, PlaneGraph,
    Validation,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::*;
use crate::error::{CliError, CliResult};
use crate::render::{render_svg, Overlays};

pub const SEED_VAR: &str = "PROXI_SEED";

pub fn family(f: FamilyArg, beta: Option<BetaParam>) -> CliResult<Family> {
    match (f, beta) {
        (FamilyArg::Beta, b) => Ok(Family::Beta(b.unwrap_or(BetaParam::RNG))),
        (_, Some(_)) => Err(CliError::Usage("--beta only applies to the beta family".into())),
        (FamilyArg::Cmst, None) => Ok(Family::Cmst),
        (FamilyArg::Gabriel, None) => Ok(Family::Gabriel),
    }
}

/// `--seed`, unless PROXI_SEED is set.
pub fn seed(flag: u64) -> CliResult<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_VAR} is not a u64: {v:?}"))),
        Err(_) => Ok(flag),
    }
}

fn is_stdin(path: &Path) -> bool {
    path.as_os_str() == "-"
}

/// Reads a graph. Small inputs get the full planarity and general-position
/// checks; larger ones rely on the triangulation to reject degeneracies.
pub fn load(path: &Path) -> CliResult<PlaneGraph> {
    let mut src = String::new();
    if is_stdin(path) {
        std::io::stdin().read_to_string(&mut src).map_err(|e| CliError::io(path, e))?;
    } else {
        src = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    }
    let json = path.extension().is_some_and(|x| x == "json") || src.trim_start().starts_with('{');
    let wrap = |source: Error| CliError::Input { path: path.to_path_buf(), source };
    let g = if json {
        read_graph_json(&src, Validation::Structural)
    } else {
        read_graph_text(&src, Validation::Structural)
    }
    .map_err(wrap)?;
    if g.n() <= GENERAL_POSITION_CHECK_MAX {
        let edges = g.edges().iter().map(|e| (e.u, e.v)).collect();
        return g.with_edges(edges, Validation::Full).map_err(wrap);
    }
    Ok(g)
}

fn write_out(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn pool(jobs: Option<usize>) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", jobs.unwrap_or(1))))
}

/// The constrained proximity graph of `(V, s)`, built on its triangulation.
pub fn family_graph(g: &PlaneGraph, family: Family, s: &ConstraintSet) -> proxi_core::Result<BTreeSet<Edge>> {
    let sub = g.subgraph(s.edges().iter().copied())?;
    let t = build_cdt(&sub)?;
    Ok(match family {
        Family::Cmst => cmst_of_cdt(&t)?.edge_set().into_iter().collect(),
        Family::Gabriel => constrained_gabriel_graph(&t, &sub)?,
        Family::Beta(b) => constrained_beta_skeleton(&t, &sub, &build_elimination_forest(&t, b)?),
    })
}

/// First input edge missing from the constrained graph of `(V, s)`.
pub fn missing_edge(g: &PlaneGraph, family: Family, s: &ConstraintSet) -> proxi_core::Result<Option<Edge>> {
    let graph = family_graph(g, family, s)?;
    Ok(g.edges().iter().find(|e| !graph.contains(e)).copied())
}

/// `None` when the oracle's unique minimum equals `s`.
fn minimality_error(g: &PlaneGraph, family: Family, s: &ConstraintSet) -> proxi_core::Result<Option<String>> {
    let o = oracle_min_constraints(g, family)?;
    if o.set.edges() != s.edges() {
        return Ok(Some(format!("oracle minimum {:?} differs from {:?}", o.set.edges(), s.edges())));
    }
    if o.minimum_count != 1 {
        return Ok(Some(format!("{} minimum sets", o.minimum_count)));
    }
    Ok(None)
}

fn verify_set(g: &PlaneGraph, family: Family, s: &ConstraintSet) -> CliResult<()> {
    if let Some(e) = missing_edge(g, family, s)? {
        return Err(CliError::Mismatch(format!("{family}: input edge {e} is not in the constrained graph")));
    }
    if g.edges().len() <= ORACLE_EDGE_LIMIT {
        if let Some(m) = minimality_error(g, family, s)? {
            return Err(CliError::Mismatch(format!("{family}: {m}")));
        }
    }
    Ok(())
}

struct Computed {
    text: String,
    svg: Option<String>,
}

fn constraints_one(path: &Path, a: &ConstraintsArgs, family: Family) -> CliResult<Computed> {
    let g = load(path)?;
    let s = min_constraints(&g, family).map_err(|source| CliError::Input { path: path.into(), source })?;
    if a.verify {
        verify_set(&g, family, &s)?;
    }
    let text = match a.format {
        Format::Text => write_constraints_text(&g, &s),
        Format::Json => write_constraints_json(&g, &s),
    };
    let svg = match a.svg {
        Some(_) => {
            let graph = family_graph(&g, family, &s)?;
            Some(render_svg(&g, &Overlays { graph: Some(&graph), constraints: Some(s.edges()), labels: false }))
        }
        None => None,
    };
    Ok(Computed { text, svg })
}

fn output_name(input: &Path, ext: &str) -> PathBuf {
    let stem = if is_stdin(input) { "stdin".into() } else { input.file_stem().unwrap_or_default().to_os_string() };
    let mut name = stem;
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

pub fn constraints(a: &ConstraintsArgs) -> CliResult<()> {
    let family = family(a.family, a.beta)?;
    let many = a.inputs.len() > 1;
    if many && a.output.is_none() {
        return Err(CliError::Usage("several inputs need --output DIR".into()));
    }
    if many && a.svg.is_some() {
        return Err(CliError::Usage("--svg takes a single input".into()));
    }
    let results: Vec<CliResult<Computed>> =
        pool(a.jobs)?.install(|| a.inputs.par_iter().map(|p| constraints_one(p, a, family)).collect());

    let ext = match a.format {
        Format::Text => "txt",
        Format::Json => "json",
    };
    if many {
        let dir = a.output.as_deref().expect("checked above");
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut first_error = None;
    for (input, r) in a.inputs.iter().zip(results) {
        match r {
            Ok(c) => {
                let target = match (&a.output, many) {
                    (Some(dir), true) => Some(dir.join(output_name(input, ext))),
                    (o, _) => o.clone(),
                };
                write_out(target.as_deref(), &c.text)?;
                if let (Some(p), Some(svg)) = (&a.svg, &c.svg) {
                    write_out(Some(p), svg)?;
                }
            }
            Err(e) => {
                if many {
                    eprintln!("proxi: {e}");
                }
                first_error.get_or_insert(e);
            }
        }
    }
    first_error.map_or(Ok(()), Err)
}

pub fn render(a: &RenderArgs) -> CliResult<()> {
    let g = load(&a.input)?;
    let svg = match a.family {
        Some(f) => {
            let family = family(f, a.beta)?;
            let s = min_constraints(&g, family)?;
            let graph = family_graph(&g, family, &s)?;
            render_svg(&g, &Overlays { graph: Some(&graph), constraints: Some(s.edges()), labels: a.labels })
        }
        None => {
            if a.beta.is_some() {
                return Err(CliError::Usage("--beta needs --family beta".into()));
            }
            render_svg(&g, &Overlays { labels: a.labels, ..Overlays::default() })
        }
    };
    write_out(a.output.as_deref(), &svg)
}

pub fn cdt(a: &CdtArgs) -> CliResult<()> {
    let g = load(&a.input)?;
    let t = build_cdt(&g)?;
    write_out(a.output.as_deref(), &write_triangulation_text(&g, &t))
}

pub fn generate_graph(kind: Kind, n: usize, seed: u64, max_edges: Option<usize>) -> PlaneGraph {
    match kind {
        Kind::RandomForest => generate::random_forest(n, seed),
        Kind::RandomGraph => generate::random_plane_graph(n, seed, max_edges.unwrap_or(n)),
        Kind::Zigzag => generate::zigzag(n),
        Kind::Figure2 => generate::figure2(),
        Kind::Figure3 => generate::figure3(),
        Kind::Figure6 => generate::figure6(),
    }
}

pub fn generate(a: &GenerateArgs) -> CliResult<()> {
    let g = generate_graph(a.kind, a.n, seed(a.seed)?, a.max_edges);
    let text = match a.format {
        Format::Text => write_graph_text(&g),
        Format::Json => write_graph_json(&g),
    };
    write_out(a.output.as_deref(), &text)
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub failure: Option<String>,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), failure, detail: detail.into() }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}: {}", self.name, self.detail),
            Some(m) => write!(f, "FAIL {}: {m}", self.name),
        }
    }
}

fn chain(r: &HierarchyReport, sep: &str) -> String {
    r.levels.iter().map(|(n, k)| format!("{n} ({k})")).collect::<Vec<_>>().join(sep)
}

fn hierarchy_check(name: &str, r: HierarchyReport, sep: &str) -> Check {
    Check::new(name, r.violation.as_ref().map(|v| v.to_string()), chain(&r, sep))
}

/// Runs every check on one graph.
pub fn verify_graph(g: &PlaneGraph, oracle: bool) -> proxi_core::Result<Vec<Check>> {
    if oracle && g.edges().len() > ORACLE_EDGE_LIMIT {
        return Err(Error::OracleLimit { edges: g.edges().len(), limit: ORACLE_EDGE_LIMIT });
    }
    let mut families = Vec::new();
    if g.is_forest() {
        families.push(Family::Cmst);
    }
    families.push(Family::Gabriel);
    for &(n, d) in &HIERARCHY_BETAS {
        families.push(Family::Beta(BetaParam::new(n, d)?));
    }
    let mut out = Vec::new();
    for &family in &families {
        let s = min_constraints(g, family)?;
        let missing = missing_edge(g, family, &s)?.map(|e| format!("input edge {e} is not in the graph"));
        out.push(Check::new(format!("containment {family}"), missing, format!("|S| = {}", s.len())));
        if oracle {
            let m = minimality_error(g, family, &s)?;
            out.push(Check::new(format!("minimality {family}"), m, "oracle agrees"));
        }
        if oracle && family == Family::Cmst {
            let r = cmst_constraints_reference(g)?;
            let m = (r != s).then(|| format!("reference gives {:?}", r.edges()));
            out.push(Check::new("cmst reference", m, "same set"));
        }
    }
    if oracle {
        out.push(hierarchy_check("graph hierarchy", verify_hierarchy(g)?, " <= "));
    }
    out.push(hierarchy_check("constraint hierarchy", verify_constraint_hierarchy(g)?, " <= "));
    Ok(out)
}

pub fn verify(a: &VerifyArgs) -> CliResult<()> {
    let results: Vec<CliResult<Vec<Check>>> = pool(a.jobs)?.install(|| {
        a.inputs
            .par_iter()
            .map(|p| {
                let g = load(p)?;
                verify_graph(&g, !a.skip_oracle).map_err(|source| CliError::Input { path: p.clone(), source })
            })
            .collect()
    });
    let mut report = String::new();
    let mut failed = 0;
    let mut first_error = None;
    for (p, r) in a.inputs.iter().zip(results) {
        report.push_str(&format!("{}\n", p.display()));
        match r {
            Ok(checks) => {
                for c in checks {
                    failed += usize::from(c.failure.is_some());
                    report.push_str(&format!("{c}\n"));
                }
            }
            Err(e) => {
                report.push_str(&format!("ERROR {e}\n"));
                first_error.get_or_insert(e);
            }
        }
    }
    write_out(None, &report)?;
    if let Some(e) = first_error {
        return Err(e);
    }
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} checks failed")));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub edges: usize,
    pub constraints: usize,
    pub cdt_ms: f64,
    pub prep_ms: f64,
    pub extract_ms: f64,
    /// Extraction time over that of the previous size.
    pub extract_ratio: Option<f64>,
    /// Extraction time divided by n log2 n.
    pub extract_ns_per_nlogn: f64,
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn timed<T>(f: impl FnOnce() -> proxi_core::Result<T>) -> proxi_core::Result<(T, Duration)> {
    let t = Instant::now();
    let v = f()?;
    Ok((v, t.elapsed()))
}

/// Times triangulation, the per-family preparation (both spanning trees, or
/// the elimination forest) and the extraction for one instance.
fn bench_once(g: &PlaneGraph, family: Family) -> proxi_core::Result<(usize, [Duration; 3])> {
    let (t, cdt) = timed(|| build_cdt(g))?;
    let (k, prep, extract) = match family {
        Family::Cmst => {
            let ((tp, c), prep) = timed(|| cmst_trees(&t))?;
            let (x, extract) = timed(|| extract_cmst_constraints(g, &tp, &c))?;
            (x.constraints.len(), prep, extract)
        }
        Family::Gabriel => {
            let (s, extract) = timed(|| gabriel_constraints_in(&t, g))?;
            (s.len(), Duration::ZERO, extract)
        }
        Family::Beta(b) => {
            let (forest, prep) = timed(|| build_elimination_forest(&t, b))?;
            let (k, extract) = timed(|| {
                let e_set: HashSet<Edge> = g.edges().iter().copied().collect();
                let c = contract_forest(&forest, &e_set);
                Ok(c.leaves().iter().map(|l| c.node_edge(l.node)).collect::<BTreeSet<_>>().len())
            })?;
            (k, prep, extract)
        }
    };
    Ok((k, [cdt, prep, extract]))
}

pub fn bench_rows(family: Family, sizes: &[usize], seed: u64, repeats: usize) -> proxi_core::Result<Vec<BenchRow>> {
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in sizes {
        let g = match family {
            Family::Cmst => generate::random_forest(n, seed),
            _ => generate::random_plane_graph(n, seed, n),
        };
        let mut best = [Duration::MAX; 3];
        let mut k = 0;
        for _ in 0..repeats.max(1) {
            let (count, times) = bench_once(&g, family)?;
            k = count;
            for (b, t) in best.iter_mut().zip(times) {
                *b = (*b).min(t);
            }
        }
        let extract_ms = ms(best[2]);
        let nlogn = n as f64 * (n.max(2) as f64).log2();
        rows.push(BenchRow {
            family: family.to_string(),
            n,
            edges: g.edges().len(),
            constraints: k,
            cdt_ms: ms(best[0]),
            prep_ms: ms(best[1]),
            extract_ms,
            extract_ratio: rows
                .last()
                .filter(|r| r.extract_ms > 0.0)
                .map(|r| (extract_ms / r.extract_ms * 100.0).round() / 100.0),
            extract_ns_per_nlogn: (best[2].as_secs_f64() * 1e10 / nlogn.max(1.0)).round() / 10.0,
        });
    }
    Ok(rows)
}

pub fn bench(a: &BenchArgs) -> CliResult<()> {
    let family = family(a.family, a.beta)?;
    let rows = bench_rows(family, &a.sizes, seed(a.seed)?, a.repeats)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io("<csv>", e.into_error()))?;
    write_out(a.output.as_deref(), &String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Constraints(a) => constraints(a),
        Command::Render(a) => render(a),
        Command::Bench(a) => bench(a),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Cdt(a) => cdt(a),
    }
}
