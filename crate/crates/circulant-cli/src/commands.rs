//! Command implementations. Every command prints a key-value report with
//! a fixed field order; the trailing `elapsed` line is the only content
//! that varies between identical runs.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use serde::Serialize;

use circulant::digraph::{CirculantSpec, Digraph};
use circulant::hamiltonicity::{
    find_hamiltonian_cycle, held_karp, verify_cycle_witness, HamStatus, HELD_KARP_MAX_VERTICES,
};
use circulant::isomorphism::{
    find_adam_pairs, find_isomorphism, find_multiplier, verify_isomorphism, MAX_ISO_VERTICES,
};
use circulant::modular::least_multiplier_image;
use circulant::search::{run_search, BoundMode, SearchError, SearchOptions, SearchReport};

use crate::formats;

/// Usage errors exit with 2, failed claims and internal errors with 1.
pub enum CmdError {
    Usage(String),
    Failure(String),
}

impl From<circulant::GraphError> for CmdError {
    fn from(e: circulant::GraphError) -> Self {
        CmdError::Usage(e.to_string())
    }
}

impl From<circulant::SolveError> for CmdError {
    fn from(e: circulant::SolveError) -> Self {
        CmdError::Usage(e.to_string())
    }
}

impl From<circulant::IsoError> for CmdError {
    fn from(e: circulant::IsoError) -> Self {
        CmdError::Usage(e.to_string())
    }
}

impl From<SearchError> for CmdError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::SolverDisagreement { .. } => CmdError::Failure(e.to_string()),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

fn print_header(command: &str) {
    println!("command: {command}");
    println!("tool-version: {}", env!("CARGO_PKG_VERSION"));
}

fn print_elapsed(started: Instant) {
    println!("elapsed: {:?}", started.elapsed());
}

fn format_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn format_vertices(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    items.join(",")
}

/// The checks `verify` runs against the known counterexample. Takes the
/// digraph separately from the spec so tests can tamper with it; the
/// digraph must stay within the Held-Karp size limit.
pub fn counterexample_checks(spec: &CirculantSpec, g: &Digraph) -> Vec<(String, bool)> {
    let (n, k) = (spec.n(), spec.k());
    let backtracking = find_hamiltonian_cycle(g).expect("digraph is non-empty");
    let oracle = held_karp(g).expect("digraph is within the oracle limit");
    vec![
        (format!("{k}-diregular"), g.is_k_diregular(k)),
        ("oriented (digon-free)".into(), g.is_oriented()),
        ("strongly connected".into(), g.is_strongly_connected()),
        (
            format!("satisfies n <= 4k+1 ({n} <= {}) with k = {k} != 2", 4 * k + 1),
            circulant::satisfies_jackson_hypotheses(spec, BoundMode::Strict4kPlus1),
        ),
        (
            format!("satisfies n <= 4k ({n} <= {}) with k = {k} != 2", 4 * k),
            circulant::satisfies_jackson_hypotheses(spec, BoundMode::Weak4k),
        ),
        (
            format!(
                "non-hamiltonian by backtracking ({} nodes explored)",
                backtracking.nodes_explored
            ),
            backtracking.status == HamStatus::NonHamiltonian,
        ),
        (
            "non-hamiltonian by held-karp oracle".into(),
            oracle.status == HamStatus::NonHamiltonian,
        ),
    ]
}

pub fn cmd_verify() -> Result<ExitCode, CmdError> {
    let started = Instant::now();
    let spec = CirculantSpec::new(12, vec![2, 3, 8]).expect("the counterexample spec is valid");
    let g = spec.digraph();

    print_header("verify");
    println!("instance: {spec}");
    let checks = counterexample_checks(&spec, &g);
    let passed = checks.iter().filter(|(_, ok)| *ok).count();
    for (label, ok) in &checks {
        println!("[{}] {label}", if *ok { "PASS" } else { "FAIL" });
    }
    println!("result: {passed}/{} checks passed", checks.len());
    print_elapsed(started);
    Ok(if passed == checks.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn cmd_ham(n: usize, set: Vec<usize>, oracle: bool, witness: bool) -> Result<ExitCode, CmdError> {
    let started = Instant::now();
    let spec = CirculantSpec::new(n, set)?;
    if oracle && n > HELD_KARP_MAX_VERTICES {
        return Err(CmdError::Usage(format!(
            "--oracle supports at most {HELD_KARP_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let g = spec.digraph();
    let verdict = find_hamiltonian_cycle(&g).expect("spec guarantees a non-empty digraph");

    print_header("ham");
    println!("spec: {spec}");
    println!("status: {}", verdict.status);
    println!("method: {}", verdict.method);
    println!("nodes-explored: {}", verdict.nodes_explored);
    if witness {
        match &verdict.witness {
            Some(cycle) => {
                if !verify_cycle_witness(&g, cycle) {
                    return Err(CmdError::Failure(
                        "internal error: witness failed verification".into(),
                    ));
                }
                println!("witness: {}", format_vertices(cycle));
            }
            None => println!("witness: none"),
        }
    }
    if oracle {
        let check = held_karp(&g)?;
        if check.status != verdict.status {
            return Err(CmdError::Failure(format!(
                "solver disagreement on {spec}: backtracking says {}, oracle says {}",
                verdict.status, check.status
            )));
        }
        println!("oracle: {} (statuses agree)", check.status);
    }
    print_elapsed(started);
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SearchJson<'a> {
    tool_version: &'a str,
    command: &'a str,
    n_min: usize,
    n_max: usize,
    bound: String,
    include_k2: bool,
    allow_digons: bool,
    instances_enumerated: u64,
    classes_enumerated: u64,
    counterexamples: Vec<RecordJson>,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct RecordJson {
    n: usize,
    k: usize,
    connection_set: Vec<usize>,
    canonical_set: Vec<usize>,
    status: String,
    method: String,
    nodes_explored: u64,
    oracle_confirmed: bool,
}

fn search_json(report: &SearchReport) -> SearchJson<'_> {
    SearchJson {
        tool_version: env!("CARGO_PKG_VERSION"),
        command: "search",
        n_min: report.n_min,
        n_max: report.n_max,
        bound: report.options.bound.to_string(),
        include_k2: report.options.include_k2,
        allow_digons: report.options.allow_digons,
        instances_enumerated: report.instances_enumerated,
        classes_enumerated: report.classes_enumerated,
        counterexamples: report
            .counterexamples
            .iter()
            .map(|r| RecordJson {
                n: r.n(),
                k: r.k(),
                connection_set: r.spec.connection_set().to_vec(),
                canonical_set: r.canonical_set.clone(),
                status: r.verdict.status.to_string(),
                method: r.verdict.method.to_string(),
                nodes_explored: r.verdict.nodes_explored,
                oracle_confirmed: true,
            })
            .collect(),
        elapsed_ms: report.elapsed.as_millis(),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_search(
    min_n: usize,
    max_n: usize,
    bound: BoundMode,
    include_k2: bool,
    allow_digons: bool,
    json: Option<&Path>,
    workers: Option<usize>,
) -> Result<ExitCode, CmdError> {
    let started = Instant::now();
    let options = SearchOptions {
        bound,
        include_k2,
        allow_digons,
    };

    print_header("search");
    println!("range: {min_n}..={max_n}");
    println!("bound: {bound}");
    println!("include-k2: {include_k2}");
    println!("allow-digons: {allow_digons}");
    match workers {
        Some(w) => println!("workers: {w}"),
        None => println!("workers: auto"),
    }

    let progress = |scan: &circulant::search::ModulusScan| {
        println!(
            "n={}: instances={} classes={} counterexamples={}",
            scan.n,
            scan.instances,
            scan.classes,
            scan.counterexamples.len()
        );
    };
    let report = match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| CmdError::Failure(format!("cannot build worker pool: {e}")))?;
            pool.install(|| run_search(min_n, max_n, options, progress))?
        }
        None => run_search(min_n, max_n, options, progress)?,
    };

    println!("instances-enumerated: {}", report.instances_enumerated);
    println!("classes-enumerated: {}", report.classes_enumerated);
    println!("counterexamples-found: {}", report.counterexamples.len());
    for record in &report.counterexamples {
        println!(
            "  n={} k={} set={} nodes-explored={} oracle-confirmed",
            record.n(),
            record.k(),
            format_set(&record.canonical_set),
            record.verdict.nodes_explored
        );
    }
    if let Some(path) = json {
        let doc = serde_json::to_string_pretty(&search_json(&report))
            .expect("report serialization cannot fail");
        std::fs::write(path, doc + "\n")
            .map_err(|e| CmdError::Failure(format!("cannot write {}: {e}", path.display())))?;
        println!("report-written: {}", path.display());
    }
    print_elapsed(started);
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_iso(n: usize, set_a: Vec<usize>, set_b: Vec<usize>) -> Result<ExitCode, CmdError> {
    let started = Instant::now();
    let spec_a = CirculantSpec::new(n, set_a)?;
    let spec_b = CirculantSpec::new(n, set_b)?;

    print_header("iso");
    println!("modulus: {n}");
    println!("set-a: {}", format_set(spec_a.connection_set()));
    println!("set-b: {}", format_set(spec_b.connection_set()));

    match find_multiplier(n, spec_a.connection_set(), spec_b.connection_set()) {
        Some(unit) => println!("multiplier-equivalent: yes (unit {unit})"),
        None => println!("multiplier-equivalent: no"),
    }

    let (ga, gb) = (spec_a.digraph(), spec_b.digraph());
    match find_isomorphism(&ga, &gb)? {
        Some(mapping) => {
            if !verify_isomorphism(&ga, &gb, &mapping) {
                return Err(CmdError::Failure(
                    "internal error: isomorphism failed verification".into(),
                ));
            }
            println!("isomorphic: yes");
            println!("permutation: {}", format_vertices(&mapping));
        }
        None => println!("isomorphic: no"),
    }
    print_elapsed(started);
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_adam(n: usize, k: usize, anchor: Option<Vec<usize>>) -> Result<ExitCode, CmdError> {
    let started = Instant::now();
    if n > MAX_ISO_VERTICES {
        return Err(CmdError::Usage(format!(
            "adam search supports at most {MAX_ISO_VERTICES} vertices, got {n}"
        )));
    }
    let anchor_spec = anchor.map(|set| CirculantSpec::new(n, set)).transpose()?;

    print_header("adam");
    println!("modulus: {n}");
    println!("k: {k}");
    match &anchor_spec {
        Some(spec) => println!(
            "anchor: {} (class {})",
            format_set(spec.connection_set()),
            format_set(&least_multiplier_image(n, spec.connection_set()))
        ),
        None => println!("anchor: none"),
    }

    let pairs = find_adam_pairs(n, k, anchor_spec.as_ref().map(|s| s.connection_set()))?;
    println!("pairs-found: {}", pairs.len());
    for pair in &pairs {
        println!(
            "  {} ~ {} via {}",
            format_set(&pair.set_a),
            format_set(&pair.set_b),
            format_vertices(&pair.mapping)
        );
    }
    print_elapsed(started);
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Dot,
    Edges,
}

pub fn cmd_export(n: usize, set: Vec<usize>, format: ExportFormat) -> Result<ExitCode, CmdError> {
    let spec = CirculantSpec::new(n, set)?;
    let g = spec.digraph();
    let doc = match format {
        ExportFormat::Dot => formats::write_dot(&g),
        ExportFormat::Edges => formats::write_edges(&g),
    };
    print!("{doc}");
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_seven_checks_pass_on_the_real_counterexample() {
        let spec = CirculantSpec::new(12, vec![2, 3, 8]).unwrap();
        let checks = counterexample_checks(&spec, &spec.digraph());
        assert_eq!(checks.len(), 7);
        assert!(checks.iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn a_flipped_arc_is_detected() {
        let spec = CirculantSpec::new(12, vec![2, 3, 8]).unwrap();
        let mut arcs: Vec<(usize, usize)> = spec.digraph().arcs().collect();
        // reverse one arc: 0 -> 2 becomes 2 -> 0
        let pos = arcs.iter().position(|&a| a == (0, 2)).unwrap();
        arcs[pos] = (2, 0);
        let tampered = Digraph::new(12, arcs).unwrap();
        let checks = counterexample_checks(&spec, &tampered);
        assert!(checks.iter().any(|(_, ok)| !*ok));
    }
}
