//! Symmetry-reduced search for non-hamiltonian circulants within
//! Jackson's hypotheses.
//!
//! The search enumerates connection sets in lexicographic order, keeps one
//! representative per multiplier class (the lexicographically least
//! member), decides Hamiltonicity for each representative, and
//! double-checks every non-hamiltonian hit against the Held-Karp oracle
//! before reporting it. Reports are deterministic for fixed inputs, no
//! matter how many workers run the solves.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::digraph::CirculantSpec;
use crate::hamiltonicity::{
    find_hamiltonian_cycle, held_karp, HamStatus, HamVerdict, SolveError, HELD_KARP_MAX_VERTICES,
};
use crate::modular::least_multiplier_image;

/// Vertex-count bound imposed on a k-diregular instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// The conjectured bound `n <= 4k + 1`.
    Strict4kPlus1,
    /// The weakened bound `n <= 4k`.
    Weak4k,
}

impl BoundMode {
    pub fn max_vertices(self, k: usize) -> usize {
        match self {
            BoundMode::Strict4kPlus1 => 4 * k + 1,
            BoundMode::Weak4k => 4 * k,
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundMode::Strict4kPlus1 => "4k+1",
            BoundMode::Weak4k => "4k",
        })
    }
}

impl FromStr for BoundMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "4k+1" => Ok(BoundMode::Strict4kPlus1),
            "4k" => Ok(BoundMode::Weak4k),
            other => Err(format!("unknown bound {other:?}, expected \"4k+1\" or \"4k\"")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search range must satisfy 2 <= min <= max <= {limit}, got {n_min}..={n_max}")]
    InvalidRange {
        n_min: usize,
        n_max: usize,
        limit: usize,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
    /// The worst possible bug in this artifact: the two deciders disagree.
    #[error("solver disagreement on {spec}: backtracking says {backtracking}, oracle says {oracle}")]
    SolverDisagreement {
        spec: CirculantSpec,
        backtracking: HamStatus,
        oracle: HamStatus,
    },
}

/// Knobs for a search run. Defaults follow the conjecture's hypotheses:
/// oriented sets only, k = 2 excluded, strict bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub bound: BoundMode,
    /// Also scan the k = 2 case the hypotheses exclude.
    pub include_k2: bool,
    /// Also scan digon-carrying (non-oriented) connection sets.
    pub allow_digons: bool,
}

impl SearchOptions {
    pub fn new(bound: BoundMode) -> Self {
        Self {
            bound,
            include_k2: false,
            allow_digons: false,
        }
    }
}

/// A hypothesis-satisfying circulant proven non-hamiltonian, together
/// with its multiplier-class representative and exhaustion certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleRecord {
    pub spec: CirculantSpec,
    /// Least member of the spec's multiplier class; equals the spec's own
    /// connection set for the representatives the search emits.
    pub canonical_set: Vec<usize>,
    /// Always non-hamiltonian, and independently confirmed by the oracle.
    pub verdict: HamVerdict,
}

impl CounterexampleRecord {
    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn k(&self) -> usize {
        self.spec.k()
    }
}

/// The slice of a search run for one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusScan {
    pub n: usize,
    /// Connection sets enumerated (before multiplier reduction).
    pub instances: u64,
    /// Class representatives actually solved.
    pub classes: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
}

/// Full accounting of a search run.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n_min: usize,
    pub n_max: usize,
    pub options: SearchOptions,
    pub instances_enumerated: u64,
    pub classes_enumerated: u64,
    /// One record per multiplier class, sorted by `(n, canonical_set)`.
    pub counterexamples: Vec<CounterexampleRecord>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed: Duration,
}

/// All size-k subsets of `{1..n-1}` whose circulant is oriented, in
/// lexicographic order. Empty when `2k + 1 > n`: the nonzero residues
/// split into inverse pairs `{s, n-s}` (plus `n/2`, its own inverse, for
/// even n), and an oriented set takes at most one residue from each pair.
pub fn enumerate_oriented_sets(n: usize, k: usize) -> Vec<CirculantSpec> {
    enumerate_sets(n, k, true)
}

fn enumerate_sets(n: usize, k: usize, oriented_only: bool) -> Vec<CirculantSpec> {
    (1..n)
        .combinations(k)
        .map(|set| CirculantSpec::new(n, set).expect("generators drawn from 1..n"))
        .filter(|spec| !oriented_only || spec.is_oriented())
        .collect()
}

/// Canonical representative of the spec's multiplier class: the
/// lexicographically least image of the connection set under the units
/// of `Z_n`. Idempotent and constant on each class.
pub fn multiplier_canonical_form(spec: &CirculantSpec) -> Vec<usize> {
    least_multiplier_image(spec.n(), spec.connection_set())
}

/// Jackson's hypotheses at the connection-set level: oriented, `k != 2`,
/// and `n` within the bound. Diregularity holds for every circulant by
/// construction and is not re-checked.
pub fn satisfies_jackson_hypotheses(spec: &CirculantSpec, bound: BoundMode) -> bool {
    spec.is_oriented() && spec.k() != 2 && spec.n() <= bound.max_vertices(spec.k())
}

fn admissible(spec: &CirculantSpec, options: &SearchOptions) -> bool {
    (options.allow_digons || spec.is_oriented())
        && (options.include_k2 || spec.k() != 2)
        && spec.n() <= options.bound.max_vertices(spec.k())
}

/// Searches `[n_min, n_max]` under the conjecture's default hypotheses.
pub fn search_counterexamples(
    n_min: usize,
    n_max: usize,
    bound: BoundMode,
) -> Result<SearchReport, SearchError> {
    run_search(n_min, n_max, SearchOptions::new(bound), |_| {})
}

/// Searches `[n_min, n_max]` with explicit options, invoking
/// `on_modulus` after each modulus completes (for progress reporting).
///
/// Solves within a modulus may run on the current rayon pool; results are
/// merged back in enumeration order, so the report does not depend on
/// worker count or scheduling.
pub fn run_search(
    n_min: usize,
    n_max: usize,
    options: SearchOptions,
    mut on_modulus: impl FnMut(&ModulusScan),
) -> Result<SearchReport, SearchError> {
    if n_min < 2 || n_min > n_max || n_max > HELD_KARP_MAX_VERTICES {
        return Err(SearchError::InvalidRange {
            n_min,
            n_max,
            limit: HELD_KARP_MAX_VERTICES,
        });
    }
    let started = Instant::now();
    let mut report = SearchReport {
        n_min,
        n_max,
        options,
        instances_enumerated: 0,
        classes_enumerated: 0,
        counterexamples: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in n_min..=n_max {
        let scan = scan_modulus(n, options)?;
        on_modulus(&scan);
        report.instances_enumerated += scan.instances;
        report.classes_enumerated += scan.classes;
        report.counterexamples.extend(scan.counterexamples);
    }
    report
        .counterexamples
        .sort_by(|a, b| (a.n(), &a.canonical_set).cmp(&(b.n(), &b.canonical_set)));
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Scans a single modulus: every k admitted by the options, one
/// representative per multiplier class, every non-hamiltonian verdict
/// re-proved by the oracle.
pub fn scan_modulus(n: usize, options: SearchOptions) -> Result<ModulusScan, SearchError> {
    let mut instances = 0u64;
    let mut representatives: Vec<CirculantSpec> = Vec::new();
    for k in 1..n {
        if n > options.bound.max_vertices(k) {
            continue;
        }
        if k == 2 && !options.include_k2 {
            continue;
        }
        if !options.allow_digons && 2 * k + 1 > n {
            continue; // no oriented set of size k exists
        }
        let specs = enumerate_sets(n, k, !options.allow_digons);
        instances += specs.len() as u64;
        representatives.extend(
            specs
                .into_iter()
                .filter(|spec| multiplier_canonical_form(spec) == spec.connection_set())
                .filter(|spec| admissible(spec, &options)),
        );
    }
    let classes = representatives.len() as u64;

    let outcomes: Result<Vec<(CirculantSpec, HamVerdict)>, SearchError> = representatives
        .into_par_iter()
        .map(|spec| {
            let digraph = spec.digraph();
            let verdict = find_hamiltonian_cycle(&digraph)?;
            if verdict.status == HamStatus::NonHamiltonian {
                let oracle = held_karp(&digraph)?;
                if oracle.status != verdict.status {
                    return Err(SearchError::SolverDisagreement {
                        spec,
                        backtracking: verdict.status,
                        oracle: oracle.status,
                    });
                }
            }
            Ok((spec, verdict))
        })
        .collect();

    let mut counterexamples: Vec<CounterexampleRecord> = outcomes?
        .into_iter()
        .filter(|(_, verdict)| verdict.status == HamStatus::NonHamiltonian)
        .map(|(spec, verdict)| CounterexampleRecord {
            canonical_set: spec.connection_set().to_vec(),
            spec,
            verdict,
        })
        .collect();
    counterexamples.sort_by(|a, b| a.canonical_set.cmp(&b.canonical_set));

    Ok(ModulusScan {
        n,
        instances,
        classes,
        counterexamples,
    })
}
