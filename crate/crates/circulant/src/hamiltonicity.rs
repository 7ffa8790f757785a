//! Directed-Hamiltonicity decisions: a deterministic exhaustive
//! backtracking solver, an independent Held-Karp bitmask oracle, and a
//! witness checker that trusts neither.
//!
//! The two deciders share nothing but the digraph; agreement between them
//! is what turns a "no circuit found" into a checked claim.

use thiserror::Error;

use crate::digraph::Digraph;

/// Largest vertex count [`held_karp`] accepts. Bounds the reachability
/// table at `2^24` masks of 24 bits each.
pub const HELD_KARP_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("hamiltonicity is undefined on the empty digraph")]
    EmptyGraph,
    #[error("{n} vertices exceed the Held-Karp limit of {max}")]
    TooManyVertices { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HamStatus {
    Hamiltonian,
    NonHamiltonian,
}

impl std::fmt::Display for HamStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HamStatus::Hamiltonian => "HAMILTONIAN",
            HamStatus::NonHamiltonian => "NON_HAMILTONIAN",
        })
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Backtracking,
    HeldKarp,
    /// Rejected without search: the digraph is not strongly connected.
    ShortCircuitScc,
}

impl std::fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveMethod::Backtracking => "backtracking",
            SolveMethod::HeldKarp => "held-karp",
            SolveMethod::ShortCircuitScc => "short-circuit-scc",
        })
    }
}

/// Outcome of a Hamiltonicity decision: either a circuit witness or an
/// exhaustion certificate with its deterministic node count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamVerdict {
    pub status: HamStatus,
    /// Present iff `status` is `Hamiltonian`. Starts at vertex 0 and lists
    /// every vertex exactly once; the closing arc back to 0 is implied.
    pub witness: Option<Vec<usize>>,
    /// Backtracking extension attempts, counting the initial placement of
    /// vertex 0. Zero for short-circuited and Held-Karp verdicts.
    pub nodes_explored: u64,
    pub method: SolveMethod,
}

impl HamVerdict {
    pub fn is_hamiltonian(&self) -> bool {
        self.status == HamStatus::Hamiltonian
    }
}

/// Decides Hamiltonicity by exhaustive depth-first search.
///
/// The start vertex is fixed at 0 (circuits are rotation-invariant) and
/// successors are tried in ascending order, so the search is
/// deterministic and a found witness is the lexicographically least
/// circuit. Two prunings are applied: a digraph that is not strongly
/// connected is rejected without search, and a partial path is abandoned
/// as soon as some unvisited vertex can no longer be entered (from the
/// path tail or another unvisited vertex) or exited (to vertex 0 or
/// another unvisited vertex). Neither pruning can discard a completable
/// path, so an exhausted search certifies non-hamiltonicity.
pub fn find_hamiltonian_cycle(g: &Digraph) -> Result<HamVerdict, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_strongly_connected() {
        return Ok(HamVerdict {
            status: HamStatus::NonHamiltonian,
            witness: None,
            nodes_explored: 0,
            method: SolveMethod::ShortCircuitScc,
        });
    }
    let mut search = Search {
        g,
        path: Vec::with_capacity(n),
        visited: vec![false; n],
        nodes: 0,
    };
    search.path.push(0);
    search.visited[0] = true;
    let found = search.extend();
    Ok(HamVerdict {
        status: if found {
            HamStatus::Hamiltonian
        } else {
            HamStatus::NonHamiltonian
        },
        witness: found.then_some(search.path),
        nodes_explored: search.nodes,
        method: SolveMethod::Backtracking,
    })
}

struct Search<'g> {
    g: &'g Digraph,
    path: Vec<usize>,
    visited: Vec<bool>,
    nodes: u64,
}

impl Search<'_> {
    /// One extension attempt: the tail of `path` was just placed. Counts
    /// itself, checks for completion or a dead end, then recurses on each
    /// admissible successor in ascending order.
    fn extend(&mut self) -> bool {
        self.nodes += 1;
        let g = self.g;
        let tail = *self.path.last().expect("path starts non-empty");
        if self.path.len() == g.vertex_count() {
            return g.has_arc(tail, 0);
        }
        if self.dead_end(tail) {
            return false;
        }
        for &next in g.out_neighbors(tail) {
            if !self.visited[next] {
                self.visited[next] = true;
                self.path.push(next);
                if self.extend() {
                    return true;
                }
                self.path.pop();
                self.visited[next] = false;
            }
        }
        false
    }

    /// True when some unvisited vertex has no in-option (an unvisited
    /// in-neighbor or the path tail) or no out-option (an unvisited
    /// out-neighbor or vertex 0). Interior path vertices have both their
    /// circuit arcs fixed already, so they cannot serve either role.
    fn dead_end(&self, tail: usize) -> bool {
        for u in 0..self.g.vertex_count() {
            if self.visited[u] {
                continue;
            }
            let enterable = self
                .g
                .in_neighbors(u)
                .iter()
                .any(|&w| !self.visited[w] || w == tail);
            if !enterable {
                return true;
            }
            let exitable = self
                .g
                .out_neighbors(u)
                .iter()
                .any(|&w| !self.visited[w] || w == 0);
            if !exitable {
                return true;
            }
        }
        false
    }
}

/// Independent Hamiltonicity oracle: Held-Karp bitmask dynamic
/// programming over the vertex subsets containing 0.
///
/// Bit `v` of `reach[mask]` records whether some directed path from 0
/// visits exactly the vertices of `mask` and stops at `v`. The digraph is
/// Hamiltonian iff an end vertex of the full mask has an arc back to 0; a
/// witness is then reconstructed by walking the table backwards, taking
/// the smallest predecessor at each step. Verdicts agree with
/// [`find_hamiltonian_cycle`] on every input.
pub fn held_karp(g: &Digraph) -> Result<HamVerdict, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > HELD_KARP_MAX_VERTICES {
        return Err(SolveError::TooManyVertices {
            n,
            max: HELD_KARP_MAX_VERTICES,
        });
    }
    let mask_of = |neighbors: &[usize]| neighbors.iter().fold(0u32, |m, &w| m | 1 << w);
    let out_mask: Vec<u32> = (0..n).map(|v| mask_of(g.out_neighbors(v))).collect();
    let in_mask: Vec<u32> = (0..n).map(|v| mask_of(g.in_neighbors(v))).collect();
    let full: u32 = (1 << n) - 1;

    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1; // the path "0" visits {0} and ends at 0
    for mask in (1..=full).step_by(2) {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut nexts = out_mask[v] & !mask;
            while nexts != 0 {
                let w = nexts.trailing_zeros();
                nexts &= nexts - 1;
                reach[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }

    let closers = reach[full as usize] & in_mask[0];
    if closers == 0 {
        return Ok(HamVerdict {
            status: HamStatus::NonHamiltonian,
            witness: None,
            nodes_explored: 0,
            method: SolveMethod::HeldKarp,
        });
    }

    let mut cycle = Vec::with_capacity(n);
    let mut v = closers.trailing_zeros() as usize;
    let mut mask = full;
    while mask != 1 {
        cycle.push(v);
        let rest = mask & !(1 << v);
        let preds = reach[rest as usize] & in_mask[v];
        debug_assert_ne!(preds, 0, "reach table admits a predecessor");
        v = preds.trailing_zeros() as usize;
        mask = rest;
    }
    cycle.push(0);
    cycle.reverse();
    debug_assert!(verify_cycle_witness(g, &cycle));
    Ok(HamVerdict {
        status: HamStatus::Hamiltonian,
        witness: Some(cycle),
        nodes_explored: 0,
        method: SolveMethod::HeldKarp,
    })
}

/// Pure witness checker, independent of both solvers: true iff `witness`
/// is a permutation of all vertices and every consecutive arc plus the
/// closing arc exists. Malformed witnesses return false, never panic.
/// The empty witness on the empty digraph counts as valid (the unique
/// permutation of zero vertices, with no arcs to check).
pub fn verify_cycle_witness(g: &Digraph, witness: &[usize]) -> bool {
    let n = g.vertex_count();
    if witness.len() != n {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    for &v in witness {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    witness.windows(2).all(|pair| g.has_arc(pair[0], pair[1])) && g.has_arc(witness[n - 1], witness[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{rotational_tournament, CirculantSpec, Digraph};

    fn circulant(n: usize, set: &[usize]) -> Digraph {
        CirculantSpec::new(n, set.to_vec()).unwrap().digraph()
    }

    #[test]
    fn counterexample_is_non_hamiltonian_by_both_methods() {
        let h = circulant(12, &[2, 3, 8]);
        let bt = find_hamiltonian_cycle(&h).unwrap();
        assert_eq!(bt.status, HamStatus::NonHamiltonian);
        assert_eq!(bt.method, SolveMethod::Backtracking);
        assert!(bt.nodes_explored >= 1);
        let hk = held_karp(&h).unwrap();
        assert_eq!(hk.status, HamStatus::NonHamiltonian);
        assert_eq!(hk.method, SolveMethod::HeldKarp);
    }

    #[test]
    fn directed_cycle_yields_itself_as_witness() {
        let c6 = circulant(6, &[1]);
        let verdict = find_hamiltonian_cycle(&c6).unwrap();
        assert_eq!(verdict.status, HamStatus::Hamiltonian);
        assert_eq!(verdict.witness.as_deref(), Some(&[0, 1, 2, 3, 4, 5][..]));
        assert_eq!(held_karp(&c6).unwrap().status, HamStatus::Hamiltonian);
    }

    #[test]
    fn disconnected_digraph_short_circuits() {
        let triangle = circulant(3, &[1]);
        let two = triangle.disjoint_union(&triangle);
        let verdict = find_hamiltonian_cycle(&two).unwrap();
        assert_eq!(verdict.status, HamStatus::NonHamiltonian);
        assert_eq!(verdict.method, SolveMethod::ShortCircuitScc);
        assert_eq!(verdict.nodes_explored, 0);
    }

    #[test]
    fn small_tournament_is_hamiltonian_and_oracle_agrees() {
        let g = rotational_tournament(2).unwrap();
        let bt = find_hamiltonian_cycle(&g).unwrap();
        let hk = held_karp(&g).unwrap();
        assert_eq!(bt.status, HamStatus::Hamiltonian);
        assert_eq!(hk.status, HamStatus::Hamiltonian);
        assert!(verify_cycle_witness(&g, bt.witness.as_ref().unwrap()));
        assert!(verify_cycle_witness(&g, hk.witness.as_ref().unwrap()));
    }

    #[test]
    fn complete_digraph_on_three_vertices_is_hamiltonian() {
        let k3 = Digraph::new(3, vec![(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(held_karp(&k3).unwrap().status, HamStatus::Hamiltonian);
        assert_eq!(
            find_hamiltonian_cycle(&k3).unwrap().status,
            HamStatus::Hamiltonian
        );
    }

    #[test]
    fn witness_checker_accepts_only_real_circuits() {
        let c5 = circulant(5, &[1]);
        assert!(verify_cycle_witness(&c5, &[0, 1, 2, 3, 4]));
        assert!(!verify_cycle_witness(&c5, &[0, 2, 4, 1, 3])); // 0 -> 2 missing
        assert!(!verify_cycle_witness(&c5, &[0, 1, 2, 3])); // vertex 4 missing
        assert!(!verify_cycle_witness(&c5, &[0, 1, 2, 3, 3])); // repeated vertex
        assert!(!verify_cycle_witness(&c5, &[0, 1, 2, 3, 5])); // out of range
        // any rotation is still a circuit
        assert!(verify_cycle_witness(&c5, &[2, 3, 4, 0, 1]));
    }

    #[test]
    fn degenerate_sizes() {
        let empty = Digraph::new(0, vec![]).unwrap();
        assert_eq!(find_hamiltonian_cycle(&empty).unwrap_err(), SolveError::EmptyGraph);
        assert_eq!(held_karp(&empty).unwrap_err(), SolveError::EmptyGraph);
        assert!(verify_cycle_witness(&empty, &[]));

        let single = Digraph::new(1, vec![]).unwrap();
        let verdict = find_hamiltonian_cycle(&single).unwrap();
        assert_eq!(verdict.status, HamStatus::NonHamiltonian);
        assert_eq!(verdict.method, SolveMethod::Backtracking);
        assert_eq!(verdict.nodes_explored, 1);
        assert_eq!(held_karp(&single).unwrap().status, HamStatus::NonHamiltonian);
        assert!(!verify_cycle_witness(&single, &[0])); // needs a self-loop
    }

    #[test]
    fn oracle_rejects_oversized_digraphs() {
        let big = Digraph::new(25, vec![]).unwrap();
        assert_eq!(
            held_karp(&big).unwrap_err(),
            SolveError::TooManyVertices { n: 25, max: 24 }
        );
    }

    #[test]
    fn repeated_solves_are_identical() {
        for g in [circulant(12, &[2, 3, 8]), circulant(9, &[1, 2, 4])] {
            let first = find_hamiltonian_cycle(&g).unwrap();
            let second = find_hamiltonian_cycle(&g).unwrap();
            assert_eq!(first, second);
            assert_eq!(held_karp(&g).unwrap(), held_karp(&g).unwrap());
        }
    }

    #[test]
    fn exhaustion_node_count_is_a_stable_regression_value() {
        let verdict = find_hamiltonian_cycle(&circulant(12, &[2, 3, 8])).unwrap();
        assert_eq!(verdict.nodes_explored, 904);
    }
}
