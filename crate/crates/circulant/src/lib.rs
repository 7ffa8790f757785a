//! Circulant digraphs and directed Hamiltonicity.
//!
//! The crate builds circulant digraphs `Cay(Z_n; S)`, decides whether they
//! carry a directed Hamiltonian circuit by exhaustive backtracking with an
//! independent Held-Karp oracle for cross-checking, and searches the
//! oriented circulants within Jackson's bound (`n <= 4k + 1`, `k != 2`) for
//! non-hamiltonian counterexamples, one multiplier class at a time. The
//! isomorphism module decides when two circulants on the same modulus are
//! isomorphic without being multiplier-equivalent (counterexamples to
//! Adam's conjecture).
//!
//! The known counterexample `Cay(Z_12; {2,3,8})` is 3-diregular, oriented,
//! strongly connected, and non-hamiltonian; every claim is re-checkable
//! through [`hamiltonicity`] and the `verify` command of the companion CLI.

pub mod digraph;
pub mod hamiltonicity;
pub mod isomorphism;
pub mod modular;
pub mod search;

pub use digraph::{rotational_tournament, CirculantSpec, Digraph, GraphError};
pub use hamiltonicity::{
    find_hamiltonian_cycle, held_karp, verify_cycle_witness, HamStatus, HamVerdict, SolveError,
    SolveMethod,
};
pub use isomorphism::{find_adam_pairs, find_isomorphism, find_multiplier, AdamPair, IsoError};
pub use search::{
    enumerate_oriented_sets, multiplier_canonical_form, satisfies_jackson_hypotheses,
    search_counterexamples, BoundMode, CounterexampleRecord, SearchError, SearchOptions,
    SearchReport,
};
