//! Circulant specifications, concrete digraphs, and the structural
//! predicates everything else builds on.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Errors from spec validation and digraph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(usize),
    #[error("generator {s} outside 1..={max} (0 and n would be self-loops)")]
    GeneratorOutOfRange { s: usize, max: usize },
    #[error("duplicate generator {0}")]
    DuplicateGenerator(usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("tournament regularity must be at least 1")]
    TournamentDegreeZero,
}

/// The circulant digraph `Cay(Z_n; S)` by its defining data: vertices are
/// the residues mod `n`, with an arc `i -> (i + s) mod n` for every `s` in
/// the connection set `S`. The set size `k = |S|` is both the in- and the
/// out-degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirculantSpec {
    n: usize,
    connection_set: Vec<usize>,
}

impl CirculantSpec {
    /// Validates and normalizes a connection set. Generators are stored
    /// sorted ascending. Out-of-range steps (`0` and anything `>= n`) and
    /// duplicates are rejected rather than dropped, so `k` never silently
    /// changes.
    pub fn new(n: usize, connection_set: impl Into<Vec<usize>>) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::ModulusTooSmall(n));
        }
        let mut set = connection_set.into();
        set.sort_unstable();
        for &s in &set {
            if s == 0 || s >= n {
                return Err(GraphError::GeneratorOutOfRange { s, max: n - 1 });
            }
        }
        for pair in set.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateGenerator(pair[0]));
            }
        }
        Ok(Self {
            n,
            connection_set: set,
        })
    }

    /// Vertex count (the modulus).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Regularity degree `k = |S|`.
    pub fn k(&self) -> usize {
        self.connection_set.len()
    }

    /// Generators, sorted ascending.
    pub fn connection_set(&self) -> &[usize] {
        &self.connection_set
    }

    /// Builds the digraph: vertices `0..n`, arcs `i -> (i + s) mod n`,
    /// exactly `n * k` of them. Deterministic: equal specs build equal
    /// digraphs.
    pub fn digraph(&self) -> Digraph {
        let mut arcs = Vec::with_capacity(self.n * self.k());
        for i in 0..self.n {
            for &s in &self.connection_set {
                arcs.push((i, (i + s) % self.n));
            }
        }
        Digraph::new(self.n, arcs).expect("a valid spec builds a simple digraph")
    }

    /// Set-level orientation test: `S` and `-S` (mod `n`) are disjoint.
    /// Agrees with [`Digraph::is_oriented`] on the built digraph, without
    /// building it.
    pub fn is_oriented(&self) -> bool {
        self.connection_set
            .iter()
            .all(|&s| self.connection_set.binary_search(&(self.n - s)).is_err())
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cay(Z_{}; {{", self.n)?;
        for (i, s) in self.connection_set.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

/// A finite simple digraph on vertices `0..vertex_count`: no self-loops,
/// no duplicate arcs.
///
/// Both sorted out- and in-neighbor lists and a hash set of arcs are kept:
/// the solvers need fast ascending successor (and predecessor) iteration,
/// the witness and isomorphism checkers need O(1) membership. Values are
/// immutable after construction.
#[derive(Debug, Clone)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arc_set: HashSet<(usize, usize)>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        // Sorted out-lists determine the arc set and the vertex count.
        self.out == other.out
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph from an arc list, rejecting out-of-range
    /// endpoints, self-loops, and duplicates.
    pub fn new(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); vertex_count];
        let mut inn = vec![Vec::new(); vertex_count];
        let mut arc_set = HashSet::new();
        for (u, v) in arcs {
            if u >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    v: u,
                    n: vertex_count,
                });
            }
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange { v, n: vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !arc_set.insert((u, v)) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Self { out, inn, arc_set })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_set.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc_set.contains(&(u, v))
    }

    /// Out-neighbors of `u`, sorted ascending.
    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    /// In-neighbors of `v`, sorted ascending.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// All arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Every vertex has in-degree and out-degree exactly `k`.
    pub fn is_k_diregular(&self, k: usize) -> bool {
        (0..self.vertex_count()).all(|v| self.out_degree(v) == k && self.in_degree(v) == k)
    }

    /// Digon-free: for no pair are both `u -> v` and `v -> u` present.
    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Number of unordered pairs joined by arcs in both directions.
    pub fn digon_count(&self) -> usize {
        self.arcs()
            .filter(|&(u, v)| u < v && self.has_arc(v, u))
            .count()
    }

    /// Every vertex reaches every other along directed paths. Vacuously
    /// true on zero or one vertex. A digraph is strongly connected iff
    /// vertex 0 reaches all vertices in both the digraph and its reverse,
    /// which two linear traversals decide.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        reaches_all(n, &self.out) && reaches_all(n, &self.inn)
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            out: self.inn.clone(),
            inn: self.out.clone(),
            arc_set: self.arc_set.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// The digraph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..vertex_count`.
    pub fn relabeled(&self, perm: &[usize]) -> Digraph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length must match vertex count");
        let mut seen = vec![false; n];
        for &w in perm {
            assert!(w < n && !seen[w], "not a permutation of 0..{n}");
            seen[w] = true;
        }
        Digraph::new(n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling a simple digraph stays simple")
    }

    /// This digraph side by side with `other`: the vertices of `other` are
    /// shifted up by `self.vertex_count()`, arc sets are concatenated, and
    /// no cross arcs are added.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let offset = self.vertex_count();
        let arcs = self
            .arcs()
            .chain(other.arcs().map(|(u, v)| (u + offset, v + offset)));
        Digraph::new(offset + other.vertex_count(), arcs)
            .expect("shifted arc sets cannot collide")
    }
}

fn reaches_all(n: usize, neighbors: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &neighbors[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// `Cay(Z_{2k+1}; {1..k})`: a k-diregular oriented tournament on `2k + 1`
/// vertices, exactly one arc per unordered vertex pair. Two disjoint
/// copies show Jackson's bound `4k + 1` cannot be raised to `4k + 2`.
pub fn rotational_tournament(k: usize) -> Result<Digraph, GraphError> {
    if k == 0 {
        return Err(GraphError::TournamentDegreeZero);
    }
    let spec = CirculantSpec::new(2 * k + 1, (1..=k).collect::<Vec<_>>())?;
    Ok(spec.digraph())
}
