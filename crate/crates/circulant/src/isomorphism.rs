//! Multiplier equivalence versus genuine digraph isomorphism.
//!
//! Multiplying a connection set by a unit of `Z_n` always yields an
//! isomorphic circulant (`v -> a*v` maps arcs to arcs). Adam's conjecture
//! claimed the converse; [`find_adam_pairs`] hunts for the refuting pairs:
//! circulants on the same modulus that are isomorphic although no
//! multiplier maps one connection set onto the other.

use itertools::Itertools;
use thiserror::Error;

use crate::digraph::{CirculantSpec, Digraph, GraphError};
use crate::modular::{least_multiplier_image, multiply_set, units};

/// Largest vertex count the backtracking isomorphism search accepts.
pub const MAX_ISO_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("{n} vertices exceed the isomorphism limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("connection-set size must be at least 1")]
    DegreeZero,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Smallest unit `a` of `Z_n` with `a * set_a = set_b` (mod n), if any.
pub fn find_multiplier(n: usize, set_a: &[usize], set_b: &[usize]) -> Option<usize> {
    let mut target = set_b.to_vec();
    target.sort_unstable();
    units(n)
        .into_iter()
        .find(|&a| multiply_set(n, set_a, a) == target)
}

/// Arc-by-arc check that `mapping` is a bijection sending the arcs of
/// `g1` exactly onto the arcs of `g2`. Independent of the search in
/// [`find_isomorphism`].
pub fn verify_isomorphism(g1: &Digraph, g2: &Digraph, mapping: &[usize]) -> bool {
    let n = g1.vertex_count();
    if g2.vertex_count() != n || mapping.len() != n || g1.arc_count() != g2.arc_count() {
        return false;
    }
    let mut seen = vec![false; n];
    for &w in mapping {
        if w >= n || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    g1.arcs().all(|(u, v)| g2.has_arc(mapping[u], mapping[v]))
}

/// Backtracking isomorphism search with degree-profile pruning.
///
/// Vertices of `g1` are assigned in ascending order; candidates in `g2`
/// are tried in ascending order and must match on in/out-degree and on
/// adjacency with everything already mapped. The first complete mapping
/// found is returned. Mismatched vertex counts, arc counts, degree
/// profiles, or digon counts short-circuit to `None` before any search.
pub fn find_isomorphism(g1: &Digraph, g2: &Digraph) -> Result<Option<Vec<usize>>, IsoError> {
    for g in [g1, g2] {
        if g.vertex_count() > MAX_ISO_VERTICES {
            return Err(IsoError::TooManyVertices {
                n: g.vertex_count(),
                max: MAX_ISO_VERTICES,
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.arc_count() != g2.arc_count()
        || degree_profile(g1) != degree_profile(g2)
        || g1.digon_count() != g2.digon_count()
    {
        return Ok(None);
    }
    let n = g1.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut search = IsoSearch {
        g1,
        g2,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.assign(0) {
        debug_assert!(verify_isomorphism(g1, g2, &search.mapping));
        Ok(Some(search.mapping))
    } else {
        Ok(None)
    }
}

/// Sorted multiset of (out-degree, in-degree) pairs: an isomorphism
/// invariant used for pruning.
fn degree_profile(g: &Digraph) -> Vec<(usize, usize)> {
    let mut profile: Vec<_> = (0..g.vertex_count())
        .map(|v| (g.out_degree(v), g.in_degree(v)))
        .collect();
    profile.sort_unstable();
    profile
}

struct IsoSearch<'a> {
    g1: &'a Digraph,
    g2: &'a Digraph,
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, u: usize) -> bool {
        if u == self.g1.vertex_count() {
            return true;
        }
        'candidates: for w in 0..self.g2.vertex_count() {
            if self.used[w]
                || self.g1.out_degree(u) != self.g2.out_degree(w)
                || self.g1.in_degree(u) != self.g2.in_degree(w)
            {
                continue;
            }
            for x in 0..u {
                let wx = self.mapping[x];
                if self.g1.has_arc(u, x) != self.g2.has_arc(w, wx)
                    || self.g1.has_arc(x, u) != self.g2.has_arc(wx, w)
                {
                    continue 'candidates;
                }
            }
            self.mapping[u] = w;
            self.used[w] = true;
            if self.assign(u + 1) {
                return true;
            }
            self.used[w] = false;
            self.mapping[u] = usize::MAX;
        }
        false
    }
}

/// Two circulants on the same modulus that are isomorphic even though no
/// multiplier maps one connection set onto the other: a counterexample to
/// Adam's conjecture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdamPair {
    pub n: usize,
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
    /// Vertex bijection taking `Cay(Z_n; set_a)` onto `Cay(Z_n; set_b)`.
    pub mapping: Vec<usize>,
}

/// Exhaustively finds isomorphic-but-not-multiplier-equivalent pairs of
/// size-k connection sets over `Z_n`.
///
/// Every size-k set is enumerated (not only oriented ones: isomorphic
/// digraphs have equal digon counts, so an oriented circulant can only
/// pair with oriented partners), grouped into multiplier classes, and the
/// class representatives are pairwise tested for isomorphism. With
/// `anchor` given, only pairs involving the anchor's class are reported.
/// Pairs come out sorted by `(set_a, set_b)`.
pub fn find_adam_pairs(
    n: usize,
    k: usize,
    anchor: Option<&[usize]>,
) -> Result<Vec<AdamPair>, IsoError> {
    if n > MAX_ISO_VERTICES {
        return Err(IsoError::TooManyVertices {
            n,
            max: MAX_ISO_VERTICES,
        });
    }
    if k == 0 {
        return Err(IsoError::DegreeZero);
    }
    let anchor_class: Option<Vec<usize>> = match anchor {
        Some(set) => {
            let spec = CirculantSpec::new(n, set.to_vec())?;
            Some(least_multiplier_image(n, spec.connection_set()))
        }
        None => None,
    };

    // one representative per multiplier class, ascending
    let classes: Vec<Vec<usize>> = (1..n)
        .combinations(k)
        .filter(|set| least_multiplier_image(n, set) == *set)
        .collect();
    let digraphs: Vec<Digraph> = classes
        .iter()
        .map(|set| {
            CirculantSpec::new(n, set.clone())
                .expect("class representatives are valid sets")
                .digraph()
        })
        .collect();

    let mut pairs = Vec::new();
    for (i, set_a) in classes.iter().enumerate() {
        for (j, set_b) in classes.iter().enumerate().skip(i + 1) {
            if let Some(anchor) = &anchor_class {
                if set_a != anchor && set_b != anchor {
                    continue;
                }
            }
            if let Some(mapping) = find_isomorphism(&digraphs[i], &digraphs[j])? {
                pairs.push(AdamPair {
                    n,
                    set_a: set_a.clone(),
                    set_b: set_b.clone(),
                    mapping,
                });
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(n: usize, set: &[usize]) -> Digraph {
        CirculantSpec::new(n, set.to_vec()).unwrap().digraph()
    }

    #[test]
    fn multiplier_search_matches_examples() {
        assert_eq!(find_multiplier(12, &[2, 3, 8], &[3, 4, 10]), Some(5));
        assert_eq!(find_multiplier(12, &[2, 3, 8], &[2, 3, 8]), Some(1));
        assert_eq!(find_multiplier(12, &[2, 3, 8], &[1, 2, 5]), None);
        assert_eq!(find_multiplier(5, &[1], &[2]), Some(2));
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c5 = circulant(5, &[1]);
        let perm = [3, 0, 4, 1, 2];
        let shuffled = c5.relabeled(&perm);
        let mapping = find_isomorphism(&c5, &shuffled).unwrap().unwrap();
        assert!(verify_isomorphism(&c5, &shuffled, &mapping));
        // and the search is symmetric, existence-wise
        assert!(find_isomorphism(&shuffled, &c5).unwrap().is_some());
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        let c5 = circulant(5, &[1]);
        let c6 = circulant(6, &[1]);
        assert_eq!(find_isomorphism(&c5, &c6).unwrap(), None);
    }

    #[test]
    fn multiplier_equivalent_circulants_are_isomorphic() {
        let a = circulant(12, &[2, 3, 8]);
        let b = circulant(12, &[3, 4, 10]);
        let mapping = find_isomorphism(&a, &b).unwrap().expect("iso must exist");
        assert!(verify_isomorphism(&a, &b, &mapping));

        // the multiplier 5 induces one directly: v -> 5v mod 12
        let induced: Vec<usize> = (0..12).map(|v| (5 * v) % 12).collect();
        assert!(verify_isomorphism(&a, &b, &induced));
    }

    #[test]
    fn iso_search_rejects_oversized_inputs() {
        let big = circulant(17, &[1]);
        let small = circulant(3, &[1]);
        assert!(matches!(
            find_isomorphism(&big, &small),
            Err(IsoError::TooManyVertices { n: 17, .. })
        ));
        assert!(matches!(
            find_adam_pairs(17, 3, None),
            Err(IsoError::TooManyVertices { n: 17, .. })
        ));
        assert_eq!(find_adam_pairs(12, 0, None).unwrap_err(), IsoError::DegreeZero);
    }

    #[test]
    fn verify_isomorphism_rejects_malformed_mappings() {
        let c5 = circulant(5, &[1]);
        assert!(!verify_isomorphism(&c5, &c5, &[0, 1, 2, 3])); // wrong length
        assert!(!verify_isomorphism(&c5, &c5, &[0, 0, 1, 2, 3])); // not a bijection
        assert!(!verify_isomorphism(&c5, &c5, &[1, 0, 2, 3, 4])); // breaks arcs
        assert!(verify_isomorphism(&c5, &c5, &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn single_generator_classes_have_no_adam_pairs() {
        // units of Z_5 act transitively on the four singletons
        assert!(find_adam_pairs(5, 1, Some(&[1])).unwrap().is_empty());
        assert!(find_adam_pairs(5, 1, None).unwrap().is_empty());
    }

    #[test]
    fn anchored_pairs_all_involve_the_anchor_class() {
        let pairs = find_adam_pairs(8, 2, Some(&[1, 2])).unwrap();
        for pair in &pairs {
            assert!(pair.set_a == vec![1, 2] || pair.set_b == vec![1, 2]);
            assert!(verify_isomorphism(
                &circulant(8, &pair.set_a),
                &circulant(8, &pair.set_b),
                &pair.mapping
            ));
            assert_eq!(find_multiplier(8, &pair.set_a, &pair.set_b), None);
        }
    }

    #[test]
    fn known_adam_pair_on_z8_is_found() {
        // the classical Elspas-Turner pair: isomorphic, no multiplier
        let pairs = find_adam_pairs(8, 3, Some(&[1, 2, 5])).unwrap();
        assert_eq!(pairs.len(), 1);
        let pair = &pairs[0];
        assert_eq!(pair.set_a, vec![1, 2, 5]);
        assert_eq!(pair.set_b, vec![1, 5, 6]);
        assert!(verify_isomorphism(
            &circulant(8, &[1, 2, 5]),
            &circulant(8, &[1, 5, 6]),
            &pair.mapping
        ));
        assert_eq!(find_multiplier(8, &[1, 2, 5], &[1, 5, 6]), None);
    }

    #[test]
    fn z12_triples_isomorphic_to_the_counterexample_are_its_own_class() {
        // exhaustive over all 165 three-element subsets: the multiplier
        // class is the entire isomorphism class, so Z_12 yields no Adam
        // pair anchored at {2,3,8}
        let h = circulant(12, &[2, 3, 8]);
        let mut isomorphic = Vec::new();
        for set in (1..12usize).combinations(3) {
            if find_isomorphism(&h, &circulant(12, &set)).unwrap().is_some() {
                isomorphic.push(set);
            }
        }
        assert_eq!(
            isomorphic,
            vec![
                vec![2, 3, 8],
                vec![2, 8, 9],
                vec![3, 4, 10],
                vec![4, 9, 10],
            ]
        );
        assert!(find_adam_pairs(12, 3, Some(&[2, 3, 8])).unwrap().is_empty());
    }
}
