//! Property tests tying the independent routes together: set-level
//! shortcuts against built digraphs, the two Hamiltonicity deciders
//! against each other, and the multiplier action against explicit
//! isomorphisms.

use proptest::prelude::*;

use circulant::digraph::{CirculantSpec, Digraph};
use circulant::hamiltonicity::{find_hamiltonian_cycle, held_karp, verify_cycle_witness};
use circulant::isomorphism::{find_multiplier, verify_isomorphism};
use circulant::modular::{multiply_set, units};
use circulant::search::{enumerate_oriented_sets, multiplier_canonical_form};

fn arb_spec(max_n: usize) -> impl Strategy<Value = CirculantSpec> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set(1..n, 1..n)
            .prop_map(move |set| CirculantSpec::new(n, set.into_iter().collect::<Vec<_>>()).unwrap())
    })
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::new(n, arcs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn circulants_are_k_diregular(spec in arb_spec(16)) {
        let g = spec.digraph();
        prop_assert_eq!(g.arc_count(), spec.n() * spec.k());
        prop_assert!(g.is_k_diregular(spec.k()));
    }

    #[test]
    fn set_level_orientation_agrees_with_the_digraph(spec in arb_spec(16)) {
        prop_assert_eq!(spec.is_oriented(), spec.digraph().is_oriented());
    }

    #[test]
    fn doubling_a_digraph_disconnects_it(g in arb_digraph(8)) {
        prop_assert!(!g.disjoint_union(&g).is_strongly_connected());
    }

    #[test]
    fn canonical_form_is_constant_on_the_class(spec in arb_spec(14)) {
        let canonical = multiplier_canonical_form(&spec);
        for a in units(spec.n()) {
            let member = CirculantSpec::new(spec.n(), multiply_set(spec.n(), spec.connection_set(), a)).unwrap();
            prop_assert_eq!(multiplier_canonical_form(&member), canonical.clone());
        }
        let rep = CirculantSpec::new(spec.n(), canonical.clone()).unwrap();
        prop_assert_eq!(multiplier_canonical_form(&rep), canonical);
    }

    #[test]
    fn multipliers_induce_verified_isomorphisms(spec in arb_spec(12), unit_index in 0usize..16) {
        let n = spec.n();
        let all_units = units(n);
        let a = all_units[unit_index % all_units.len()];
        let image = multiply_set(n, spec.connection_set(), a);
        let found = find_multiplier(n, spec.connection_set(), &image);
        prop_assert!(found.is_some());

        let mapping: Vec<usize> = (0..n).map(|v| (a * v) % n).collect();
        let g = spec.digraph();
        let image_g = CirculantSpec::new(n, image).unwrap().digraph();
        prop_assert!(verify_isomorphism(&g, &image_g, &mapping));
    }

    #[test]
    fn deciders_agree_and_witnesses_verify(g in arb_digraph(10)) {
        let bt = find_hamiltonian_cycle(&g).unwrap();
        let hk = held_karp(&g).unwrap();
        prop_assert_eq!(bt.status, hk.status);
        if let Some(w) = &bt.witness {
            prop_assert!(verify_cycle_witness(&g, w));
            prop_assert_eq!(w[0], 0);
        }
        if let Some(w) = &hk.witness {
            prop_assert!(verify_cycle_witness(&g, w));
            prop_assert_eq!(w[0], 0);
        }
        if !g.is_strongly_connected() {
            prop_assert_eq!(bt.status, circulant::HamStatus::NonHamiltonian);
        }
    }

    #[test]
    fn status_survives_reversal_and_relabeling(g in arb_digraph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;

        let status = find_hamiltonian_cycle(&g).unwrap().status;
        prop_assert_eq!(find_hamiltonian_cycle(&g.reversed()).unwrap().status, status);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        prop_assert_eq!(find_hamiltonian_cycle(&g.relabeled(&perm)).unwrap().status, status);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The set-level enumeration filter against the digraph-level route.
    #[test]
    fn oriented_enumeration_matches_digraph_filtering(n in 2usize..=10, k in 1usize..=4) {
        use itertools::Itertools;

        let enumerated: Vec<Vec<usize>> = enumerate_oriented_sets(n, k)
            .iter()
            .map(|s| s.connection_set().to_vec())
            .collect();
        let by_digraph: Vec<Vec<usize>> = (1..n)
            .combinations(k)
            .filter(|set| CirculantSpec::new(n, set.clone()).unwrap().digraph().is_oriented())
            .collect();
        prop_assert_eq!(enumerated, by_digraph);
    }
}
