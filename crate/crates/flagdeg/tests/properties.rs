//! Cross-route and structural invariants on generated inputs: the three
//! degree computations agree, order relations agree across their two
//! implementations, text formats round-trip, and truncation interacts with
//! flag counts the way it should.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use flagdeg::complexes::{parse_facets, FacetList};
use flagdeg::degrees::{
    degree_sequence, degree_sequence_naive, degree_sequence_simplicial, flag_f,
};
use flagdeg::poset::parse_poset;
use flagdeg::seq::compositions_of;
use flagdeg::{compare, Composition, MajorizationVerdict, RankedPoset};

/// Pure complexes with facets of one size: distinct k-subsets of {1..7}.
fn pure_complex() -> impl Strategy<Value = (usize, FacetList)> {
    (1usize..=3).prop_flat_map(|k| {
        prop::collection::btree_set(prop::collection::btree_set(1usize..=7, k), 1..=6).prop_map(
            move |facets| {
                let text = facets
                    .iter()
                    .map(|f| {
                        f.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                (k, parse_facets(&text))
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn degree_routes_agree((k, facets) in pure_complex()) {
        let p = facets.to_poset().expect("complexes build");
        for sigma in compositions_of(k) {
            let dp = degree_sequence(&p, &sigma).expect("pure by construction");
            let naive = degree_sequence_naive(&p, &sigma).expect("pure by construction");
            let closed = degree_sequence_simplicial(&p, &sigma)
                .expect("simplicial complexes have boolean intervals");
            prop_assert_eq!(&dp, &naive);
            prop_assert_eq!(&dp, &closed);
        }
    }

    #[test]
    fn facet_text_round_trips((_k, facets) in pure_complex()) {
        let text = facets.to_text();
        prop_assert_eq!(&parse_facets(&text), &facets);
    }

    #[test]
    fn poset_text_round_trips((k, facets) in pure_complex()) {
        let p = facets.to_poset().expect("complexes build");
        let back = parse_poset(&p.to_text()).expect("emitted text parses");
        prop_assert_eq!(back.to_text(), p.to_text());
        for sigma in compositions_of(k) {
            prop_assert_eq!(
                degree_sequence(&back, &sigma).unwrap(),
                degree_sequence(&p, &sigma).unwrap()
            );
        }
    }

    #[test]
    fn order_routes_agree((_k, facets) in pure_complex()) {
        let p = facets.to_poset().expect("complexes build");
        let matrix = p.strict_order_matrix();
        for lower in 1..=p.max_rank() {
            for upper in lower..=p.max_rank() {
                let rel = p.rank_relation(lower, upper);
                for (i, x) in p.level(lower).enumerate() {
                    for (j, y) in p.level(upper).enumerate() {
                        let expected = if lower == upper {
                            i == j
                        } else {
                            matrix[x.index()][y.index()]
                        };
                        prop_assert_eq!(rel.related(i, j), expected);
                        if lower < upper {
                            prop_assert_eq!(p.is_strictly_below(x, y), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn comparison_is_antisymmetric(
        a in prop::collection::vec(0u64..40, 1..12),
        b in prop::collection::vec(0u64..40, 1..12),
    ) {
        use MajorizationVerdict::*;
        let a: flagdeg::DegreeSequence = a.into_iter().collect();
        let b: flagdeg::DegreeSequence = b.into_iter().collect();
        let forward = compare(&a, &b).verdict;
        let backward = compare(&b, &a).verdict;
        let mirrored = match forward {
            Equal => Equal,
            Majorizes => MajorizedBy,
            MajorizedBy => Majorizes,
            WeaklyMajorizes => WeaklyMajorizedBy,
            WeaklyMajorizedBy => WeaklyMajorizes,
            Incomparable => Incomparable,
        };
        prop_assert_eq!(backward, mirrored);
    }
}

/// Counting flags of ranks {i, j} two ways: directly, and as the entry sum
/// of the face-to-flag sequence on the poset truncated at rank j.
#[test]
fn truncation_matches_flag_counts() {
    let mut posets: Vec<RankedPoset> = vec![
        parse_facets("1 2 3 4\n1 2 4 6\n1 2 5 6\n")
            .to_poset()
            .unwrap(),
        flagdeg::complexes::gen_complete_complex(5, 3)
            .unwrap()
            .to_poset()
            .unwrap(),
        flagdeg::complexes::gen_cross_polytope_solid(3),
        flagdeg::complexes::gen_hypercube_solid(3),
        flagdeg::complexes::gen_hypercube_stack(3, 2),
    ];
    posets.extend(common::random_complexes().into_iter().step_by(25).map(|e| e.poset));
    for p in &posets {
        for j in 1..=p.max_rank() {
            let t = p.truncate(j);
            for i in 1..j {
                let sigma = Composition::new(vec![i, j - i]).unwrap();
                let total = degree_sequence(&t, &sigma).unwrap().sum().clone();
                assert_eq!(total, flag_f(p, &[i, j]).unwrap());
            }
        }
    }
}

/// The conjugate is an involution on every computed sequence.
#[test]
fn conjugate_is_an_involution() {
    for entry in common::simplicial_corpus().into_iter().step_by(20) {
        let k = entry.poset.max_rank();
        for sigma in compositions_of(k) {
            let d = degree_sequence(&entry.poset, &sigma).unwrap();
            let back = d.conjugate().conjugate();
            assert_eq!(
                compare(&d, &back).verdict,
                MajorizationVerdict::Equal,
                "{}",
                entry.name
            );
            assert_eq!(
                d.entries().iter().filter(|e| **e > 0u32.into()).count(),
                back.len(),
                "conjugating twice trims zeros only ({})",
                entry.name
            );
        }
    }
}

/// Facet normalization drops dominated and duplicate facets no matter how
/// the input is shuffled.
#[test]
fn normalization_is_order_insensitive() {
    let a = parse_facets("1 2 3\n2 3\n1 2 3\n4 5\n");
    let b = parse_facets("4 5\n1 2 3\n2 3 1\n3 2\n");
    assert_eq!(a, b);
    let names: BTreeSet<String> = a
        .facets()
        .iter()
        .map(|f| f.join(" "))
        .collect();
    assert_eq!(
        names,
        BTreeSet::from(["1 2 3".to_string(), "4 5".to_string()])
    );
}
