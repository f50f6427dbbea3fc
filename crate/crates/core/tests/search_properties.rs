mod common;

use chordal_core::oracle::{is_chordal_bruteforce, satisfies_b_property, satisfies_lb_property};
use chordal_core::search::lexbfs_labels_audited;
use chordal_core::{bfs_order, is_peo, lexbfs_labels, lexbfs_partition, mcs_order, TieBreak};
use common::{all_graphs, arb_graph, arb_graph_and_ordering, graph};
use proptest::prelude::*;

fn tie_breaks() -> impl Iterator<Item = TieBreak> {
    std::iter::once(TieBreak::LowestIndex).chain((0..10).map(TieBreak::Seeded))
}

#[test]
fn documented_orders() {
    let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
    let lowest = TieBreak::LowestIndex;
    assert_eq!(bfs_order(&c4, lowest).to_string(), "1 2 4 3");
    assert_eq!(lexbfs_labels(&c4, lowest).to_string(), "1 2 4 3");
    assert_eq!(lexbfs_partition(&c4, lowest).to_string(), "1 2 4 3");
    assert_eq!(mcs_order(&c4, lowest).to_string(), "1 2 3 4");
    let p3 = graph(3, &[(1, 3), (3, 2)]);
    assert_eq!(lexbfs_labels(&p3, lowest).to_string(), "1 3 2");
    assert_eq!(lexbfs_partition(&p3, lowest).to_string(), "1 3 2");
}

#[test]
fn exhaustive_small_graphs() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let chordal = is_chordal_bruteforce(&g).unwrap();
            for tb in tie_breaks() {
                let bfs = bfs_order(&g, tb);
                assert!(satisfies_b_property(&g, &bfs).unwrap().holds(), "{g:?} {bfs:?}");
                let labels = lexbfs_labels_audited(&g, tb).unwrap();
                assert_eq!(labels, lexbfs_labels(&g, tb));
                let partition = lexbfs_partition(&g, tb);
                for o in [&labels, &partition] {
                    assert!(satisfies_lb_property(&g, o).unwrap().holds(), "{g:?} {o:?}");
                    assert!(satisfies_b_property(&g, o).unwrap().holds());
                }
                assert_eq!(is_peo(&g, &labels).unwrap().is_perfect(), chordal);
                assert_eq!(is_peo(&g, &partition).unwrap().is_perfect(), chordal);
                assert_eq!(is_peo(&g, &mcs_order(&g, tb)).unwrap().is_perfect(), chordal);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn searches_satisfy_their_properties(g in arb_graph(7), seed in any::<u64>()) {
        let tb = TieBreak::Seeded(seed);
        prop_assert!(satisfies_b_property(&g, &bfs_order(&g, tb)).unwrap().holds());
        let labels = lexbfs_labels_audited(&g, tb).unwrap();
        prop_assert!(satisfies_lb_property(&g, &labels).unwrap().holds());
        prop_assert!(satisfies_lb_property(&g, &lexbfs_partition(&g, tb)).unwrap().holds());
        let chordal = is_chordal_bruteforce(&g).unwrap();
        prop_assert_eq!(is_peo(&g, &labels).unwrap().is_perfect(), chordal);
        prop_assert_eq!(is_peo(&g, &lexbfs_partition(&g, tb)).unwrap().is_perfect(), chordal);
        prop_assert_eq!(is_peo(&g, &mcs_order(&g, tb)).unwrap().is_perfect(), chordal);
    }

    #[test]
    fn lb_implies_b((g, ord) in arb_graph_and_ordering(7)) {
        if satisfies_lb_property(&g, &ord).unwrap().holds() {
            prop_assert!(satisfies_b_property(&g, &ord).unwrap().holds());
        }
    }

    #[test]
    fn lowest_index_is_deterministic(g in arb_graph(8)) {
        let lowest = TieBreak::LowestIndex;
        prop_assert_eq!(lexbfs_partition(&g, lowest), lexbfs_partition(&g, lowest));
        prop_assert_eq!(lexbfs_labels(&g, lowest).vertex_at(0), 0);
        prop_assert_eq!(lexbfs_partition(&g, lowest).vertex_at(0), 0);
    }
}
