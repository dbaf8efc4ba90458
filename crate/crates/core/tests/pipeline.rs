//! End-to-end runs of the solve pipeline on the named small instances,
//! cross-checked against the brute-force oracle.

use arbopack_core::conditions::check_feasible;
use arbopack_core::graph::{MixedGraph, RootBounds, DEFAULT_MAX_N};
use arbopack_core::pack::{pack_mixed, PackOptions, PackOutcome};
use arbopack_core::rng::SplitMix64;
use arbopack_core::verify::{oracle_pack_exists, verify_packing};

fn solve(g: &MixedGraph, b: &RootBounds) -> PackOutcome {
    pack_mixed(g, b, PackOptions::default()).unwrap()
}

fn assert_packs(g: &MixedGraph, b: &RootBounds) {
    match solve(g, b) {
        PackOutcome::Packed(solution) => {
            assert!(verify_packing(g, b, &solution.packing).ok());
        }
        PackOutcome::Infeasible(report) => panic!("expected a packing, got {report}"),
    }
    assert!(oracle_pack_exists(g, b).unwrap().is_some());
}

fn assert_refuses(g: &MixedGraph, b: &RootBounds) {
    match solve(g, b) {
        PackOutcome::Infeasible(report) => assert!(!report.feasible()),
        PackOutcome::Packed(_) => panic!("expected infeasible"),
    }
    assert!(oracle_pack_exists(g, b).unwrap().is_none());
}

#[test]
fn mixed_pair_pipeline_and_oracle_agree() {
    let g = MixedGraph::new(&["a", "b"], &[("a", "b")], &[("a", "b")]).unwrap();
    let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
    assert_packs(&g, &b);
}

#[test]
fn k4_packs_two_trees_triangle_does_not() {
    let k4 = MixedGraph::new(
        &["a", "b", "c", "d"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ],
        &[],
    )
    .unwrap();
    assert_packs(&k4, &RootBounds::uniform(2, 4).unwrap());

    let triangle =
        MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[]).unwrap();
    assert_packs(&triangle, &RootBounds::uniform(1, 3).unwrap());
    assert_refuses(&triangle, &RootBounds::uniform(2, 3).unwrap());
}

#[test]
fn directed_cycle_packs_from_every_root_but_not_twice() {
    let cycle =
        MixedGraph::new(&["a", "b", "c"], &[], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
    for root in 0..3 {
        assert_packs(&cycle, &RootBounds::single_root(1, 3, root).unwrap());
        assert_refuses(&cycle, &RootBounds::single_root(2, 3, root).unwrap());
    }
    assert_refuses(&cycle, &RootBounds::uniform(2, 3).unwrap());
}

#[test]
fn parallel_arcs_pack_two_pinned_trees() {
    let g = MixedGraph::new(&["a", "b"], &[], &[("a", "b"), ("a", "b")]).unwrap();
    let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
    assert_packs(&g, &b);
}

#[test]
fn single_vertex_packs_empty_trees() {
    let g = MixedGraph::new(&["a"], &[], &[]).unwrap();
    let b = RootBounds::new(3, vec![3], vec![3]).unwrap();
    assert_packs(&g, &b);
}

#[test]
fn oracle_witness_matches_pipeline_on_mixed_pair() {
    let g = MixedGraph::new(&["a", "b"], &[("a", "b")], &[("a", "b")]).unwrap();
    let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
    let witness = oracle_pack_exists(&g, &b).unwrap().unwrap();
    let PackOutcome::Packed(solution) = solve(&g, &b) else {
        panic!("expected a packing");
    };
    let mut oracle_trees: Vec<_> = witness.trees.clone();
    let mut solver_trees: Vec<_> = solution.packing.trees.clone();
    oracle_trees.sort_by_key(|t| (t.root, t.edges.clone(), t.arcs.clone()));
    solver_trees.sort_by_key(|t| (t.root, t.edges.clone(), t.arcs.clone()));
    assert_eq!(oracle_trees, solver_trees);
}

#[test]
fn random_small_instances_match_oracle() {
    let mut rng = SplitMix64::new(0xbead);
    let mut feasible = 0;
    for _ in 0..250 {
        let n = 2 + rng.below(3);
        let m = rng.below(6);
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for _ in 0..m {
            let u = rng.below(n);
            let v = (u + 1 + rng.below(n - 1)) % n;
            if rng.chance(1, 2) {
                edges.push((u, v));
            } else {
                arcs.push((u, v));
            }
        }
        let g = MixedGraph::from_index_pairs(n, edges, arcs).unwrap();
        let k = 1 + rng.below(2) as u64;
        let b = RootBounds::uniform(k, n).unwrap();
        let decided = check_feasible(&g, &b, DEFAULT_MAX_N).unwrap().feasible();
        let oracle = oracle_pack_exists(&g, &b).unwrap().is_some();
        assert_eq!(decided, oracle, "checker and oracle disagree on {g:?} k={k}");
        match solve(&g, &b) {
            PackOutcome::Packed(solution) => {
                feasible += 1;
                assert!(decided);
                assert!(verify_packing(&g, &b, &solution.packing).ok());
            }
            PackOutcome::Infeasible(_) => assert!(!decided),
        }
    }
    assert!(feasible > 50, "too few feasible instances exercised");
}
