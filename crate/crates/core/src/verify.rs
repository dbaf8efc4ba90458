//! Packing verification and the exhaustive brute-force oracle.
//!
//! The oracle decides packing existence by raw backtracking over roots and
//! element subsets, with no use of any counting condition, so it can anchor
//! equivalence tests for the checkers and the constructive pipeline. It is
//! capped at 5 vertices and 9 elements to stay obviously correct and fast.

use std::fmt;

use crate::graph::{MixedGraph, RootBounds, VertexSet};
use crate::pack::{Packing, Tree};
use crate::Error;

/// Oracle caps: worst-case branching stays well under 10^7 nodes.
pub const ORACLE_MAX_VERTICES: usize = 5;
pub const ORACLE_MAX_ELEMENTS: usize = 9;

/// True when the selected elements form a spanning tree of the whole vertex
/// set whose arcs all point away from `root`; equivalently, every vertex is
/// reachable from `root` inside the selection with arcs traversed forward
/// and edges either way.
pub fn is_mixed_arborescence(
    g: &MixedGraph,
    edges: &[usize],
    arcs: &[usize],
    root: usize,
) -> Result<bool, Error> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::VertexIndex {
            index: root,
            count: n,
        });
    }
    for &e in edges {
        if e >= g.edge_count() {
            return Err(Error::ElementIndex {
                index: e,
                kind: "edge",
            });
        }
    }
    for &a in arcs {
        if a >= g.arc_count() {
            return Err(Error::ElementIndex {
                index: a,
                kind: "arc",
            });
        }
    }
    if edges.len() + arcs.len() != n - 1 {
        return Ok(false);
    }
    let mut seen_edges = edges.to_vec();
    seen_edges.sort_unstable();
    seen_edges.dedup();
    let mut seen_arcs = arcs.to_vec();
    seen_arcs.sort_unstable();
    seen_arcs.dedup();
    if seen_edges.len() != edges.len() || seen_arcs.len() != arcs.len() {
        return Ok(false);
    }

    // Underlying connectivity: n - 1 elements and all vertices reached
    // means the underlying graph is a spanning tree.
    let undirected: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e| g.edges()[e])
        .chain(arcs.iter().map(|&a| g.arcs()[a]))
        .collect();
    let mut reached = VertexSet::singleton(root);
    loop {
        let before = reached;
        for &(u, v) in &undirected {
            if reached.contains(u) != reached.contains(v) {
                reached = reached.with(u).with(v);
            }
        }
        if reached == before {
            break;
        }
    }
    if reached != g.full_set() {
        return Ok(false);
    }

    // Mixed reachability inside the selection: arcs forward, edges both ways.
    let mut mixed = VertexSet::singleton(root);
    loop {
        let before = mixed;
        for &e in edges {
            let (u, v) = g.edges()[e];
            if mixed.contains(u) != mixed.contains(v) {
                mixed = mixed.with(u).with(v);
            }
        }
        for &a in arcs {
            let (tail, head) = g.arcs()[a];
            if mixed.contains(tail) {
                mixed.insert(head);
            }
        }
        if mixed == before {
            break;
        }
    }
    Ok(mixed == g.full_set())
}

/// Stable failure classes for CI consumption.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureCode {
    TreeCount,
    Disjointness,
    InvalidIndex,
    NotArborescence,
    RootBounds,
}

impl FailureCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureCode::TreeCount => "tree-count",
            FailureCode::Disjointness => "disjointness",
            FailureCode::InvalidIndex => "invalid-index",
            FailureCode::NotArborescence => "not-arborescence",
            FailureCode::RootBounds => "root-bounds",
        }
    }
}

impl fmt::Display for FailureCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violated check; `tree` is `None` for packing-wide problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub tree: Option<usize>,
    pub code: FailureCode,
    pub detail: String,
    pub edges: Vec<usize>,
    pub arcs: Vec<usize>,
}

/// Every violated check of a packing; empty means the packing is valid.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks tree count, element disjointness (with multiplicity), spanning
/// arborescence structure per tree, and per-vertex root counts against the
/// bounds. All problems are reported, none abort the scan.
pub fn verify_packing(g: &MixedGraph, b: &RootBounds, p: &Packing) -> VerificationReport {
    let mut failures = Vec::new();
    let n = g.vertex_count();

    if b.len() != n {
        failures.push(Failure {
            tree: None,
            code: FailureCode::InvalidIndex,
            detail: format!("bounds cover {} vertices, graph has {n}", b.len()),
            edges: Vec::new(),
            arcs: Vec::new(),
        });
        return VerificationReport { failures };
    }

    if p.trees.len() as u64 != b.k() {
        failures.push(Failure {
            tree: None,
            code: FailureCode::TreeCount,
            detail: format!("expected {} trees, found {}", b.k(), p.trees.len()),
            edges: Vec::new(),
            arcs: Vec::new(),
        });
    }

    // Element disjointness, counting every use anywhere in the packing;
    // out-of-range indices are reported per tree below.
    let mut edge_uses = vec![0usize; g.edge_count()];
    let mut arc_uses = vec![0usize; g.arc_count()];
    for tree in &p.trees {
        for &e in &tree.edges {
            if let Some(c) = edge_uses.get_mut(e) {
                *c += 1;
            }
        }
        for &a in &tree.arcs {
            if let Some(c) = arc_uses.get_mut(a) {
                *c += 1;
            }
        }
    }
    let shared_edges: Vec<usize> = edge_uses
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 1)
        .map(|(e, _)| e)
        .collect();
    let shared_arcs: Vec<usize> = arc_uses
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 1)
        .map(|(a, _)| a)
        .collect();
    if !shared_edges.is_empty() || !shared_arcs.is_empty() {
        failures.push(Failure {
            tree: None,
            code: FailureCode::Disjointness,
            detail: "elements used by more than one tree".to_string(),
            edges: shared_edges,
            arcs: shared_arcs,
        });
    }

    for (i, tree) in p.trees.iter().enumerate() {
        let bad_edges: Vec<usize> = tree
            .edges
            .iter()
            .copied()
            .filter(|&e| e >= g.edge_count())
            .collect();
        let bad_arcs: Vec<usize> = tree
            .arcs
            .iter()
            .copied()
            .filter(|&a| a >= g.arc_count())
            .collect();
        if tree.root >= n || !bad_edges.is_empty() || !bad_arcs.is_empty() {
            failures.push(Failure {
                tree: Some(i),
                code: FailureCode::InvalidIndex,
                detail: if tree.root >= n {
                    format!("root index {} out of range", tree.root)
                } else {
                    "element indices out of range".to_string()
                },
                edges: bad_edges,
                arcs: bad_arcs,
            });
            continue;
        }
        match is_mixed_arborescence(g, &tree.edges, &tree.arcs, tree.root) {
            Ok(true) => {}
            _ => failures.push(Failure {
                tree: Some(i),
                code: FailureCode::NotArborescence,
                detail: format!(
                    "not a spanning mixed arborescence rooted at `{}`",
                    g.vertex_name(tree.root)
                ),
                edges: tree.edges.clone(),
                arcs: tree.arcs.clone(),
            }),
        }
    }
    // Root counts against the bounds.
    let mut counts = vec![0u64; n];
    for tree in &p.trees {
        if tree.root < n {
            counts[tree.root] += 1;
        }
    }
    for (v, &count) in counts.iter().enumerate() {
        if count < b.f(v) || count > b.g(v) {
            failures.push(Failure {
                tree: None,
                code: FailureCode::RootBounds,
                detail: format!(
                    "vertex `{}` roots {} trees, needs {} ..= {}",
                    g.vertex_name(v),
                    count,
                    b.f(v),
                    b.g(v)
                ),
                edges: Vec::new(),
                arcs: Vec::new(),
            });
        }
    }

    VerificationReport { failures }
}

/// Exhaustive packing search; `Some(packing)` is a verified witness.
pub fn oracle_pack_exists(g: &MixedGraph, b: &RootBounds) -> Result<Option<Packing>, Error> {
    oracle_pack_exists_with(g, b, true)
}

/// [`oracle_pack_exists`] with the root-feasibility pruning switchable, so
/// tests can confirm the pruning never changes the decided set. Roots are
/// enumerated in nondecreasing vertex order, which only removes
/// tree-permutation duplicates.
pub fn oracle_pack_exists_with(
    g: &MixedGraph,
    b: &RootBounds,
    prune: bool,
) -> Result<Option<Packing>, Error> {
    b.check_matches(g)?;
    let n = g.vertex_count();
    let elements = g.edge_count() + g.arc_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleCaps(format!(
            "{n} vertices exceed the oracle cap of {ORACLE_MAX_VERTICES}"
        )));
    }
    if elements > ORACLE_MAX_ELEMENTS {
        return Err(Error::OracleCaps(format!(
            "{elements} elements exceed the oracle cap of {ORACLE_MAX_ELEMENTS}"
        )));
    }

    struct Search<'a> {
        g: &'a MixedGraph,
        b: &'a RootBounds,
        prune: bool,
        used: Vec<bool>,
        counts: Vec<u64>,
        trees: Vec<Tree>,
    }

    impl Search<'_> {
        fn run(&mut self, tree_index: u64, min_root: usize) -> Result<bool, Error> {
            let n = self.g.vertex_count();
            if tree_index == self.b.k() {
                return Ok((0..n).all(|v| self.counts[v] >= self.b.f(v)));
            }
            if self.prune {
                let unmet: u64 = (0..n)
                    .map(|v| self.b.f(v).saturating_sub(self.counts[v]))
                    .sum();
                if unmet > self.b.k() - tree_index {
                    return Ok(false);
                }
                // Roots are nondecreasing, so vertices before min_root can
                // never gain another root.
                if (0..min_root).any(|v| self.counts[v] < self.b.f(v)) {
                    return Ok(false);
                }
            }
            for root in min_root..n {
                if self.counts[root] >= self.b.g(root) {
                    continue;
                }
                self.counts[root] += 1;
                if self.try_trees(tree_index, root)? {
                    return Ok(true);
                }
                self.counts[root] -= 1;
            }
            Ok(false)
        }

        fn try_trees(&mut self, tree_index: u64, root: usize) -> Result<bool, Error> {
            let n = self.g.vertex_count();
            let free: Vec<usize> = (0..self.used.len()).filter(|&e| !self.used[e]).collect();
            let need = n - 1;
            if free.len() < need {
                return Ok(false);
            }
            let edge_count = self.g.edge_count();
            let mut combo: Vec<usize> = (0..need).collect();
            loop {
                let selection: Vec<usize> = combo.iter().map(|&i| free[i]).collect();
                let edges: Vec<usize> = selection
                    .iter()
                    .copied()
                    .filter(|&e| e < edge_count)
                    .collect();
                let arcs: Vec<usize> = selection
                    .iter()
                    .copied()
                    .filter(|&e| e >= edge_count)
                    .map(|e| e - edge_count)
                    .collect();
                if is_mixed_arborescence(self.g, &edges, &arcs, root)? {
                    for &e in &selection {
                        self.used[e] = true;
                    }
                    self.trees.push(Tree { root, edges, arcs });
                    if self.run(tree_index + 1, root)? {
                        return Ok(true);
                    }
                    self.trees.pop();
                    for &e in &selection {
                        self.used[e] = false;
                    }
                }
                // Next lexicographic combination of `need` items from `free`.
                if need == 0 {
                    return Ok(false);
                }
                let mut i = need;
                loop {
                    if i == 0 {
                        return Ok(false);
                    }
                    i -= 1;
                    if combo[i] != i + free.len() - need {
                        break;
                    }
                }
                combo[i] += 1;
                for j in i + 1..need {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
    }

    let mut search = Search {
        g,
        b,
        prune,
        used: vec![false; elements],
        counts: vec![0; n],
        trees: Vec::new(),
    };
    if search.run(0, 0)? {
        Ok(Some(Packing {
            trees: search.trees,
        }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pack::{pack_mixed, PackOptions, PackOutcome};

    fn triangle() -> MixedGraph {
        MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[]).unwrap()
    }

    #[test]
    fn mixed_arborescence_examples() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b")], &[("b", "c")]).unwrap();
        assert!(is_mixed_arborescence(&g, &[0], &[0], 0).unwrap());
        assert!(!is_mixed_arborescence(&g, &[0], &[0], 2).unwrap());

        let cyclic = MixedGraph::new(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c")],
            &[],
        )
        .unwrap();
        assert!(!is_mixed_arborescence(&cyclic, &[0, 1, 2], &[], 0).unwrap());
    }

    #[test]
    fn mixed_arborescence_rejects_bad_indices() {
        let g = triangle();
        assert!(matches!(
            is_mixed_arborescence(&g, &[9], &[], 0),
            Err(Error::ElementIndex { .. })
        ));
    }

    #[test]
    fn verify_good_and_tampered_packings() {
        let g = MixedGraph::new(&["a", "b"], &[("a", "b")], &[("a", "b")]).unwrap();
        let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
        let PackOutcome::Packed(solution) = pack_mixed(&g, &b, PackOptions::default()).unwrap()
        else {
            panic!("expected a packing")
        };
        let packing = solution.packing;
        assert!(verify_packing(&g, &b, &packing).ok());

        // Move one root away from `a`: f(a) = 2 is no longer met.
        let mut relabeled = packing.clone();
        relabeled.trees[1].root = 1;
        let report = verify_packing(&g, &b, &relabeled);
        assert!(report
            .failures
            .iter()
            .any(|f| f.code == FailureCode::RootBounds));

        // Two trees sharing an element index.
        let mut shared = packing.clone();
        shared.trees[1].edges.clear();
        shared.trees[1].arcs = vec![0];
        let report = verify_packing(&g, &b, &shared);
        assert!(report
            .failures
            .iter()
            .any(|f| f.code == FailureCode::Disjointness));

        // Wrong tree count.
        let mut short = packing.clone();
        short.trees.pop();
        let report = verify_packing(&g, &b, &short);
        assert!(report
            .failures
            .iter()
            .any(|f| f.code == FailureCode::TreeCount));
    }

    #[test]
    fn oracle_triangle_cases() {
        let g = triangle();
        let b1 = RootBounds::uniform(1, 3).unwrap();
        let witness = oracle_pack_exists(&g, &b1).unwrap().unwrap();
        assert!(verify_packing(&g, &b1, &witness).ok());

        let b2 = RootBounds::uniform(2, 3).unwrap();
        assert!(oracle_pack_exists(&g, &b2).unwrap().is_none());
    }

    #[test]
    fn oracle_mixed_pair_witness() {
        let g = MixedGraph::new(&["a", "b"], &[("a", "b")], &[("a", "b")]).unwrap();
        let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
        let witness = oracle_pack_exists(&g, &b).unwrap().unwrap();
        assert!(verify_packing(&g, &b, &witness).ok());
        assert_eq!(witness.trees.len(), 2);
    }

    #[test]
    fn oracle_respects_caps() {
        let g = MixedGraph::from_index_pairs(6, vec![], vec![]).unwrap();
        let b = RootBounds::uniform(1, 6).unwrap();
        assert!(matches!(
            oracle_pack_exists(&g, &b),
            Err(Error::OracleCaps(_))
        ));
    }

    #[test]
    fn oracle_pruning_is_conservative() {
        let g = MixedGraph::new(
            &["a", "b", "c"],
            &[("a", "b")],
            &[("b", "c"), ("c", "a")],
        )
        .unwrap();
        for k in 1..=2u64 {
            let b = RootBounds::uniform(k, 3).unwrap();
            let pruned = oracle_pack_exists_with(&g, &b, true).unwrap();
            let full = oracle_pack_exists_with(&g, &b, false).unwrap();
            assert_eq!(pruned.is_some(), full.is_some());
        }
    }
}
