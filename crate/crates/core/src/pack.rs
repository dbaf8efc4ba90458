//! Root selection, arc-disjoint spanning arborescence packing by safe-arc
//! growth, and the end-to-end mixed pipeline.
//!
//! Trees are completed one at a time. While a tree with vertex set `S`
//! grows, the residual digraph must keep every nonempty `X` suppliable:
//! `d-(X) >= |{remaining roots outside X}| + 1` if `X` avoids `S`, without
//! the `+ 1` otherwise (the growing tree itself acts as one root). An arc
//! from `S` is safe when deleting it preserves that inequality for the
//! enlarged tree, and a safe arc always exists on feasible input, so its
//! absence is an internal error.

use crate::conditions::{check_cai_frank, check_edmonds_with, check_feasible, FeasibilityReport};
use crate::flow::FlowNetwork;
use crate::graph::{subsets, MixedGraph, RootBounds, VertexSet};
use crate::orient::{orient_all, OrientOptions, OrientationResult, PARANOID_AUTO_MAX};
use crate::verify::verify_packing;
use crate::Error;

/// How many of the `k` roots sit at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    counts: Vec<u64>,
}

impl RootMultiset {
    pub fn from_counts(counts: Vec<u64>) -> Result<RootMultiset, Error> {
        if counts.iter().sum::<u64>() == 0 {
            return Err(Error::ZeroK);
        }
        Ok(RootMultiset { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, v: usize) -> u64 {
        self.counts.get(v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// One entry per root occurrence, in ascending vertex order.
    pub fn sequence(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total() as usize);
        for (v, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(v, c as usize));
        }
        out
    }

    pub fn satisfies(&self, b: &RootBounds) -> bool {
        self.counts.len() == b.len()
            && self.total() == b.k()
            && self
                .counts
                .iter()
                .enumerate()
                .all(|(v, &c)| b.f(v) <= c && c <= b.g(v))
    }
}

/// Picks the first root-count vector inside the `f ..= g` box (summing to
/// `k`) that passes the cut condition, preferring more roots at
/// earlier vertices. Directed feasibility guarantees one exists, so an
/// exhausted search reports the reason.
pub fn select_roots(
    d: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<RootMultiset, Error> {
    if d.edge_count() > 0 {
        return Err(Error::EdgesPresent);
    }
    b.check_matches(d)?;
    let n = d.vertex_count();
    // Suffix sums of f and g bound how much budget the rest can absorb.
    let mut suffix_f = vec![0u64; n + 1];
    let mut suffix_g = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix_f[v] = suffix_f[v + 1] + b.f(v);
        suffix_g[v] = suffix_g[v + 1] + b.g(v);
    }

    fn descend(
        d: &MixedGraph,
        b: &RootBounds,
        max_n: usize,
        suffix_f: &[u64],
        suffix_g: &[u64],
        counts: &mut Vec<u64>,
        remaining: u64,
    ) -> Result<Option<RootMultiset>, Error> {
        let v = counts.len();
        if v == b.len() {
            debug_assert_eq!(remaining, 0);
            let candidate = RootMultiset {
                counts: counts.clone(),
            };
            let ok = check_edmonds_with(d, &candidate.sequence(), max_n, false)?.is_none();
            return Ok(ok.then_some(candidate));
        }
        let hi = b.g(v).min(remaining.saturating_sub(suffix_f[v + 1]));
        let lo = b.f(v).max(remaining.saturating_sub(suffix_g[v + 1]));
        if lo > hi {
            return Ok(None);
        }
        for c in (lo..=hi).rev() {
            counts.push(c);
            let found = descend(d, b, max_n, suffix_f, suffix_g, counts, remaining - c)?;
            counts.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    let mut counts = Vec::with_capacity(n);
    if let Some(roots) = descend(d, b, max_n, &suffix_f, &suffix_g, &mut counts, b.k())? {
        return Ok(roots);
    }
    // Nothing passed: either the caller broke the precondition or there is
    // a bug; tell them which.
    let report = check_cai_frank(d, b, max_n)?;
    if !report.feasible() {
        Err(Error::ConditionsViolated(Box::new(report)))
    } else {
        Err(Error::Internal(
            "directed conditions hold but no admissible root vector passes the cut condition"
                .to_string(),
        ))
    }
}

fn check_arc_candidate(
    d: &MixedGraph,
    alive: &[bool],
    tree: VertexSet,
    arc: usize,
) -> Result<(usize, usize), Error> {
    if d.edge_count() > 0 {
        return Err(Error::EdgesPresent);
    }
    if alive.len() != d.arc_count() {
        return Err(Error::BadCandidate {
            index: arc,
            reason: "alive mask length does not match the arc count",
        });
    }
    let &(tail, head) = d.arcs().get(arc).ok_or(Error::ElementIndex {
        index: arc,
        kind: "arc",
    })?;
    if !alive[arc] {
        return Err(Error::BadCandidate {
            index: arc,
            reason: "arc already used",
        });
    }
    if !tree.contains(tail) || tree.contains(head) {
        return Err(Error::BadCandidate {
            index: arc,
            reason: "arc must leave the grown tree",
        });
    }
    Ok((tail, head))
}

fn residual_demand(tree: VertexSet, remaining: &[usize], x: VertexSet) -> u64 {
    let outside = remaining.iter().filter(|&&r| !x.contains(r)).count() as u64;
    outside + u64::from(!x.intersects(tree))
}

/// Does the residual cut inequality survive taking `arc` into the tree?
///
/// `alive` masks the arcs still available, `tree` is the grown vertex set
/// including the current root, `remaining` lists the roots of trees not yet
/// started. Checked over every nonempty vertex subset.
pub fn safe_arc(
    d: &MixedGraph,
    alive: &[bool],
    tree: VertexSet,
    remaining: &[usize],
    arc: usize,
    max_n: usize,
) -> Result<bool, Error> {
    let n = d.vertex_count();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    let (_, head) = check_arc_candidate(d, alive, tree, arc)?;
    let grown = tree.with(head);
    for x in subsets(d.full_set()) {
        if x.is_empty() {
            continue;
        }
        let in_degree = d
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(i, &(t, h))| alive[i] && i != arc && x.contains(h) && !x.contains(t))
            .count() as u64;
        if in_degree < residual_demand(grown, remaining, x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flow-backed variant of [`safe_arc`]: one source unit per remaining root
/// plus one unit deliverable anywhere in the grown tree; safe exactly when
/// every vertex can absorb all `|remaining| + 1` units.
pub fn safe_arc_flow(
    d: &MixedGraph,
    alive: &[bool],
    tree: VertexSet,
    remaining: &[usize],
    arc: usize,
) -> Result<bool, Error> {
    let (_, head) = check_arc_candidate(d, alive, tree, arc)?;
    let grown = tree.with(head);
    let n = d.vertex_count();
    let source = n;
    let tree_tap = n + 1;
    let need = remaining.len() as i64 + 1;
    for v in 0..n {
        let mut net = FlowNetwork::new(n + 2);
        for (i, &(t, h)) in d.arcs().iter().enumerate() {
            if alive[i] && i != arc {
                net.add_edge(t, h, 1);
            }
        }
        for &r in remaining {
            net.add_edge(source, r, 1);
        }
        net.add_edge(source, tree_tap, 1);
        for w in grown.iter() {
            net.add_edge(tree_tap, w, 1);
        }
        if net.max_flow(source, v) < need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The growth invariant for the current residual digraph: every nonempty
/// `X` already has enough entering arcs for the remaining roots plus the
/// growing tree.
fn growth_invariant_holds(
    d: &MixedGraph,
    alive: &[bool],
    tree: VertexSet,
    remaining: &[usize],
) -> bool {
    for x in subsets(d.full_set()) {
        if x.is_empty() {
            continue;
        }
        let in_degree = d
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(i, &(t, h))| alive[i] && x.contains(h) && !x.contains(t))
            .count() as u64;
        if in_degree < residual_demand(tree, remaining, x) {
            return false;
        }
    }
    true
}

/// One spanning mixed arborescence of a packing: a root plus the stable
/// indices of the edges and arcs it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    pub root: usize,
    pub edges: Vec<usize>,
    pub arcs: Vec<usize>,
}

/// `k` element-disjoint spanning mixed arborescences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub trees: Vec<Tree>,
}

#[derive(Clone, Copy, Debug)]
pub struct PackOptions {
    pub max_n: usize,
    /// `None` picks automatically by vertex count.
    pub paranoid: Option<bool>,
}

impl Default for PackOptions {
    fn default() -> PackOptions {
        PackOptions {
            max_n: crate::graph::DEFAULT_MAX_N,
            paranoid: None,
        }
    }
}

/// Grows `k` arc-disjoint spanning arborescences for the given roots, one
/// tree at a time, taking the first safe arc in stable index order.
pub fn pack_arborescences(
    d: &MixedGraph,
    roots: &RootMultiset,
    opts: PackOptions,
) -> Result<Packing, Error> {
    if d.edge_count() > 0 {
        return Err(Error::EdgesPresent);
    }
    let n = d.vertex_count();
    if roots.counts().len() != n {
        return Err(Error::BoundsMismatch {
            bounds: roots.counts().len(),
            graph: n,
        });
    }
    let paranoid = opts.paranoid.unwrap_or(n <= PARANOID_AUTO_MAX);
    let sequence = roots.sequence();
    let full = d.full_set();
    let mut alive = vec![true; d.arc_count()];
    let mut trees = Vec::with_capacity(sequence.len());

    for (i, &root) in sequence.iter().enumerate() {
        let remaining = &sequence[i + 1..];
        let mut tree = VertexSet::singleton(root);
        let mut tree_arcs = Vec::with_capacity(n - 1);
        while tree != full {
            if paranoid && !growth_invariant_holds(d, &alive, tree, remaining) {
                return Err(Error::Internal(format!(
                    "growth invariant broken for tree {i} at {tree:?}"
                )));
            }
            let mut chosen = None;
            for (arc, &(tail, head)) in d.arcs().iter().enumerate() {
                if alive[arc]
                    && tree.contains(tail)
                    && !tree.contains(head)
                    && safe_arc(d, &alive, tree, remaining, arc, opts.max_n)?
                {
                    chosen = Some((arc, head));
                    break;
                }
            }
            let Some((arc, head)) = chosen else {
                return Err(Error::Internal(format!(
                    "no safe arc leaves {tree:?} for tree {i} rooted at {root}"
                )));
            };
            alive[arc] = false;
            tree.insert(head);
            tree_arcs.push(arc);
        }
        tree_arcs.sort_unstable();
        trees.push(Tree {
            root,
            edges: Vec::new(),
            arcs: tree_arcs,
        });
    }
    Ok(Packing { trees })
}

/// Outcome of the full pipeline.
#[derive(Clone, Debug)]
pub enum PackOutcome {
    Packed(Box<PackedSolution>),
    Infeasible(Box<FeasibilityReport>),
}

/// A packing together with how it was produced.
#[derive(Clone, Debug)]
pub struct PackedSolution {
    pub packing: Packing,
    pub orientation: OrientationResult,
    pub roots: RootMultiset,
}

fn describe_steps(orientation: &OrientationResult) -> String {
    orientation
        .steps
        .iter()
        .map(|s| {
            format!(
                "edge {}: {}->{}{}",
                s.edge,
                s.tail,
                s.head,
                if s.forced_by.is_some() { " (forced)" } else { "" }
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Full pipeline: feasibility check, edge orientation, root selection,
/// directed packing, and mapping oriented arcs back to their source edges.
/// The returned packing always passes verification; a failure there is an
/// internal error carrying the orientation log.
pub fn pack_mixed(
    g: &MixedGraph,
    b: &RootBounds,
    opts: PackOptions,
) -> Result<PackOutcome, Error> {
    let report = check_feasible(g, b, opts.max_n)?;
    if !report.feasible() {
        return Ok(PackOutcome::Infeasible(Box::new(report)));
    }
    let paranoid = opts
        .paranoid
        .unwrap_or(g.vertex_count() <= PARANOID_AUTO_MAX);
    let orientation = orient_all(
        g,
        b,
        OrientOptions {
            max_n: opts.max_n,
            paranoid: Some(paranoid),
        },
    )?;
    let roots = select_roots(&orientation.digraph, b, opts.max_n)?;
    if paranoid {
        if !roots.satisfies(b) {
            return Err(Error::Internal(format!(
                "selected roots {:?} leave the bounds box",
                roots.counts()
            )));
        }
        // Cross-check the chosen roots against the flow backend.
        check_edmonds_with(&orientation.digraph, &roots.sequence(), opts.max_n, true)?;
    }
    let directed = pack_arborescences(
        &orientation.digraph,
        &roots,
        PackOptions {
            max_n: opts.max_n,
            paranoid: Some(paranoid),
        },
    )?;

    // Arcs past the original count are oriented edges; map them back.
    let arc_count = g.arc_count();
    let trees = directed
        .trees
        .into_iter()
        .map(|tree| {
            let mut edges = Vec::new();
            let mut arcs = Vec::new();
            for a in tree.arcs {
                if a < arc_count {
                    arcs.push(a);
                } else {
                    edges.push(a - arc_count);
                }
            }
            edges.sort_unstable();
            arcs.sort_unstable();
            Tree {
                root: tree.root,
                edges,
                arcs,
            }
        })
        .collect();
    let packing = Packing { trees };

    let verification = verify_packing(g, b, &packing);
    if !verification.ok() {
        return Err(Error::Internal(format!(
            "pipeline produced an invalid packing: {:?}; orientation steps: {}",
            verification.failures,
            describe_steps(&orientation)
        )));
    }
    Ok(PackOutcome::Packed(Box::new(PackedSolution {
        packing,
        orientation,
        roots,
    })))
}
