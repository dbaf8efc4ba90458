//! Reduces a feasible mixed instance to a feasible directed one by
//! orienting undirected edges one at a time.
//!
//! Before each edge is oriented, the subpartitions that hold the lower- or
//! upper-bound condition with equality (the tight families) are recomputed
//! from scratch. If some tight family's union contains exactly one endpoint
//! of the edge, the edge must be oriented into that union; on a feasible
//! instance tight unions never disagree about the direction, and orienting
//! this way leaves the tight quantities unchanged, so both conditions
//! survive the step. Paranoid mode re-verifies all of that after every
//! step.

use crate::conditions::{check_cai_frank, check_feasible, condition_lhs};
use crate::graph::{subpartitions, MixedGraph, RootBounds, Subpartition, VertexSet};
use crate::Error;

/// Vertex counts up to this size get the per-step re-checks by default.
pub const PARANOID_AUTO_MAX: usize = 8;

/// Subpartitions achieving equality in the lower-bound condition (`lower`)
/// or the upper-bound condition (`upper`), with their unions cached.
#[derive(Clone, Debug)]
pub struct TightFamilies {
    pub lower: Vec<Subpartition>,
    pub upper: Vec<Subpartition>,
    pub lower_unions: Vec<VertexSet>,
    pub upper_unions: Vec<VertexSet>,
}

impl TightFamilies {
    /// All tight families with their unions, lower-bound ones first.
    pub fn iter_with_unions(&self) -> impl Iterator<Item = (&Subpartition, VertexSet)> {
        self.lower
            .iter()
            .zip(self.lower_unions.iter().copied())
            .chain(self.upper.iter().zip(self.upper_unions.iter().copied()))
    }
}

/// Exhaustively collects every tight subpartition of both conditions.
/// Errors with the violating report if the conditions do not hold at all.
pub fn tight_families(
    g: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<TightFamilies, Error> {
    b.check_matches(g)?;
    let full = g.full_set();
    let k = b.k() as i64;
    let mut out = TightFamilies {
        lower: Vec::new(),
        upper: Vec::new(),
        lower_unions: Vec::new(),
        upper_unions: Vec::new(),
    };
    let mut violated = false;
    for sp in subpartitions(full, max_n)? {
        let t = sp.block_count() as i64;
        let lhs = condition_lhs(g, &sp)? as i64;
        let union = sp.union();
        let slack_lower = lhs - (k * (t - 1) + b.f_sum(full.difference(union)) as i64);
        let slack_upper = lhs - (k * t - b.g_sum(union) as i64);
        if slack_lower < 0 || slack_upper < 0 {
            violated = true;
            break;
        }
        if slack_lower == 0 {
            out.lower.push(sp.clone());
            out.lower_unions.push(union);
        }
        if slack_upper == 0 {
            out.upper.push(sp.clone());
            out.upper_unions.push(union);
        }
    }
    if violated {
        let report = check_feasible(g, b, max_n)?;
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    Ok(out)
}

/// What the tight families say about one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientChoice {
    /// Some tight union contains `head` but not `tail`, so the edge must be
    /// oriented `tail -> head`; `family` is the first such witness.
    Forced {
        tail: usize,
        head: usize,
        family: Subpartition,
    },
    /// No tight union separates the endpoints.
    Free,
}

/// Applies the orientation rule to the edge `{u, v}`. Two tight unions
/// demanding opposite directions cannot happen on a feasible instance, so
/// that case is an internal error.
pub fn separating_direction(
    tight: &TightFamilies,
    u: usize,
    v: usize,
) -> Result<OrientChoice, Error> {
    let mut forced: Option<(usize, usize, Subpartition)> = None;
    for (family, union) in tight.iter_with_unions() {
        let has_u = union.contains(u);
        let has_v = union.contains(v);
        if has_u == has_v {
            continue;
        }
        let (tail, head) = if has_v { (u, v) } else { (v, u) };
        match &forced {
            None => forced = Some((tail, head, family.clone())),
            Some((t0, h0, first)) => {
                if (*t0, *h0) != (tail, head) {
                    return Err(Error::Internal(format!(
                        "tight unions demand opposite orientations of edge {{{u}, {v}}}: \
                         {first:?} vs {family:?}"
                    )));
                }
            }
        }
    }
    Ok(match forced {
        Some((tail, head, family)) => OrientChoice::Forced { tail, head, family },
        None => OrientChoice::Free,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct OrientOptions {
    pub max_n: usize,
    /// `None` picks automatically by vertex count.
    pub paranoid: Option<bool>,
}

impl Default for OrientOptions {
    fn default() -> OrientOptions {
        OrientOptions {
            max_n: crate::graph::DEFAULT_MAX_N,
            paranoid: None,
        }
    }
}

/// One orientation step, in original edge-index terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientStep {
    pub edge: usize,
    pub tail: usize,
    pub head: usize,
    /// The tight family that forced the direction, if any.
    pub forced_by: Option<Subpartition>,
}

/// Result of orienting every edge.
#[derive(Clone, Debug)]
pub struct OrientationResult {
    /// The input graph with every edge replaced by an arc: original arcs
    /// keep indices `0..arc_count`, the oriented copy of edge `e` becomes
    /// arc `arc_count + e`.
    pub digraph: MixedGraph,
    /// Per original edge index, the chosen `(tail, head)`.
    pub orientation: Vec<(usize, usize)>,
    pub steps: Vec<OrientStep>,
    /// Number of per-step invariant re-checks performed (paranoid mode).
    pub rechecks: usize,
}

/// Orients all edges in stable index order. Free edges go from the lower
/// vertex index to the higher one. The result satisfies the directed
/// feasibility conditions for the same bounds.
pub fn orient_all(
    g: &MixedGraph,
    b: &RootBounds,
    opts: OrientOptions,
) -> Result<OrientationResult, Error> {
    let report = check_feasible(g, b, opts.max_n)?;
    if !report.feasible() {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    let paranoid = opts
        .paranoid
        .unwrap_or(g.vertex_count() <= PARANOID_AUTO_MAX);

    let (names, index) = g.names_and_index();
    let all_edges = g.edges().to_vec();
    let mut arcs = g.arcs().to_vec();
    let mut orientation = Vec::with_capacity(all_edges.len());
    let mut steps = Vec::with_capacity(all_edges.len());
    let mut rechecks = 0usize;

    for (edge_index, &(u, v)) in all_edges.iter().enumerate() {
        let current = MixedGraph::from_parts(
            names.clone(),
            index.clone(),
            all_edges[edge_index..].to_vec(),
            arcs.clone(),
        );
        let tight = tight_families(&current, b, opts.max_n).map_err(|e| match e {
            Error::ConditionsViolated(report) if edge_index > 0 => Error::Internal(format!(
                "conditions lost before orienting edge {edge_index}: {report}"
            )),
            other => other,
        })?;
        let choice = separating_direction(&tight, u, v)?;
        let (tail, head, forced_by) = match choice {
            OrientChoice::Forced { tail, head, family } => (tail, head, Some(family)),
            OrientChoice::Free => (u.min(v), u.max(v), None),
        };
        arcs.push((tail, head));
        let next = MixedGraph::from_parts(
            names.clone(),
            index.clone(),
            all_edges[edge_index + 1..].to_vec(),
            arcs.clone(),
        );

        if paranoid {
            // The step must keep both conditions intact...
            let after = check_feasible(&next, b, opts.max_n)?;
            if !after.feasible() {
                return Err(Error::Internal(format!(
                    "conditions broken by orienting edge {edge_index} as {tail}->{head}: {after}; \
                     steps so far: {steps:?}"
                )));
            }
            // ...and leave every previously tight quantity unchanged.
            for family in tight.lower.iter().chain(&tight.upper) {
                let before_q = condition_lhs(&current, family)?;
                let after_q = condition_lhs(&next, family)?;
                if before_q != after_q {
                    return Err(Error::Internal(format!(
                        "tight quantity changed from {before_q} to {after_q} for {family:?} \
                         while orienting edge {edge_index}"
                    )));
                }
            }
            rechecks += 1;
        }

        orientation.push((tail, head));
        steps.push(OrientStep {
            edge: edge_index,
            tail,
            head,
            forced_by,
        });
    }

    let digraph = MixedGraph::from_parts(names, index, Vec::new(), arcs);
    if paranoid {
        let directed = check_cai_frank(&digraph, b, opts.max_n)?;
        if !directed.feasible() {
            return Err(Error::Internal(format!(
                "orientation finished but the digraph fails the directed conditions: {directed}"
            )));
        }
    }
    Ok(OrientationResult {
        digraph,
        orientation,
        steps,
        rechecks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_MAX_N;

    fn sp(blocks: &[&[usize]]) -> Subpartition {
        Subpartition::new(
            blocks
                .iter()
                .map(|b| VertexSet::from_indices(b.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    fn mixed_pair() -> (MixedGraph, RootBounds) {
        let g = MixedGraph::new(&["a", "b"], &[("a", "b")], &[("a", "b")]).unwrap();
        let b = RootBounds::new(2, vec![2, 0], vec![2, 0]).unwrap();
        (g, b)
    }

    #[test]
    fn tight_families_of_mixed_pair() {
        let (g, b) = mixed_pair();
        let tight = tight_families(&g, &b, DEFAULT_MAX_N).unwrap();
        for sp in [sp(&[&[1]]), sp(&[&[0], &[1]])] {
            assert!(tight.lower.contains(&sp), "lower missing {sp:?}");
            assert!(tight.upper.contains(&sp), "upper missing {sp:?}");
        }
    }

    #[test]
    fn tight_families_of_triangle() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[])
            .unwrap();
        let b = RootBounds::uniform(1, 3).unwrap();
        let tight = tight_families(&g, &b, DEFAULT_MAX_N).unwrap();
        // Only the full-vertex block is lower-tight; only the empty
        // subpartition is upper-tight (0 = 0 - g~(empty)).
        assert_eq!(tight.lower, vec![sp(&[&[0, 1, 2]])]);
        assert_eq!(tight.upper, vec![Subpartition::empty()]);
    }

    #[test]
    fn tight_families_of_lonely_vertex() {
        let g = MixedGraph::new(&["a"], &[], &[]).unwrap();
        let b = RootBounds::new(1, vec![1], vec![1]).unwrap();
        let tight = tight_families(&g, &b, DEFAULT_MAX_N).unwrap();
        // 0 = k(0-1) + f~(V) makes the empty family lower-tight; the empty
        // family is always upper-tight, and {a} is tight on both sides here.
        assert!(tight.lower.contains(&Subpartition::empty()));
        assert!(tight.upper.contains(&Subpartition::empty()));
        assert!(tight.upper.contains(&sp(&[&[0]])));
    }

    #[test]
    fn tight_families_requires_feasible_conditions() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[])
            .unwrap();
        let b = RootBounds::uniform(2, 3).unwrap();
        assert!(matches!(
            tight_families(&g, &b, DEFAULT_MAX_N),
            Err(Error::ConditionsViolated(_))
        ));
    }

    #[test]
    fn separating_direction_on_mixed_pair() {
        let (g, b) = mixed_pair();
        let tight = tight_families(&g, &b, DEFAULT_MAX_N).unwrap();
        match separating_direction(&tight, 0, 1).unwrap() {
            OrientChoice::Forced { tail, head, .. } => {
                assert_eq!((tail, head), (0, 1));
            }
            OrientChoice::Free => panic!("the edge must be forced toward b"),
        }
    }

    #[test]
    fn separating_direction_rejects_conflicting_unions() {
        // Hand-built tight set whose unions disagree about the edge {0, 1};
        // unreachable from any feasible instance, so it must error out.
        let conflicted = TightFamilies {
            lower: vec![sp(&[&[1]])],
            upper: vec![sp(&[&[0]])],
            lower_unions: vec![VertexSet::singleton(1)],
            upper_unions: vec![VertexSet::singleton(0)],
        };
        assert!(matches!(
            separating_direction(&conflicted, 0, 1),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn separating_direction_free_cases() {
        let empty = TightFamilies {
            lower: Vec::new(),
            upper: Vec::new(),
            lower_unions: Vec::new(),
            upper_unions: Vec::new(),
        };
        assert_eq!(separating_direction(&empty, 0, 1).unwrap(), OrientChoice::Free);

        let covering = TightFamilies {
            lower: vec![sp(&[&[0, 1]])],
            upper: Vec::new(),
            lower_unions: vec![VertexSet::from_indices([0, 1])],
            upper_unions: Vec::new(),
        };
        assert_eq!(
            separating_direction(&covering, 0, 1).unwrap(),
            OrientChoice::Free
        );
    }

    #[test]
    fn orient_all_mixed_pair() {
        let (g, b) = mixed_pair();
        let result = orient_all(&g, &b, OrientOptions::default()).unwrap();
        assert_eq!(result.orientation, vec![(0, 1)]);
        assert_eq!(result.digraph.arcs(), &[(0, 1), (0, 1)]);
        assert!(result.steps[0].forced_by.is_some());
        assert!(check_cai_frank(&result.digraph, &b, DEFAULT_MAX_N)
            .unwrap()
            .feasible());
    }

    #[test]
    fn orient_all_triangle() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[])
            .unwrap();
        let b = RootBounds::uniform(1, 3).unwrap();
        let result = orient_all(&g, &b, OrientOptions::default()).unwrap();
        assert_eq!(result.orientation.len(), 3);
        assert!(check_cai_frank(&result.digraph, &b, DEFAULT_MAX_N)
            .unwrap()
            .feasible());
    }

    #[test]
    fn orient_all_is_identity_on_digraphs() {
        let d = MixedGraph::new(&["a", "b", "c"], &[], &[("a", "b"), ("b", "c"), ("c", "a")])
            .unwrap();
        let b = RootBounds::uniform(1, 3).unwrap();
        let result = orient_all(&d, &b, OrientOptions::default()).unwrap();
        assert!(result.steps.is_empty());
        assert_eq!(result.digraph.arcs(), d.arcs());
    }

    #[test]
    fn orient_all_rejects_infeasible_input() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[])
            .unwrap();
        let b = RootBounds::uniform(2, 3).unwrap();
        assert!(matches!(
            orient_all(&g, &b, OrientOptions::default()),
            Err(Error::ConditionsViolated(_))
        ));
    }

    #[test]
    fn orientation_is_deterministic() {
        let g = MixedGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
            &[("a", "c")],
        )
        .unwrap();
        let b = RootBounds::uniform(1, 4).unwrap();
        let first = orient_all(&g, &b, OrientOptions::default()).unwrap();
        let second = orient_all(&g, &b, OrientOptions::default()).unwrap();
        assert_eq!(first.orientation, second.orientation);
        assert_eq!(first.steps, second.steps);
    }
}
