//! Exact feasibility checkers with machine-checkable witnesses.
//!
//! A mixed graph packs `k` edge- and arc-disjoint spanning mixed
//! arborescences with root counts in `f ..= g` exactly when three counting
//! conditions hold:
//!
//! * root budget: `f~(V) <= k`;
//! * lower bound, reported as `ii`: for every subpartition
//!   `P = {X1, .., Xt}`,
//!   `e_E(P) + sum_j d-(Xj) >= k(t-1) + f~(V \ union(P))`;
//! * upper bound, reported as `iii`: for every subpartition,
//!   `e_E(P) + sum_j d-(Xj) >= k*t - g~(union(P))`.
//!
//! The empty subpartition makes the lower bound degenerate to the root
//! budget, so the budget is also covered by the `ii` scan; it is still
//! checked and reported separately because its witness is just a pair of
//! numbers. All scans are exhaustive over `Bell(n+1)` subpartitions, capped
//! by `max_n`. Special-case checkers for purely directed and purely
//! undirected inputs return the same report shape.

use std::collections::BTreeMap;
use std::fmt;

use crate::flow::FlowNetwork;
use crate::graph::{subpartitions, subsets, MixedGraph, RootBounds, Subpartition, VertexSet};
use crate::Error;

/// Which condition a report refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConditionId {
    /// `f~(V) <= k`.
    RootBudget,
    /// The subpartition lower-bound condition, serialized as `ii`.
    LowerBound,
    /// The subpartition upper-bound condition, serialized as `iii`.
    UpperBound,
    /// The per-set cut condition against a prescribed root multiset.
    Edmonds,
}

impl ConditionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::RootBudget => "root-budget",
            ConditionId::LowerBound => "ii",
            ConditionId::UpperBound => "iii",
            ConditionId::Edmonds => "edmonds",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The object that violates a condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A subpartition failing a family inequality.
    Family(Subpartition),
    /// A vertex set failing a per-set cut inequality.
    Cut(VertexSet),
}

/// A failed condition together with the two sides of its inequality.
///
/// For `RootBudget` the inequality is `lhs <= rhs` with `lhs = f~(V)` and
/// `rhs = k` and there is no set witness; for every other condition it is
/// `lhs >= rhs` and `witness` is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: ConditionId,
    pub witness: Option<Witness>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of a feasibility check: an optional violation plus, per condition,
/// the minimum slack (left side minus required bound) seen over the whole
/// scan. Negative slack means violated; zero means tight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub violation: Option<Violation>,
    pub slack_summary: BTreeMap<ConditionId, i64>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violated_condition(&self) -> Option<ConditionId> {
        self.violation.as_ref().map(|v| v.condition)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "feasible"),
            Some(v) => {
                write!(f, "condition {} violated", v.condition)?;
                match &v.witness {
                    Some(Witness::Family(sp)) => write!(f, " by subpartition {sp:?}")?,
                    Some(Witness::Cut(x)) => write!(f, " by vertex set {x:?}")?,
                    None => {}
                }
                write!(f, " ({} < {} required)", v.lhs, v.rhs)
            }
        }
    }
}

/// Shared left side of both subpartition conditions:
/// `e_E(P) + sum over blocks of d-(X)`.
pub fn condition_lhs(g: &MixedGraph, p: &Subpartition) -> Result<u64, Error> {
    let crossing = g.crossing_edges(p)?;
    let entering: u64 = p.blocks().iter().map(|&x| g.in_degree_raw(x)).sum();
    Ok(crossing + entering)
}

/// One scanned condition: minimum slack and the subpartition attaining it,
/// picked by maximal violation, then fewest blocks, then canonical order.
#[derive(Clone, Debug)]
struct FamilyScan {
    min_slack: i64,
    argmin: Subpartition,
    lhs: i64,
    rhs: i64,
}

impl FamilyScan {
    fn offer(&mut self, slack: i64, sp: &Subpartition, lhs: i64, rhs: i64) {
        let better = slack < self.min_slack
            || (slack == self.min_slack
                && (sp.block_count() < self.argmin.block_count()
                    || (sp.block_count() == self.argmin.block_count() && *sp < self.argmin)));
        if better {
            self.min_slack = slack;
            self.argmin = sp.clone();
            self.lhs = lhs;
            self.rhs = rhs;
        }
    }
}

/// Scans all subpartitions once, tracking both conditions.
fn scan_families(
    g: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<(FamilyScan, FamilyScan), Error> {
    b.check_matches(g)?;
    let full = g.full_set();
    let k = b.k() as i64;
    let mut lower: Option<FamilyScan> = None;
    let mut upper: Option<FamilyScan> = None;
    for sp in subpartitions(full, max_n)? {
        let t = sp.block_count() as i64;
        let lhs = condition_lhs(g, &sp)? as i64;
        let union = sp.union();
        let rhs_lower = k * (t - 1) + b.f_sum(full.difference(union)) as i64;
        let rhs_upper = k * t - b.g_sum(union) as i64;
        match &mut lower {
            None => {
                lower = Some(FamilyScan {
                    min_slack: lhs - rhs_lower,
                    argmin: sp.clone(),
                    lhs,
                    rhs: rhs_lower,
                })
            }
            Some(scan) => scan.offer(lhs - rhs_lower, &sp, lhs, rhs_lower),
        }
        match &mut upper {
            None => {
                upper = Some(FamilyScan {
                    min_slack: lhs - rhs_upper,
                    argmin: sp.clone(),
                    lhs,
                    rhs: rhs_upper,
                })
            }
            Some(scan) => scan.offer(lhs - rhs_upper, &sp, lhs, rhs_upper),
        }
    }
    // The empty subpartition is always enumerated, so both scans are set.
    Ok((lower.unwrap(), upper.unwrap()))
}

/// `f~(V) <= k`; the violation carries the two numbers.
pub fn check_root_budget(b: &RootBounds, vertices: VertexSet) -> Option<Violation> {
    let total = b.f_sum(vertices) as i64;
    let k = b.k() as i64;
    if total <= k {
        None
    } else {
        Some(Violation {
            condition: ConditionId::RootBudget,
            witness: None,
            lhs: total,
            rhs: k,
        })
    }
}

/// Lower-bound condition over every subpartition; `None` means it holds.
pub fn check_condition_f(
    g: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<Option<Violation>, Error> {
    let (lower, _) = scan_families(g, b, max_n)?;
    Ok(violation_from_scan(ConditionId::LowerBound, &lower))
}

/// Upper-bound condition over every subpartition; `None` means it holds.
pub fn check_condition_g(
    g: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<Option<Violation>, Error> {
    let (_, upper) = scan_families(g, b, max_n)?;
    Ok(violation_from_scan(ConditionId::UpperBound, &upper))
}

fn violation_from_scan(condition: ConditionId, scan: &FamilyScan) -> Option<Violation> {
    if scan.min_slack >= 0 {
        None
    } else {
        Some(Violation {
            condition,
            witness: Some(Witness::Family(scan.argmin.clone())),
            lhs: scan.lhs,
            rhs: scan.rhs,
        })
    }
}

/// Full feasibility check: root budget, then lower bound, then upper bound.
/// The report carries the first failing witness and all three minimum slacks.
pub fn check_feasible(
    g: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<FeasibilityReport, Error> {
    b.check_matches(g)?;
    let full = g.full_set();
    let budget = check_root_budget(b, full);
    let budget_slack = b.k() as i64 - b.f_sum(full) as i64;
    let (lower, upper) = scan_families(g, b, max_n)?;
    let mut slack_summary = BTreeMap::new();
    slack_summary.insert(ConditionId::RootBudget, budget_slack);
    slack_summary.insert(ConditionId::LowerBound, lower.min_slack);
    slack_summary.insert(ConditionId::UpperBound, upper.min_slack);
    let violation = budget
        .or_else(|| violation_from_scan(ConditionId::LowerBound, &lower))
        .or_else(|| violation_from_scan(ConditionId::UpperBound, &upper));
    Ok(FeasibilityReport {
        violation,
        slack_summary,
    })
}

/// A failing cut: `in_degree < demand` for `set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutViolation {
    pub set: VertexSet,
    pub in_degree: u64,
    pub demand: u64,
}

fn require_digraph(d: &MixedGraph) -> Result<(), Error> {
    if d.edge_count() > 0 {
        Err(Error::EdgesPresent)
    } else {
        Ok(())
    }
}

/// Cut condition for packing arborescences from the root multiset `roots`
/// (one entry per occurrence): every nonempty `X` needs
/// `d-(X) >= |{roots outside X}|`. Checked by subset enumeration; the
/// returned witness maximizes the violation (ties: smaller set, then
/// canonical order). `None` means the condition holds.
pub fn check_edmonds(
    d: &MixedGraph,
    roots: &[usize],
    max_n: usize,
) -> Result<Option<CutViolation>, Error> {
    require_digraph(d)?;
    let n = d.vertex_count();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    for &r in roots {
        if r >= n {
            return Err(Error::VertexIndex { index: r, count: n });
        }
    }
    let mut best: Option<(i64, CutViolation)> = None;
    for x in subsets(d.full_set()) {
        if x.is_empty() {
            continue;
        }
        let in_degree = d.in_degree_raw(x);
        let demand = roots.iter().filter(|&&r| !x.contains(r)).count() as u64;
        let slack = in_degree as i64 - demand as i64;
        let candidate = CutViolation {
            set: x,
            in_degree,
            demand,
        };
        let better = match &best {
            None => true,
            Some((s, c)) => {
                slack < *s
                    || (slack == *s
                        && (x.len() < c.set.len() || (x.len() == c.set.len() && x < c.set)))
            }
        };
        if better {
            best = Some((slack, candidate));
        }
    }
    Ok(best.and_then(|(slack, c)| if slack < 0 { Some(c) } else { None }))
}

/// Flow-backed variant of [`check_edmonds`]: a super-source gets one arc per
/// root occurrence, and the condition holds exactly when every vertex admits
/// `k` units of flow from the source. The witness is the sink side of a
/// deficient minimum cut.
pub fn check_edmonds_flow(d: &MixedGraph, roots: &[usize]) -> Result<Option<CutViolation>, Error> {
    require_digraph(d)?;
    let n = d.vertex_count();
    for &r in roots {
        if r >= n {
            return Err(Error::VertexIndex { index: r, count: n });
        }
    }
    let k = roots.len() as i64;
    let source = n;
    for v in 0..n {
        let mut net = FlowNetwork::new(n + 1);
        for &(tail, head) in d.arcs() {
            net.add_edge(tail, head, 1);
        }
        for &r in roots {
            net.add_edge(source, r, 1);
        }
        if net.max_flow(source, v) < k {
            let reach = net.residual_reachable(source);
            let set = VertexSet::from_indices((0..n).filter(|&u| !reach[u]));
            let in_degree = d.in_degree_raw(set);
            let demand = roots.iter().filter(|&&r| !set.contains(r)).count() as u64;
            return Ok(Some(CutViolation {
                set,
                in_degree,
                demand,
            }));
        }
    }
    Ok(None)
}

/// Enumeration backend with an optional cross-check against the flow
/// backend; a disagreement is an internal error.
pub fn check_edmonds_with(
    d: &MixedGraph,
    roots: &[usize],
    max_n: usize,
    cross_check: bool,
) -> Result<Option<CutViolation>, Error> {
    let by_enum = check_edmonds(d, roots, max_n)?;
    if cross_check {
        let by_flow = check_edmonds_flow(d, roots)?;
        if by_enum.is_some() != by_flow.is_some() {
            return Err(Error::Internal(format!(
                "cut-condition backends disagree: enumeration {:?}, flow {:?}",
                by_enum, by_flow
            )));
        }
    }
    Ok(by_enum)
}

/// Directed special case of [`check_feasible`] (`E` must be empty):
/// budget, the lower-bound condition over subpartitions, and the per-set
/// upper bound `d-(X) >= k - g~(X)` over nonempty sets, whose witness is a
/// vertex set rather than a subpartition.
pub fn check_cai_frank(
    d: &MixedGraph,
    b: &RootBounds,
    max_n: usize,
) -> Result<FeasibilityReport, Error> {
    require_digraph(d)?;
    b.check_matches(d)?;
    let full = d.full_set();
    let budget = check_root_budget(b, full);
    let budget_slack = b.k() as i64 - b.f_sum(full) as i64;
    let (lower, _) = scan_families(d, b, max_n)?;

    let k = b.k() as i64;
    let mut cut_best: Option<(i64, VertexSet, i64, i64)> = None;
    for x in subsets(full) {
        if x.is_empty() {
            continue;
        }
        let lhs = d.in_degree_raw(x) as i64;
        let rhs = k - b.g_sum(x) as i64;
        let slack = lhs - rhs;
        let better = match &cut_best {
            None => true,
            Some((s, set, _, _)) => {
                slack < *s
                    || (slack == *s
                        && (x.len() < set.len() || (x.len() == set.len() && x < *set)))
            }
        };
        if better {
            cut_best = Some((slack, x, lhs, rhs));
        }
    }
    let (cut_slack, cut_set, cut_lhs, cut_rhs) = cut_best.expect("graphs have a vertex");

    let mut slack_summary = BTreeMap::new();
    slack_summary.insert(ConditionId::RootBudget, budget_slack);
    slack_summary.insert(ConditionId::LowerBound, lower.min_slack);
    slack_summary.insert(ConditionId::UpperBound, cut_slack);
    let violation = budget
        .or_else(|| violation_from_scan(ConditionId::LowerBound, &lower))
        .or_else(|| {
            (cut_slack < 0).then_some(Violation {
                condition: ConditionId::UpperBound,
                witness: Some(Witness::Cut(cut_set)),
                lhs: cut_lhs,
                rhs: cut_rhs,
            })
        });
    Ok(FeasibilityReport {
        violation,
        slack_summary,
    })
}

/// Undirected special case (`A` must be empty): `k` edge-disjoint spanning
/// trees exist exactly when the instance with free roots (`f = 0`, `g = k`)
/// is feasible. A violating subpartition is translated to the classical
/// partition form by appending the complement block when it is nonempty;
/// the inequality `e_E >= k * (blocks - 1)` still fails on the translated
/// partition because appending the complement leaves `e_E` unchanged and
/// only raises the required bound.
pub fn check_nash_williams(
    g: &MixedGraph,
    k: u64,
    max_n: usize,
) -> Result<FeasibilityReport, Error> {
    if g.arc_count() > 0 {
        return Err(Error::ArcsPresent);
    }
    let b = RootBounds::uniform(k, g.vertex_count())?;
    let mut report = check_feasible(g, &b, max_n)?;
    if let Some(violation) = &mut report.violation {
        if let Some(Witness::Family(sp)) = &violation.witness {
            let complement = g.full_set().difference(sp.union());
            if !complement.is_empty() {
                let mut blocks = sp.blocks().to_vec();
                blocks.push(complement);
                let partition = Subpartition::new(blocks)?;
                let lhs = condition_lhs(g, &partition)? as i64;
                let rhs = k as i64 * (partition.block_count() as i64 - 1);
                *violation = Violation {
                    condition: violation.condition,
                    witness: Some(Witness::Family(partition)),
                    lhs,
                    rhs,
                };
            }
        }
    }
    Ok(report)
}
