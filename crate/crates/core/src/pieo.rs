//! Uncrossing machinery for multiset families of vertex sets.
//!
//! A properly intersecting pair `X, Y` (both differences and the
//! intersection nonempty) can be eliminated three ways: replace the pair by
//! union and intersection (Type 1), by the union alone (Type 2), or by the
//! intersection alone (Type 3). The Type-1 driver [`laminarize_type1`]
//! starts from the multiset union of two disjoint families and uncrosses
//! until the family is laminar, then splits it into the maximal members and
//! the rest.
//!
//! Type-1 steps preserve, for every element, the number of members
//! containing it; that invariant is what makes the final split well behaved
//! and is re-checked by the property suite.

use std::fmt;

use crate::graph::VertexSet;
use crate::rng::SplitMix64;
use crate::Error;

/// True when `X ∩ Y`, `X \ Y` and `Y \ X` are all nonempty.
pub fn properly_intersecting(x: VertexSet, y: VertexSet) -> bool {
    x.intersects(y) && !x.difference(y).is_empty() && !y.difference(x).is_empty()
}

/// A multiset of nonempty vertex subsets over some ground set. Members keep
/// their positions; equal members may repeat.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(members: Vec<VertexSet>) -> Result<SetFamily, Error> {
        if members.iter().any(VertexSet::is_empty) {
            return Err(Error::InvalidSubpartition);
        }
        Ok(SetFamily { members })
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn union(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |acc, m| acc.union(*m))
    }

    /// Number of members containing `v`.
    pub fn count_containing(&self, v: usize) -> usize {
        self.members.iter().filter(|m| m.contains(v)).count()
    }

    /// No two distinct positions intersect.
    pub fn is_disjoint_family(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        for m in &self.members {
            if m.intersects(seen) {
                return false;
            }
            seen = seen.union(*m);
        }
        true
    }

    /// No properly intersecting pair: any two members are nested or disjoint.
    pub fn is_laminar(&self) -> bool {
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i + 1..] {
                if properly_intersecting(x, y) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

impl From<&crate::graph::Subpartition> for SetFamily {
    fn from(sp: &crate::graph::Subpartition) -> SetFamily {
        SetFamily {
            members: sp.blocks().to_vec(),
        }
    }
}

/// The three elimination types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieoType {
    /// Replace the pair by `X ∪ Y` and `X ∩ Y`.
    Type1,
    /// Replace the pair by `X ∪ Y` only.
    Type2,
    /// Replace the pair by `X ∩ Y` only.
    Type3,
}

/// One elimination step on members `i` and `j`, which must properly
/// intersect. Type 1 writes the union at position `i` and the intersection
/// at position `j`; Types 2 and 3 write their single set at position `i`
/// and drop position `j`.
pub fn pieo_step(f: &SetFamily, i: usize, j: usize, ty: PieoType) -> Result<SetFamily, Error> {
    let get = |idx: usize| -> Result<VertexSet, Error> {
        f.members.get(idx).copied().ok_or(Error::ElementIndex {
            index: idx,
            kind: "family member",
        })
    };
    let x = get(i)?;
    let y = get(j)?;
    if i == j || !properly_intersecting(x, y) {
        return Err(Error::NotProperlyIntersecting { i, j });
    }
    let mut members = f.members.clone();
    match ty {
        PieoType::Type1 => {
            members[i] = x.union(y);
            members[j] = x.intersection(y);
        }
        PieoType::Type2 => {
            members[i] = x.union(y);
            members.remove(j);
        }
        PieoType::Type3 => {
            members[i] = x.intersection(y);
            members.remove(j);
        }
    }
    Ok(SetFamily { members })
}

/// One recorded Type-1 step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieoStep {
    pub pair: (usize, usize),
    pub union: VertexSet,
    pub intersection: VertexSet,
}

/// Full record of a Type-1 run: the starting multiset union, every step,
/// the laminar result, and its split into maximal members and remainder.
#[derive(Clone, Debug)]
pub struct LaminarizationTrace {
    pub initial: SetFamily,
    pub steps: Vec<PieoStep>,
    pub laminar: SetFamily,
    /// One occurrence of every distinct maximal member, canonically ordered.
    pub maximal: SetFamily,
    /// Everything else: non-maximal members plus surplus copies of
    /// duplicated maximal members, canonically ordered.
    pub remainder: SetFamily,
}

/// How the next properly intersecting pair is picked.
#[derive(Clone, Copy, Debug)]
pub enum PairSelection {
    /// First pair in `(i, j)` position order. Deterministic.
    Canonical,
    /// Uniform pick with a seeded generator; the final laminar family may
    /// differ but the split invariants hold for every order.
    Seeded(u64),
}

/// Repeatedly applies Type-1 steps to the multiset union of two disjoint
/// families until no properly intersecting pair remains.
///
/// Guarantees, for disjoint input families: the member count of
/// `maximal` plus `remainder` equals `|f1| + |f2|`; the union of `maximal`
/// is `∪f1 ∪ ∪f2`; the union of `remainder` is `∪f1 ∩ ∪f2`; and both parts
/// are themselves disjoint families.
pub fn laminarize_type1(f1: &SetFamily, f2: &SetFamily) -> Result<LaminarizationTrace, Error> {
    laminarize_type1_with(f1, f2, PairSelection::Canonical)
}

/// [`laminarize_type1`] with an explicit pair-selection policy.
pub fn laminarize_type1_with(
    f1: &SetFamily,
    f2: &SetFamily,
    selection: PairSelection,
) -> Result<LaminarizationTrace, Error> {
    if !f1.is_disjoint_family() || !f2.is_disjoint_family() {
        return Err(Error::FamilyNotDisjoint);
    }
    let mut members: Vec<VertexSet> = f1.members.iter().chain(&f2.members).copied().collect();
    let initial = SetFamily {
        members: members.clone(),
    };
    let mut rng = match selection {
        PairSelection::Canonical => None,
        PairSelection::Seeded(seed) => Some(SplitMix64::new(seed)),
    };
    let mut steps = Vec::new();
    // Sum of squared member sizes strictly grows per step, so the run is
    // bounded; the cap only trips on a broken step rule.
    let step_cap = members.len() * members.len() * 64 + 8;
    loop {
        let pairs: Vec<(usize, usize)> = (0..members.len())
            .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| properly_intersecting(members[i], members[j]))
            .collect();
        if pairs.is_empty() {
            break;
        }
        // Every properly intersecting member must be maximal in the current
        // family; anything else contradicts the per-element count invariant.
        for &(i, j) in &pairs {
            for &idx in &[i, j] {
                let covered = members
                    .iter()
                    .enumerate()
                    .any(|(o, m)| o != idx && members[idx].is_subset_of(*m) && members[idx] != *m);
                if covered {
                    return Err(Error::Internal(format!(
                        "properly intersecting member {:?} is not maximal",
                        members[idx]
                    )));
                }
            }
        }
        let &(i, j) = match &mut rng {
            None => &pairs[0],
            Some(rng) => &pairs[rng.below(pairs.len())],
        };
        let (x, y) = (members[i], members[j]);
        members[i] = x.union(y);
        members[j] = x.intersection(y);
        steps.push(PieoStep {
            pair: (i, j),
            union: members[i],
            intersection: members[j],
        });
        if steps.len() > step_cap {
            return Err(Error::Internal(
                "uncrossing failed to terminate".to_string(),
            ));
        }
    }
    let laminar = SetFamily {
        members: members.clone(),
    };

    // Split: one occurrence of each distinct maximal set is maximal, the
    // rest (nested members and surplus duplicate copies) is the remainder.
    let mut maximal: Vec<VertexSet> = Vec::new();
    let mut remainder: Vec<VertexSet> = Vec::new();
    for (idx, &m) in members.iter().enumerate() {
        let strictly_covered = members
            .iter()
            .any(|&o| m.is_subset_of(o) && m != o);
        let first_occurrence = members[..idx].iter().all(|&o| o != m);
        if !strictly_covered && first_occurrence {
            maximal.push(m);
        } else {
            remainder.push(m);
        }
    }
    maximal.sort();
    remainder.sort();
    Ok(LaminarizationTrace {
        initial,
        steps,
        laminar,
        maximal: SetFamily { members: maximal },
        remainder: SetFamily { members: remainder },
    })
}
