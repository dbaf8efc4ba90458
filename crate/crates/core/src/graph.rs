//! Mixed multigraphs and the elementary set quantities everything else is
//! built from.
//!
//! Vertices are opaque names mapped to dense indices in input order, so
//! vertex sets are exact bitmasks. Edges and arcs keep their input positions
//! as stable indices; parallel copies are distinct elements, which is what
//! makes "disjoint" packings meaningful on multigraphs.

use std::collections::BTreeMap;
use std::fmt;

use crate::Error;

/// Default cap for exhaustive subpartition/subset scans (Bell(11) = 678570).
pub const DEFAULT_MAX_N: usize = 10;

/// A set of vertex indices backed by a single `u64` bitmask.
///
/// Ordering is lexicographic on the sorted element lists: the set owning the
/// smallest element of the symmetric difference comes first. That gives every
/// deterministic tie-break in the crate a total order to lean on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v < 64, "vertex index {v} out of range");
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= 64, "vertex count {n} out of range");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 64, "vertex index {v} out of range");
        self.0 |= 1 << v;
    }

    pub fn with(mut self, v: usize) -> VertexSet {
        self.insert(v);
        self
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Iterates the contained vertex indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        if self.0 == other.0 {
            return std::cmp::Ordering::Equal;
        }
        // d is the smallest element the two sets disagree on. The set
        // holding d is smaller unless the other set has nothing past d,
        // in which case the other set is a proper prefix and wins.
        let d = (self.0 ^ other.0).trailing_zeros();
        let holder_is_self = self.0 >> d & 1 == 1;
        let non_holder = if holder_is_self { other.0 } else { self.0 };
        let non_holder_has_larger = d < 63 && non_holder >> (d + 1) != 0;
        if holder_is_self == non_holder_has_larger {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &VertexSet) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A family of pairwise disjoint nonempty vertex subsets.
///
/// Blocks are kept in canonical order (ascending smallest element), so equal
/// subpartitions compare equal regardless of construction order. The empty
/// subpartition (no blocks) is a valid value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subpartition {
    blocks: Vec<VertexSet>,
}

impl Subpartition {
    pub fn empty() -> Subpartition {
        Subpartition { blocks: Vec::new() }
    }

    /// Validates disjointness and nonemptiness, then canonicalizes block order.
    pub fn new(mut blocks: Vec<VertexSet>) -> Result<Subpartition, Error> {
        let mut seen = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() || b.intersects(seen) {
                return Err(Error::InvalidSubpartition);
            }
            seen = seen.union(*b);
        }
        // Disjoint blocks sort by their smallest element.
        blocks.sort();
        Ok(Subpartition { blocks })
    }

    /// Blocks already disjoint, nonempty and in canonical order.
    pub(crate) fn from_canonical(blocks: Vec<VertexSet>) -> Subpartition {
        debug_assert!(Subpartition::new(blocks.clone()).is_ok_and(|s| s.blocks == blocks));
        Subpartition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Union of all blocks.
    pub fn union(&self) -> VertexSet {
        self.blocks
            .iter()
            .fold(VertexSet::EMPTY, |acc, b| acc.union(*b))
    }
}

impl fmt::Debug for Subpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b:?}")?;
        }
        write!(f, "]")
    }
}

/// Number of arborescences plus per-vertex root-count bounds `f <= g`.
///
/// Unspecified bounds default to `f = 0` and `g = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBounds {
    k: u64,
    f: Vec<u64>,
    g: Vec<u64>,
}

impl RootBounds {
    pub fn new(k: u64, f: Vec<u64>, g: Vec<u64>) -> Result<RootBounds, Error> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if f.len() != g.len() {
            return Err(Error::BoundsMismatch {
                bounds: f.len(),
                graph: g.len(),
            });
        }
        for (v, (&fv, &gv)) in f.iter().zip(&g).enumerate() {
            if fv > gv {
                return Err(Error::BoundsOrder(v));
            }
        }
        Ok(RootBounds { k, f, g })
    }

    /// Unconstrained roots: `f = 0`, `g = k` everywhere.
    pub fn uniform(k: u64, n: usize) -> Result<RootBounds, Error> {
        RootBounds::new(k, vec![0; n], vec![k; n])
    }

    /// All k roots pinned at one vertex: `f = g = k` there, zero elsewhere.
    pub fn single_root(k: u64, n: usize, root: usize) -> Result<RootBounds, Error> {
        if root >= n {
            return Err(Error::VertexIndex {
                index: root,
                count: n,
            });
        }
        let mut f = vec![0; n];
        let mut g = vec![0; n];
        f[root] = k;
        g[root] = k;
        RootBounds::new(k, f, g)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn f(&self, v: usize) -> u64 {
        self.f[v]
    }

    pub fn g(&self, v: usize) -> u64 {
        self.g[v]
    }

    pub fn f_values(&self) -> &[u64] {
        &self.f
    }

    pub fn g_values(&self) -> &[u64] {
        &self.g
    }

    pub fn f_sum(&self, x: VertexSet) -> u64 {
        tilde_sum(&self.f, x)
    }

    pub fn g_sum(&self, x: VertexSet) -> u64 {
        tilde_sum(&self.g, x)
    }

    pub(crate) fn check_matches(&self, graph: &MixedGraph) -> Result<(), Error> {
        if self.len() != graph.vertex_count() {
            return Err(Error::BoundsMismatch {
                bounds: self.len(),
                graph: graph.vertex_count(),
            });
        }
        Ok(())
    }
}

/// Sums a per-vertex function over a set; indices beyond the slice use the
/// default value 0.
pub fn tilde_sum(values: &[u64], x: VertexSet) -> u64 {
    x.iter()
        .filter(|&v| v < values.len())
        .map(|v| values[v])
        .sum()
}

/// A mixed multigraph: named vertices, undirected edges and directed arcs.
///
/// No loops. Parallel edges and arcs are distinct elements addressed by their
/// stable position in the input lists.
#[derive(Clone, Debug)]
pub struct MixedGraph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl MixedGraph {
    pub fn new(
        vertices: &[&str],
        edges: &[(&str, &str)],
        arcs: &[(&str, &str)],
    ) -> Result<MixedGraph, Error> {
        if vertices.is_empty() {
            return Err(Error::NoVertices);
        }
        if vertices.len() > 64 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut index = BTreeMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for (i, &name) in vertices.iter().enumerate() {
            if index.insert(name.to_string(), i).is_some() {
                return Err(Error::DuplicateVertex(name.to_string()));
            }
            names.push(name.to_string());
        }
        let resolve = |name: &str| -> Result<usize, Error> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut edge_list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let (ui, vi) = (resolve(u)?, resolve(v)?);
            if ui == vi {
                return Err(Error::LoopAt(u.to_string()));
            }
            edge_list.push((ui, vi));
        }
        let mut arc_list = Vec::with_capacity(arcs.len());
        for &(tail, head) in arcs {
            let (ti, hi) = (resolve(tail)?, resolve(head)?);
            if ti == hi {
                return Err(Error::LoopAt(tail.to_string()));
            }
            arc_list.push((ti, hi));
        }
        Ok(MixedGraph {
            names,
            index,
            edges: edge_list,
            arcs: arc_list,
        })
    }

    /// Builds a graph over vertices `v0 .. v{n-1}` from index pairs.
    pub fn from_index_pairs(
        n: usize,
        edges: Vec<(usize, usize)>,
        arcs: Vec<(usize, usize)>,
    ) -> Result<MixedGraph, Error> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        for &(u, v) in edges.iter().chain(&arcs) {
            let bad = [u, v].into_iter().find(|&x| x >= n);
            if let Some(index) = bad {
                return Err(Error::VertexIndex { index, count: n });
            }
            if u == v {
                return Err(Error::LoopAt(names[u].clone()));
            }
        }
        Ok(MixedGraph {
            names,
            index,
            edges,
            arcs,
        })
    }

    /// Assembles a graph from parts already known to be valid.
    pub(crate) fn from_parts(
        names: Vec<String>,
        index: BTreeMap<String, usize>,
        edges: Vec<(usize, usize)>,
        arcs: Vec<(usize, usize)>,
    ) -> MixedGraph {
        MixedGraph {
            names,
            index,
            edges,
            arcs,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn names_and_index(&self) -> (Vec<String>, BTreeMap<String, usize>) {
        (self.names.clone(), self.index.clone())
    }

    /// Undirected edges as `(u, v)` index pairs in stable order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Directed arcs as `(tail, head)` index pairs in stable order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    fn check_set(&self, x: VertexSet) -> Result<(), Error> {
        if !x.is_subset_of(self.full_set()) {
            let index = x.difference(self.full_set()).iter().next().unwrap();
            return Err(Error::VertexIndex {
                index,
                count: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Number of arcs (with multiplicity) whose head is in `x` and whose tail
    /// is outside `x`.
    pub fn in_degree_arcs(&self, x: VertexSet) -> Result<u64, Error> {
        self.check_set(x)?;
        Ok(self.in_degree_raw(x))
    }

    pub(crate) fn in_degree_raw(&self, x: VertexSet) -> u64 {
        self.arcs
            .iter()
            .filter(|&&(tail, head)| x.contains(head) && !x.contains(tail))
            .count() as u64
    }

    /// Number of undirected edges (with multiplicity) with one end in some
    /// block of `p` and the other end in a different block or outside all
    /// blocks. Edges internal to a block or entirely outside do not count.
    pub fn crossing_edges(&self, p: &Subpartition) -> Result<u64, Error> {
        self.check_set(p.union())?;
        Ok(self.crossing_raw(p.blocks()))
    }

    pub(crate) fn crossing_raw(&self, blocks: &[VertexSet]) -> u64 {
        let block_of = |v: usize| blocks.iter().position(|b| b.contains(v));
        self.edges
            .iter()
            .filter(|&&(u, v)| match (block_of(u), block_of(v)) {
                (Some(i), Some(j)) => i != j,
                (Some(_), None) | (None, Some(_)) => true,
                (None, None) => false,
            })
            .count() as u64
    }

    /// Vertices reachable from `from` traversing arcs forward and edges in
    /// either direction.
    pub fn mixed_reachable(&self, from: VertexSet) -> Result<VertexSet, Error> {
        self.check_set(from)?;
        let mut reached = from;
        loop {
            let mut grew = false;
            for &(tail, head) in &self.arcs {
                if reached.contains(tail) && !reached.contains(head) {
                    reached.insert(head);
                    grew = true;
                }
            }
            for &(u, v) in &self.edges {
                if reached.contains(u) != reached.contains(v) {
                    reached = reached.with(u).with(v);
                    grew = true;
                }
            }
            if !grew {
                return Ok(reached);
            }
        }
    }
}

/// Streams every subpartition of `ground` exactly once (up to block order),
/// including the empty one. The total count is Bell(|ground| + 1): each
/// element is either unassigned or in one of the blocks.
pub fn subpartitions(ground: VertexSet, max_n: usize) -> Result<SubpartitionIter, Error> {
    let n = ground.len();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    Ok(SubpartitionIter {
        elems: ground.iter().collect(),
        labels: vec![0; n],
        exhausted: false,
        fresh: true,
    })
}

/// Restricted-growth-string enumeration: label 0 marks "outside every
/// block", labels `1..` name blocks in order of first appearance, so the
/// produced block order is already canonical.
#[derive(Clone)]
pub struct SubpartitionIter {
    elems: Vec<usize>,
    labels: Vec<usize>,
    exhausted: bool,
    fresh: bool,
}

impl SubpartitionIter {
    fn current(&self) -> Subpartition {
        let block_count = self.labels.iter().copied().max().unwrap_or(0);
        let mut blocks = vec![VertexSet::EMPTY; block_count];
        for (pos, &label) in self.labels.iter().enumerate() {
            if label > 0 {
                blocks[label - 1].insert(self.elems[pos]);
            }
        }
        Subpartition::from_canonical(blocks)
    }

    fn advance(&mut self) -> bool {
        // Rightmost position that can take a larger label, where position i
        // may use labels 0 ..= max(labels before i) + 1.
        for i in (0..self.labels.len()).rev() {
            let cap = self.labels[..i].iter().copied().max().unwrap_or(0) + 1;
            if self.labels[i] < cap {
                self.labels[i] += 1;
                for j in i + 1..self.labels.len() {
                    self.labels[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SubpartitionIter {
    type Item = Subpartition;

    fn next(&mut self) -> Option<Subpartition> {
        if self.exhausted {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// All subsets of `ground`, the empty set first, in ascending order of the
/// counter over the ground elements.
pub fn subsets(ground: VertexSet) -> impl Iterator<Item = VertexSet> {
    let elems: Vec<usize> = ground.iter().collect();
    let total: u64 = 1 << elems.len();
    (0..total).map(move |mask| {
        VertexSet::from_indices(
            elems
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> MixedGraph {
        MixedGraph::new(&["a", "b", "c"], &[], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    fn triangle() -> MixedGraph {
        MixedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")], &[]).unwrap()
    }

    #[test]
    fn in_degree_counts_entering_arcs() {
        let g = cycle3();
        assert_eq!(g.in_degree_arcs(VertexSet::singleton(1)).unwrap(), 1);
        assert_eq!(g.in_degree_arcs(g.full_set()).unwrap(), 0);
        let parallel =
            MixedGraph::new(&["a", "b"], &[], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(parallel.in_degree_arcs(VertexSet::singleton(1)).unwrap(), 2);
    }

    #[test]
    fn in_degree_rejects_unknown_vertex() {
        let g = cycle3();
        assert!(matches!(
            g.in_degree_arcs(VertexSet::singleton(5)),
            Err(Error::VertexIndex { index: 5, .. })
        ));
    }

    #[test]
    fn crossing_edges_examples() {
        let g = triangle();
        let singletons = Subpartition::new(vec![
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
        ])
        .unwrap();
        assert_eq!(g.crossing_edges(&singletons).unwrap(), 3);

        let ab = Subpartition::new(vec![VertexSet::from_indices([0, 1])]).unwrap();
        assert_eq!(g.crossing_edges(&ab).unwrap(), 2);

        assert_eq!(g.crossing_edges(&Subpartition::empty()).unwrap(), 0);
    }

    #[test]
    fn overlapping_blocks_rejected() {
        let err = Subpartition::new(vec![
            VertexSet::from_indices([0, 1]),
            VertexSet::from_indices([1, 2]),
        ]);
        assert!(matches!(err, Err(Error::InvalidSubpartition)));
        assert!(matches!(
            Subpartition::new(vec![VertexSet::EMPTY]),
            Err(Error::InvalidSubpartition)
        ));
    }

    #[test]
    fn tilde_sum_examples() {
        let h = vec![1, 2];
        assert_eq!(tilde_sum(&h, VertexSet::from_indices([0, 1])), 3);
        assert_eq!(tilde_sum(&h, VertexSet::EMPTY), 0);
        // Entries beyond the map default to zero.
        assert_eq!(tilde_sum(&h, VertexSet::singleton(2)), 0);
    }

    #[test]
    fn subpartitions_of_one_and_two_vertices() {
        let one: Vec<_> = subpartitions(VertexSet::full(1), 10).unwrap().collect();
        assert_eq!(one.len(), 2);
        assert_eq!(one[0], Subpartition::empty());
        assert_eq!(
            one[1],
            Subpartition::new(vec![VertexSet::singleton(0)]).unwrap()
        );

        let two: Vec<_> = subpartitions(VertexSet::full(2), 10).unwrap().collect();
        assert_eq!(two.len(), 5);
        let expect: Vec<Subpartition> = vec![
            Subpartition::empty(),
            Subpartition::new(vec![VertexSet::singleton(0)]).unwrap(),
            Subpartition::new(vec![VertexSet::singleton(1)]).unwrap(),
            Subpartition::new(vec![VertexSet::from_indices([0, 1])]).unwrap(),
            Subpartition::new(vec![VertexSet::singleton(0), VertexSet::singleton(1)]).unwrap(),
        ];
        for sp in &expect {
            assert!(two.contains(sp), "missing {sp:?}");
        }
    }

    #[test]
    fn subpartitions_of_three_vertices_count() {
        // Bell(4) = 15 by direct enumeration.
        let three: Vec<_> = subpartitions(VertexSet::full(3), 10).unwrap().collect();
        assert_eq!(three.len(), 15);
        let mut dedup = three.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 15);
    }

    #[test]
    fn subpartitions_respect_limit() {
        assert!(matches!(
            subpartitions(VertexSet::full(11), 10),
            Err(Error::EnumerationLimit { n: 11, limit: 10 })
        ));
    }

    #[test]
    fn mixed_reachable_examples() {
        let g = MixedGraph::new(&["a", "b", "c"], &[("a", "b")], &[("b", "c")]).unwrap();
        assert_eq!(
            g.mixed_reachable(VertexSet::singleton(0)).unwrap(),
            VertexSet::full(3)
        );

        let arc_only = MixedGraph::new(&["b", "c"], &[], &[("b", "c")]).unwrap();
        assert_eq!(
            arc_only.mixed_reachable(VertexSet::singleton(1)).unwrap(),
            VertexSet::singleton(1)
        );

        let disconnected = MixedGraph::new(&["a", "b"], &[], &[]).unwrap();
        assert_eq!(
            disconnected.mixed_reachable(VertexSet::singleton(0)).unwrap(),
            VertexSet::singleton(0)
        );
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(
            MixedGraph::new(&["a", "a"], &[], &[]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            MixedGraph::new(&["a"], &[("a", "a")], &[]),
            Err(Error::LoopAt(_))
        ));
        assert!(matches!(
            MixedGraph::new(&["a"], &[("a", "b")], &[]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(MixedGraph::new(&[], &[], &[]), Err(Error::NoVertices)));
    }

    #[test]
    fn vertex_set_order_is_lexicographic_on_elements() {
        let a = VertexSet::from_indices([0, 3]);
        let b = VertexSet::from_indices([1, 2]);
        assert!(a < b);
        let c = VertexSet::from_indices([1]);
        assert!(c < b);
        assert!(VertexSet::EMPTY < c);
    }

    #[test]
    fn root_bounds_validation() {
        assert!(matches!(
            RootBounds::new(0, vec![0], vec![0]),
            Err(Error::ZeroK)
        ));
        assert!(matches!(
            RootBounds::new(1, vec![2], vec![1]),
            Err(Error::BoundsOrder(0))
        ));
        let b = RootBounds::uniform(3, 2).unwrap();
        assert_eq!(b.f(0), 0);
        assert_eq!(b.g(1), 3);
    }
}
