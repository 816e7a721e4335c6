//! Simple hypergraphs on vertices `1..=n` and the combinatorial properties
//! used to decide equality of symbolic and ordinary powers.

mod balanced;
mod graph;
mod minors;
mod partite;
mod simplicial;
mod transversal;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_VARS};

pub use balanced::{BalanceMode, BalanceReport, HyperCycle, DEFAULT_BALANCE_BOUND};
pub use graph::Graph;
pub use minors::{KonigFailure, MinorOp, MinorTrace, Minors, PackingReport, DEFAULT_MINOR_BOUND};
pub use partite::{BadTriple, Partition};
pub use simplicial::DEFAULT_FOREST_BOUND;
pub use transversal::DEFAULT_TRANSVERSAL_BOUND;

pub(crate) use transversal::min_weight_hitting_set;

/// A set of vertices stored as a bit mask (bit `i` is vertex `i + 1`).
///
/// Ordered lexicographically by sorted vertex list, so `{1,2,3} < {1,2,9} < {2,3}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Panics if a vertex is 0 or above 64; callers validate input first.
    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=MAX_VARS).contains(&v), "vertex {v} out of range");
            bits |= 1u64 << (v - 1);
        }
        VertexSet(bits)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        Self::from_vertices([v])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VARS).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | VertexSet::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Vertices in increasing order (1-based).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Drops vertex `v` and shifts every higher vertex down by one.
    pub(crate) fn compact_out(self, v: usize) -> Self {
        let low = (1u64 << (v - 1)) - 1;
        VertexSet((self.0 & low) | ((self.0 >> 1) & !low))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// First problem found in raw hypergraph input. Edge indices are 0-based
/// positions in the input list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {edge} mentions vertex {vertex}, outside 1..={vertex_count}")]
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edges {first} and {second} are equal")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {inner} is contained in edge {outer}")]
    Containment { inner: usize, outer: usize },
    #[error("vertex {vertex} lies in no edge")]
    Uncovered { vertex: usize },
}

/// Checks raw input against the simple-hypergraph rules. `strict` also
/// requires every vertex to lie in some edge.
pub fn validate(vertex_count: usize, edges: &[Vec<usize>], strict: bool) -> std::result::Result<(), Violation> {
    if vertex_count == 0 {
        return Err(Violation::NoVertices);
    }
    if vertex_count > MAX_VARS {
        return Err(Violation::TooManyVertices(vertex_count));
    }
    let mut sets = Vec::with_capacity(edges.len());
    for (i, edge) in edges.iter().enumerate() {
        if edge.is_empty() {
            return Err(Violation::EmptyEdge { edge: i });
        }
        let mut set = VertexSet::EMPTY;
        for &v in edge {
            if v == 0 || v > vertex_count {
                return Err(Violation::VertexOutOfRange { edge: i, vertex: v, vertex_count });
            }
            if set.contains(v) {
                return Err(Violation::RepeatedVertex { edge: i, vertex: v });
            }
            set = set.with(v);
        }
        sets.push(set);
    }
    check_simple(&sets)?;
    if strict {
        let covered = sets.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
        if let Some(v) = (1..=vertex_count).find(|&v| !covered.contains(v)) {
            return Err(Violation::Uncovered { vertex: v });
        }
    }
    Ok(())
}

fn check_simple(sets: &[VertexSet]) -> std::result::Result<(), Violation> {
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i == j {
                continue;
            }
            if a == b {
                return Err(Violation::DuplicateEdge { first: i.min(j), second: i.max(j) });
            }
            if a.is_subset(*b) {
                return Err(Violation::Containment { inner: i, outer: j });
            }
        }
    }
    Ok(())
}

/// Inclusion-minimal members of `sets`, empties dropped, canonically sorted.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.retain(|s| !s.is_empty());
    sets.sort_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// A simple hypergraph: an antichain of nonempty edges over vertices `1..=n`.
///
/// Vertices lying in no edge are allowed; [`Hypergraph::validate`] with
/// `strict = true` rejects them. A vertex count of 0 only arises for minors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<VertexSet>,
}

/// `map[i]` is the original label of new vertex `i + 1`.
pub type Relabel = Vec<usize>;

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        validate(vertex_count, &edges, false)?;
        let sets = edges.into_iter().map(VertexSet::from_vertices).collect();
        Ok(Self::from_canonical(vertex_count, sets))
    }

    pub fn from_sets(vertex_count: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if vertex_count > MAX_VARS {
            return Err(Violation::TooManyVertices(vertex_count).into());
        }
        let universe = universe_mask(vertex_count);
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Violation::EmptyEdge { edge: i }.into());
            }
            if e.bits() & !universe != 0 {
                let vertex = e.iter().find(|&v| v > vertex_count).unwrap_or(0);
                return Err(Violation::VertexOutOfRange { edge: i, vertex, vertex_count }.into());
            }
        }
        check_simple(&edges)?;
        Ok(Self::from_canonical(vertex_count, edges))
    }

    /// Minimal elements of `sets` as a hypergraph (the clutter they generate).
    pub fn clutter(vertex_count: usize, sets: Vec<VertexSet>) -> Result<Self> {
        Self::from_sets(vertex_count, minimal_sets(sets))
    }

    fn from_canonical(vertex_count: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort();
        Hypergraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    pub fn vertex_mask(&self) -> VertexSet {
        VertexSet(universe_mask(self.vertex_count))
    }

    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    pub fn validate(&self, strict: bool) -> std::result::Result<(), Violation> {
        validate(self.vertex_count, &self.edge_lists(), strict)
    }

    pub fn is_r_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut lists = self.edge_lists();
        lists.push(edge.to_vec());
        Hypergraph::new(self.vertex_count, lists)
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = self.edges.iter().map(|e| Monomial::from_mask(self.vertex_count, e.bits())).collect();
        MonomialIdeal::minimalize(self.vertex_count, gens).expect("vertex count validated at construction")
    }

    /// Recovers the hypergraph whose edge ideal is `ideal`.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.is_unit() {
            return Err(Error::Precondition("the unit ideal has no hypergraph".into()));
        }
        let sets = ideal.generators().iter().map(|g| VertexSet(g.support_mask())).collect();
        Self::from_sets(ideal.nvars(), sets)
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.vertex_count {
            Err(Error::VariableOutOfRange { index: x, size: self.vertex_count })
        } else {
            Ok(())
        }
    }

    /// `H \ x`: removes `x` and every edge through it; vertices above `x` shift down.
    pub fn deletion(&self, x: usize) -> Result<(Hypergraph, Relabel)> {
        self.check_vertex(x)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(x))
            .map(|e| e.compact_out(x))
            .collect();
        Ok((Self::from_canonical(self.vertex_count - 1, edges), relabel_without(self.vertex_count, x)))
    }

    /// `H / x`: removes `x` from every edge and keeps the minimal nonempty results.
    pub fn contraction(&self, x: usize) -> Result<(Hypergraph, Relabel)> {
        self.contraction_of(&[x])
    }

    /// Contracts a set of vertices at once: removes them from every edge, drops
    /// edges that become empty, keeps the minimal rest.
    ///
    /// Because empty edges are dropped, contracting the same vertices one at a
    /// time can depend on the order: an edge may dominate another and then
    /// vanish. This simultaneous form is the one minors are built from.
    pub fn contraction_of(&self, xs: &[usize]) -> Result<(Hypergraph, Relabel)> {
        xs.iter().try_for_each(|&x| self.check_vertex(x))?;
        let gone = VertexSet::from_vertices(xs.iter().copied());
        let mut edges = minimal_sets(self.edges.iter().map(|e| e.difference(gone)).collect());
        for x in gone.to_vec().into_iter().rev() {
            edges.iter_mut().for_each(|e| *e = e.compact_out(x));
        }
        let relabel: Relabel = (1..=self.vertex_count).filter(|&v| !gone.contains(v)).collect();
        Ok((Self::from_canonical(relabel.len(), edges), relabel))
    }

    /// Edge-by-vertex 0/1 matrix, rows in canonical edge order.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        self.edges
            .iter()
            .map(|e| (1..=self.vertex_count).map(|v| e.contains(v) as u8).collect())
            .collect()
    }
}

pub(crate) fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn relabel_without(n: usize, x: usize) -> Relabel {
    (1..=n).filter(|&v| v != x).collect()
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph[{}]{:?}", self.vertex_count, self.edges)
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Hypergraph", 2)?;
        s.serialize_field("vertices", &self.vertex_count)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn bad() -> Hypergraph {
        Hypergraph::new(6, vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 2]]).unwrap()
    }

    pub fn cycle_graph(n: usize) -> Hypergraph {
        Hypergraph::new(n, (1..=n).map(|i| vec![i, i % n + 1]).collect()).unwrap()
    }

    pub fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }
}
