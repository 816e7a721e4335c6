use std::fmt;

use serde::{Serialize, Serializer};

use super::{Hypergraph, VertexSet};
use crate::error::{Error, Result};
use crate::monomial::MAX_VARS;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if vertex_count > MAX_VARS {
            return Err(Error::InvalidGraph(format!("{vertex_count} vertices exceed the maximum of 64")));
        }
        let mut adjacency = vec![VertexSet::EMPTY; vertex_count];
        let mut canon = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(Error::InvalidGraph(format!("edge {i} ({a},{b}) leaves 1..={vertex_count}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {i} is a loop at {a}")));
            }
            if adjacency[a - 1].contains(b) {
                return Err(Error::InvalidGraph(format!("edge {i} ({a},{b}) is repeated")));
            }
            adjacency[a - 1] = adjacency[a - 1].with(b);
            adjacency[b - 1] = adjacency[b - 1].with(a);
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        Ok(Graph { vertex_count, edges: canon, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.vertex_count && self.adjacency[a - 1].contains(b)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(1);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen.len() == self.vertex_count
    }

    /// A proper 2-colouring as `(side A, side B)`, if one exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![None::<bool>; self.vertex_count];
        for s in 1..=self.vertex_count {
            if colour[s - 1].is_some() {
                continue;
            }
            colour[s - 1] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v - 1].unwrap();
                for w in self.neighbors(v).iter() {
                    match colour[w - 1] {
                        None => {
                            colour[w - 1] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = VertexSet::from_vertices((1..=self.vertex_count).filter(|&v| colour[v - 1] == Some(false)));
        let b = VertexSet::from_vertices((1..=self.vertex_count).filter(|&v| colour[v - 1] == Some(true)));
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The graph as a 2-uniform hypergraph (isolated vertices kept).
    pub fn edge_hypergraph(&self) -> Hypergraph {
        let sets = self.edges.iter().map(|&(a, b)| VertexSet::from_vertices([a, b])).collect();
        Hypergraph::from_sets(self.vertex_count, sets).expect("simple graph edges form a clutter")
    }

    /// Connected, every vertex of degree <= 2, no cycle: a path `P_n`.
    pub fn is_path(&self) -> bool {
        self.is_connected()
            && self.edges.len() + 1 == self.vertex_count
            && (1..=self.vertex_count).all(|v| self.degree(v) <= 2)
    }

    /// Connected and 2-regular: a cycle `C_n` with `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3 && self.is_connected() && (1..=self.vertex_count).all(|v| self.degree(v) == 2)
    }

    /// Vertices of a cycle graph in traversal order starting at 1.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if !self.is_cycle() {
            return None;
        }
        let mut order = vec![1];
        let mut prev = 0;
        let mut cur = 1;
        while order.len() < self.vertex_count {
            let next = self.neighbors(cur).iter().find(|&w| w != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph[{}]{:?}", self.vertex_count, self.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("vertices", &self.vertex_count)?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}
